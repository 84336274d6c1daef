// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "edcurve/eddeg.hpp"
#include "edcurve/grassmann.hpp"
#include "edcurve/io.hpp"
#include "edcurve/multidegree.hpp"

using namespace edcurve;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void check(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "first failure: ";
      else detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // <= 0 means untimed
  std::function<void(Outcome&)> body;
};

std::string input(const char* name) { return std::string(EDCURVE_INPUTS) + "/" + name; }

std::string str(int v) { return std::to_string(v); }

UniPoly random_poly(Rng& rng, int d, std::int64_t bound = 9) {
  std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = Rat(static_cast<long>(rng.uniform_int(-bound, bound)));
  while (c.back() == 0) c.back() = Rat(static_cast<long>(rng.uniform_int(-bound, bound)));
  return UniPoly(c);
}

UniPoly from_roots(const std::vector<Rat>& roots) {
  UniPoly p = UniPoly::constant(1);
  for (const auto& r : roots) p = p * UniPoly::linear_root(r);
  return p;
}

/// Sylvester matrix determinant, written independently of the PRS code.
Rat sylvester_resultant(const UniPoly& p, const UniPoly& q) {
  const int m = p.degree(), n = q.degree();
  RatMatrix s(m + n, m + n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(r, r + k) = p.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(n + r, r + k) = q.coeff(n - k);
  return determinant(s);
}

// ---------------------------------------------------------------------------

void c1(Outcome& o) {
  const auto f = curve_from_json(read_json_file(input("twisted_cubic.json")));
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const auto t0 = std::chrono::steady_clock::now();
    const int ed = ed_degree_affine(f, random_arrangement(s, 1, 2, 3), s).ed_degree;
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.check(ed == 7, "seed " + std::to_string(s) + " gave " + str(ed));
    o.check(dt < 1.0, "seed " + std::to_string(s) + " took " + std::to_string(dt) + " s");
  }
}

void c2(Outcome& o) {
  const auto f = curve_from_json(read_json_file(input("line.json")));
  for (int n = 1; n <= 6; ++n) {
    const int ed = ed_degree_affine(f, random_arrangement(derive_seed(2, n), n, 2, 3), 1).ed_degree;
    o.check(ed == 3 * n - 2, "n = " + str(n) + " gave " + str(ed));
  }
}

void c3(Outcome& o) {
  int cells = 0, certified = 0, crossed = 0;
  auto run_cell = [&](const RationalCurve& f, int e, int n, int h, std::uint64_t seed) {
    ++cells;
    const auto arr = random_arrangement(seed, n, h, f.N());
    if (!genericity_certificate(arr, f).passes()) return;
    ++certified;
    const auto rep = ed_degree_affine(f, arr, seed);
    const std::string tag = "e=" + str(e) + " n=" + str(n) + " h=" + str(h) + " N=" + str(f.N());
    o.check(rep.ed_degree == 3 * e * n - 2, tag + " gave " + str(rep.ed_degree));
    if (rep.certificate.immersion) {
      ++crossed;
      const int x = euler_cross_check(f, arr, derive_seed(seed, 5));
      o.check(x == rep.ed_degree, tag + " cross-check " + str(x));
    }
  };
  std::uint64_t cell = 0;
  for (int e = 1; e <= 4; ++e)
    for (int n = 1; n <= 4; ++n)
      for (int h : {2, 3}) {
        if (e >= 3 && h < e) run_cell(rational_normal_curve(e, e), e, n, h, derive_seed(3, cell++));
        for (int N = std::max(3, e); N <= 5; ++N) {
          if (h >= N) continue;
          run_cell(random_curve(derive_seed(33, cell), e, N), e, n, h, derive_seed(3, cell));
          ++cell;
        }
      }
  o.detail << (o.ok ? "" : "; ") << cells << " cells, " << certified << " certified, " << crossed << " cross-checked";
  o.check(certified >= cells * 9 / 10, "too few certified cells");
}

void c4(Outcome& o) {
  const auto f = curve_from_json(read_json_file(input("twisted_cubic.json")));
  const auto arr = arrangement_from_json(read_json_file(input("two_view_example.json")));
  const auto rep = ed_degree_affine(f, arr, 1);
  o.check(rep.ed_degree == 10, "expected 10, computed " + str(rep.ed_degree) + " (certificate " +
                                    (rep.certificate.passes() ? "passes" : "fails") + ", 3en-2 = " +
                                    str(rep.formula_value) + ")");
}

void c5(Outcome& o) {
  const auto f = rational_normal_curve(3, 3);
  for (int n : {1, 2}) {
    const int ed = ed_degree_affine(f, random_arrangement(5, n, 2, 3, 10, zero_corner_support()), 1).ed_degree;
    o.check(ed == (n == 1 ? 7 : 13), "zero corner n = " + str(n) + " gave " + str(ed));
  }
  const int ed = ed_degree_affine(rational_normal_curve(5, 5), random_arrangement(11, 1, 2, 5, 10, block_support()), 1)
                     .ed_degree;
  o.check(ed == 9, "block family gave " + str(ed));
}

void c6(Outcome& o) {
  const auto f = curve_from_json(read_json_file(input("cuspidal_cubic.json")));
  const auto arr = arrangement_from_json(read_json_file(input("cusp_camera.json")));
  const auto rep = ed_degree_affine(f, arr, 1);
  o.check(rep.ed_degree == 6, "gave " + str(rep.ed_degree));
  o.check(rep.removed_immersion_factors == 1, "removed " + str(rep.removed_immersion_factors) + " cusp roots");
  bool refused = false;
  try {
    euler_cross_check(f, arr, 1);
  } catch (const CrossCheckRefused& e) {
    refused = std::string(e.what()).find("immersion") != std::string::npos;
  }
  o.check(refused, "cross-check did not refuse");
}

void c7(Outcome& o) {
  for (int h : {2, 3})
    for (int n = 1; n <= 5; ++n) {
      std::uint64_t s = derive_seed(7, static_cast<std::uint64_t>(10 * h + n));
      Arrangement wedge = wedge_arrangement(random_arrangement(s, n, h, 3));
      while (!genericity_certificate(wedge, l3_curve()).passes()) wedge = wedge_arrangement(random_arrangement(++s, n, h, 3));
      const int ed = ed_degree_affine(l3_curve(), wedge, s).ed_degree;
      o.check(ed == 6 * n - 2, "h=" + str(h) + " n=" + str(n) + " gave " + str(ed));
    }
}

void c8(Outcome& o) {
  const auto arr = arrangement_from_json(read_json_file(input("wedge_example.json")));
  const RatMatrix expected({{-1, 0, 0, 3, 4, 0}, {0, 5, 0, 10, 0, -20}, {0, 0, 0, -5, 0, 0}});
  o.check(wedge_camera(arr[0], 2, SubsetOrder::lex).entries == expected, "example wedge matrix differs");
  Rng rng(88);
  auto random_matrix = [&](int r, int c) {
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = Rat(static_cast<long>(rng.uniform_int(-6, 6)));
    return m;
  };
  int pairs = 0;
  while (pairs < 50) {
    const RatMatrix a = random_matrix(3, 4), b = random_matrix(4, 4);
    if (rank(a) < 3 || rank(b) < 4) continue;
    for (int k = 1; k <= 3; ++k) {
      const RatMatrix lhs = wedge_camera(Camera(a * b), k).entries;
      const RatMatrix rhs = wedge_camera(Camera(a), k).entries * wedge_camera(Camera(b), k).entries;
      o.check(lhs == rhs, "pair " + str(pairs) + " k = " + str(k));
    }
    ++pairs;
  }
}

void c9(Outcome& o) {
  const MultiDeg p = parse_multideg("T1+T2", 2, 8) * parse_multideg("T1+2*T2", 2, 8) * parse_multideg("T1+3*T2", 2, 8);
  o.check(to_string(p) == "T1^3 + 6*T1^2*T2 + 11*T1*T2^2 + 6*T2^3", "product was " + to_string(p));
  for (int e = 1; e <= 5; ++e)
    for (int n = 1; n <= 5; ++n)
      for (int h : {2, 3}) {
        const auto top = md_top_coefficient(curve_multidegree(e, n, h) * isotropic_hypersurface_multidegree(n, h));
        o.check(top == 2 * e * n, "e=" + str(e) + " n=" + str(n) + " h=" + str(h));
      }
}

void c10(Outcome& o) {
  Rng rng(10);
  auto random_bezier = [&](int E) {
    std::vector<Point3Affine> pts;
    for (int i = 0; i <= E; ++i) pts.push_back({rng.uniform_rat(9, 2), rng.uniform_rat(9, 2), rng.uniform_rat(9, 2)});
    return BezierCurve(pts);
  };
  for (auto [e1, e2] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
    const RationalCurve f = bezier_scroll(random_bezier(e1), random_bezier(e2));
    const int E = e1 + e2;
    o.check(f.degree() == E, "scroll degree " + str(f.degree()) + " for E = " + str(E));
    for (int n : {1, 2}) {
      std::uint64_t s = derive_seed(static_cast<std::uint64_t>(E), static_cast<std::uint64_t>(n));
      Arrangement wedge = wedge_arrangement(random_arrangement(s, n, 2, 3));
      while (!genericity_certificate(wedge, f).passes()) wedge = wedge_arrangement(random_arrangement(++s, n, 2, 3));
      const int ed = ed_degree_affine(f, wedge, s).ed_degree;
      o.check(ed == 3 * E * n - 2, "(" + str(e1) + "," + str(e2) + ") n=" + str(n) + " gave " + str(ed));
    }
  }
}

void c11(Outcome& o) {
  for (int e = 1; e <= 5; ++e) {
    const int v = projective_ed_degree_smooth_curve(rational_normal_curve(e, e));
    o.check(v == 3 * e - 2, "e = " + str(e) + " gave " + str(v));
  }
}

void c12(Outcome& o) {
  for (std::uint64_t k = 0; k < 20; ++k) {
    const int e = 1 + static_cast<int>(k % 3), n = 1 + static_cast<int>(k % 2);
    const auto f = e == 3 ? rational_normal_curve(3, 3) : random_curve(derive_seed(12, k), e, 3);
    const auto arr = random_arrangement(derive_seed(120, k), n, 2, 3);
    const DataPoint u = random_data_point(derive_seed(1200, k), n, 2);
    const int ed = ed_degree_affine(f, arr, k).ed_degree;
    const auto r = triangulate(f, arr, u, Rat(1, 1000000000));
    const std::string tag = "instance " + std::to_string(k);
    o.check(static_cast<int>(r.critical.size()) <= ed, tag + " has too many real critical points");
    if (!r.has_finite_minimizer()) {
      o.check(false, tag + " has no finite minimizer");
      continue;
    }
    const auto& best = r.critical[*r.argmin];
    const Rat slack = best.distance_error_bound.value_or(Rat(0));
    const AffineImage img = affine_image(f, arr);
    for (int g = 0; g < 1000; ++g) {
      const Rat t = Rat(-10) + Rat(20 * g) / 999;
      bool pole = false;
      for (const auto& q : img.q) pole = pole || q(t) == 0;
      if (pole) continue;
      if (!(best.distance <= squared_distance(img, u, t) + slack)) {
        o.check(false, tag + " beaten at grid point " + to_string(t));
        break;
      }
    }
  }
}

void c13(Outcome& o) {
  Rng rng(13);
  int cases = 0;
  for (int k = 0; k < 4000; ++k, ++cases) {  // gcd divides, and a*g, b*g have gcd g up to a unit
    const UniPoly a = random_poly(rng, 1 + k % 4), b = random_poly(rng, 1 + k % 3), g = random_poly(rng, k % 3);
    const UniPoly d = poly_gcd(a * g, b * g);
    o.check(divmod(a * g, d).second.is_zero() && divmod(b * g, d).second.is_zero(), "gcd divisibility");
    o.check(divmod(d, g).second.is_zero(), "gcd misses a common factor");
  }
  for (int k = 0; k < 3000; ++k, ++cases) {  // resultant against Sylvester
    const UniPoly a = random_poly(rng, 1 + k % 5), b = random_poly(rng, 1 + (k / 5) % 5);
    o.check(resultant(a, b) == sylvester_resultant(a, b), "resultant vs Sylvester");
  }
  for (int k = 0; k < 1500; ++k, ++cases) {  // discriminant is the squared root differences
    std::vector<Rat> roots;
    for (int i = 0; i < 1 + k % 4; ++i) roots.push_back(rng.uniform_rat(9, 4));
    Rat prod = 1;
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j) prod *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
    o.check(roots.size() < 2 || discriminant(from_roots(roots)) == prod, "discriminant vs roots");
  }
  for (int k = 0; k < 1500; ++k, ++cases) {  // Sturm isolation recovers known distinct roots
    std::vector<Rat> roots;
    for (int i = 0; i < 1 + k % 5; ++i) roots.push_back(rng.uniform_rat(20, 3));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    UniPoly p = from_roots(roots) * UniPoly({Rat(1 + k % 7), Rat(0), Rat(1)});  // t^2 + c has no real root
    const auto iv = sturm_isolate(p);
    bool good = iv.size() == roots.size();
    for (std::size_t i = 0; good && i < iv.size(); ++i) good = iv[i].lo < roots[i] && roots[i] <= iv[i].hi;
    o.check(good, "Sturm isolation");
  }
  o.detail << (o.ok ? "" : "; ") << cases << " cases";
  o.check(cases >= 10000, "fewer than 10^4 cases");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "twisted cubic, one camera, seeds 1..5 -> 7", 5.0, c1},
      {2, "line, n = 1..6 -> 3n-2", 5.0, c2},
      {3, "sweep e,n in 1..4, h in {2,3} -> 3en-2 with Euler agreement", 600.0, c3},
      {4, "two explicit cameras on the twisted cubic -> 10", 0, c4},
      {5, "constrained camera families -> 7, 13, 9", 0, c5},
      {6, "cuspidal cubic -> 6, cross-check refuses", 0, c6},
      {7, "L3 under wedge cameras, h in {2,3}, n = 1..5 -> 6n-2", 120.0, c7},
      {8, "wedge example matrix and Cauchy-Binet on 50 pairs", 0, c8},
      {9, "multidegree product and top coefficient 2en", 0, c9},
      {10, "Bezier scrolls -> 3(E1+E2)n-2", 0, c10},
      {11, "projective ED of rational normal curves -> 3e-2", 0, c11},
      {12, "triangulation beats a 1000 point grid on 20 instances", 30.0, c12},
      {13, "exact arithmetic properties, >= 10^4 cases", 60.0, c13},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && dt > c.limit_seconds) o.check(false, "over the time limit");
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.title << "  [" << std::fixed
              << std::setprecision(2) << dt << " s]";
    const std::string d = o.detail.str();
    if (!d.empty()) std::cout << "  " << d;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
