// Euclidean distance degree of the affine multiview variety of a rational
// curve, and nearest-point triangulation on it.
//
// The affine patch x_{i,0} = 1 of the multiview curve is parameterized (at
// s = 1) by z_{ij}(t) = p_ij(t) / q_i(t), with p_ij = C_i^(j).f and
// q_i = C_i^(0).f. For data u, the squared distance
//
//   d(t) = sum_{i,j} (p_ij / q_i - u_ij)^2
//
// has derivative 2 g(t) / prod_k q_k^3 with
//
//   g = sum_{i,j} (p_ij - u_ij q_i)(p_ij' q_i - p_ij q_i') prod_{k != i} q_k^3,
//
// a polynomial of degree <= 3en - 2 (the Wronskian p'q - pq' drops two
// degrees). Affine critical points are the roots of g that are neither poles
// (roots of some q_i) nor cusps of f (roots of the immersion-failure form W).

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edcurve/exactnum.hpp"
#include "edcurve/scene.hpp"

namespace edcurve {

/// Raised when two independent data samples disagree on the critical count.
class NonGenericData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the topological cross-check cannot be applied.
class CrossCheckRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DataPoint {
  /// u[i][j-1] is the target for z_{ij}, j = 1..h
  std::vector<std::vector<Rat>> u;
  Rat beta0 = 0;
};

/// Data with entries a/b, |a| <= 50, 1 <= b <= 9.
inline DataPoint random_data_point(std::uint64_t seed, int n, int h) {
  Rng rng(seed);
  DataPoint d;
  d.u.assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(h)));
  for (auto& block : d.u)
    for (auto& x : block) x = rng.uniform_rat(50, 9);
  return d;
}

/// Dehomogenized image coordinates: q[i] = C_i^(0).f, p[i][j-1] = C_i^(j).f.
struct AffineImage {
  std::vector<UniPoly> q;
  std::vector<std::vector<UniPoly>> p;
};

inline AffineImage affine_image(const RationalCurve& f, const Arrangement& arr) {
  AffineImage img;
  for (const auto& cam : arr.cameras()) {
    const auto rows = apply_camera(cam, f);
    img.q.push_back(rows[0].dehomogenize());
    std::vector<UniPoly> ps;
    for (std::size_t j = 1; j < rows.size(); ++j) ps.push_back(rows[j].dehomogenize());
    img.p.push_back(std::move(ps));
  }
  return img;
}

namespace detail {

inline void check_data(const Arrangement& arr, const DataPoint& u) {
  if (static_cast<int>(u.u.size()) != arr.n()) throw std::invalid_argument("data point has the wrong number of views");
  for (const auto& block : u.u) {
    if (static_cast<int>(block.size()) != arr.h()) throw std::invalid_argument("data block has the wrong dimension");
  }
}

inline void check_finite(const AffineImage& img) {
  for (std::size_t i = 0; i < img.q.size(); ++i) {
    if (img.q[i].is_zero()) throw std::domain_error("curve at infinity of camera " + std::to_string(i + 1));
  }
}

}  // namespace detail

inline UniPoly critical_polynomial(const RationalCurve& f, const Arrangement& arr, const DataPoint& u) {
  if (f.N() != arr.N()) throw std::invalid_argument("arrangement and curve live in different ambient spaces");
  detail::check_data(arr, u);
  const AffineImage img = affine_image(f, arr);
  detail::check_finite(img);
  const std::size_t n = img.q.size();

  std::vector<UniPoly> cubes;
  for (const auto& q : img.q) cubes.push_back(q.pow(3));
  // others[i] = prod_{k != i} q_k^3
  std::vector<UniPoly> prefix(n + 1, UniPoly::constant(1)), suffix(n + 1, UniPoly::constant(1));
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * cubes[i];
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * cubes[i];

  UniPoly g;
  for (std::size_t i = 0; i < n; ++i) {
    const UniPoly& q = img.q[i];
    const UniPoly dq = q.derivative();
    UniPoly block;
    for (std::size_t j = 0; j < img.p[i].size(); ++j) {
      const UniPoly& p = img.p[i][j];
      const UniPoly wronskian = p.derivative() * q - p * dq;
      block += (p - u.u[i][j] * q) * wronskian;
    }
    g += block * (prefix[i] * suffix[i + 1]);
  }
  return g;
}

/// Divides out of the squarefree p every root it shares with factor.
/// Returns the number of roots removed.
inline int saturate(UniPoly& p, const UniPoly& factor) {
  if (factor.is_zero() || factor.is_constant()) return 0;
  int removed = 0;
  while (true) {
    const UniPoly g = poly_gcd(p, factor);
    if (g.degree() == 0) return removed;
    p = exact_div(p, g);
    removed += g.degree();
  }
}

struct CriticalReduction {
  UniPoly raw;
  /// squarefree, monic, free of pole and cusp roots
  UniPoly reduced;
  int removed_pole_factors = 0;
  int removed_immersion_factors = 0;
};

inline CriticalReduction reduce_critical(const UniPoly& g, const RationalCurve& f, const Arrangement& arr) {
  if (g.is_zero()) throw std::domain_error("critical polynomial vanishes identically");
  CriticalReduction r{g, squarefree_part(g), 0, 0};
  const AffineImage img = affine_image(f, arr);
  for (const auto& q : img.q) r.removed_pole_factors += saturate(r.reduced, q);
  r.removed_immersion_factors = saturate(r.reduced, immersion_failure_form(f).dehomogenize());
  return r;
}

struct EdOptions {
  /// h = 1 violates the formula hypotheses; such runs are never compared to 3en - 2
  bool allow_h1 = false;
};

struct EDReport {
  int e = 0;
  int n = 0;
  int h = 0;
  int N = 0;
  int ed_degree = 0;
  int critical_poly_degree = 0;
  int removed_pole_factors = 0;
  int removed_immersion_factors = 0;
  GenericityCertificate certificate;
  std::optional<int> cross_check;
  int formula_value = 0;
  /// h >= 2 and the certificate passes
  bool formula_applies = false;
  bool matches_formula = false;
  std::optional<bool> cross_check_agrees;
  std::vector<std::uint64_t> seeds;
};

/// Number of distinct affine critical points of the squared distance for
/// generic data, checked on two data samples (seed, seed + 1).
inline EDReport ed_degree_affine(const RationalCurve& f, const Arrangement& arr, std::uint64_t seed,
                                 const EdOptions& opts = {}) {
  if (f.N() != arr.N()) throw std::invalid_argument("arrangement and curve live in different ambient spaces");
  if (arr.h() < 2 && !(opts.allow_h1 && arr.h() == 1)) {
    throw std::invalid_argument("ED degree computation needs h >= 2 (h = 1 only with the override)");
  }
  EDReport rep;
  rep.e = f.degree();
  rep.n = arr.n();
  rep.h = arr.h();
  rep.N = f.N();
  rep.certificate = genericity_certificate(arr, f);
  rep.formula_value = 3 * rep.e * rep.n - 2;

  int counts[2] = {0, 0};
  for (int k = 0; k < 2; ++k) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    rep.seeds.push_back(s);
    const UniPoly g = critical_polynomial(f, arr, random_data_point(s, arr.n(), arr.h()));
    const CriticalReduction red = reduce_critical(g, f, arr);
    counts[k] = red.reduced.degree();
    if (k == 0) {
      rep.critical_poly_degree = g.degree();
      rep.removed_pole_factors = red.removed_pole_factors;
      rep.removed_immersion_factors = red.removed_immersion_factors;
    }
  }
  if (counts[0] != counts[1]) {
    throw NonGenericData("data not generic; reseed (counts " + std::to_string(counts[0]) + " and " +
                         std::to_string(counts[1]) + ")");
  }
  rep.ed_degree = counts[0];
  rep.formula_applies = rep.h >= 2 && rep.certificate.passes();
  rep.matches_formula = rep.ed_degree == rep.formula_value;
  return rep;
}

struct EulerCounts {
  int points_at_infinity = 0;  // #S_inf
  int isotropic_points = 0;    // #S_Q
  int value = 0;               // #S_inf + #S_Q - 2
  std::uint64_t beta_seed = 0;
};

/// ED degree through -(chi(X) - chi(X n H_inf) - chi(X n Q_beta)) computed on
/// the parameter line; nodes cancel, so only immersions are accepted.
inline EulerCounts euler_cross_check_counts(const RationalCurve& f, const Arrangement& arr, std::uint64_t seed,
                                            int beta_retries = 16) {
  if (f.N() != arr.N()) throw std::invalid_argument("arrangement and curve live in different ambient spaces");
  if (immersion_failure_form(f).degree() > 0) throw CrossCheckRefused("cross-check requires immersion");

  std::vector<std::vector<HomPoly2>> rows;
  HomPoly2 at_infinity = HomPoly2::monomial(1, 0, 0);
  for (std::size_t i = 0; i < arr.cameras().size(); ++i) {
    rows.push_back(apply_camera(arr.cameras()[i], f));
    if (rows.back()[0].is_zero()) throw std::domain_error("curve at infinity of camera " + std::to_string(i + 1));
    at_infinity = at_infinity * rows.back()[0];
  }
  EulerCounts out;
  out.points_at_infinity = hom_distinct_root_count(at_infinity);

  const std::size_t n = rows.size();
  for (int attempt = 0; attempt < beta_retries; ++attempt) {
    out.beta_seed = derive_seed(seed, static_cast<std::uint64_t>(attempt));
    Rng rng(out.beta_seed);
    Rat beta0 = 0;
    while (beta0 == 0) beta0 = rng.uniform_rat(50, 9);

    std::vector<HomPoly2> squares;
    for (const auto& r : rows) squares.push_back(r[0] * r[0]);
    HomPoly2 d_all = HomPoly2::monomial(1, 0, 0);
    for (const auto& sq : squares) d_all = d_all * sq;

    HomPoly2 g = beta0 * d_all;
    for (std::size_t i = 0; i < n; ++i) {
      HomPoly2 others = HomPoly2::monomial(1, 0, 0);
      for (std::size_t k = 0; k < n; ++k)
        if (k != i) others = others * squares[k];
      HomPoly2 block(2 * f.degree());
      for (std::size_t j = 1; j < rows[i].size(); ++j) {
        const HomPoly2 diff = rows[i][j] - rng.uniform_rat(50, 9) * rows[i][0];
        block += diff * diff;
      }
      g += block * others;
    }
    if (g.is_zero() || hom_share_root(g, at_infinity)) continue;
    out.isotropic_points = hom_distinct_root_count(g);
    out.value = out.points_at_infinity + out.isotropic_points - 2;
    return out;
  }
  throw CrossCheckRefused("non-generic beta");
}

inline int euler_cross_check(const RationalCurve& f, const Arrangement& arr, std::uint64_t seed) {
  return euler_cross_check_counts(f, arr, seed).value;
}

/// e + #(Q n Z) - chi(P^1) for a smooth rational curve Z, Q the isotropic
/// quadric sum x_i^2 = 0.
inline int projective_ed_degree_smooth_curve(const RationalCurve& f) {
  if (immersion_failure_form(f).degree() > 0) throw std::invalid_argument("projective formula requires an immersion");
  HomPoly2 sum(2 * f.degree());
  for (const auto& c : f.coords()) sum += c * c;
  if (sum.is_zero()) throw std::domain_error("curve inside isotropic quadric");
  return f.degree() + hom_distinct_root_count(sum) - 2;
}

// ---------------------------------------------------------------------------
// Triangulation

namespace detail {

struct RatInterval {
  Rat lo, hi;
};

inline RatInterval imul(const RatInterval& a, const RatInterval& b) {
  Rat c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

inline RatInterval ieval(const UniPoly& p, const RatInterval& x) {
  RatInterval acc{0, 0};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = imul(acc, x);
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

}  // namespace detail

struct CriticalPoint {
  IsolatingInterval interval;
  Rat t;  // midpoint of interval
  Rat distance;
  /// bound on |d(t) - d(root)|; empty if the interval still touches a pole
  std::optional<Rat> distance_error_bound;
};

struct TriangulationResult {
  std::vector<CriticalPoint> critical;  // ascending in t
  std::optional<std::size_t> argmin;
  std::vector<Rat> world_point;                // f(1, t*)
  std::vector<std::vector<Rat>> image_blocks;  // z_{i,1..h}(t*)
  Rat width_bound;
  int reduced_degree = 0;

  bool has_finite_minimizer() const { return argmin.has_value(); }
};

/// Squared distance from the affine image of f at t to the data.
inline Rat squared_distance(const AffineImage& img, const DataPoint& u, const Rat& t) {
  Rat d(0);
  for (std::size_t i = 0; i < img.q.size(); ++i) {
    const Rat q = img.q[i](t);
    if (q == 0) throw std::domain_error("parameter is a pole of camera " + std::to_string(i + 1));
    for (std::size_t j = 0; j < img.p[i].size(); ++j) {
      const Rat diff = img.p[i][j](t) / q - u.u[i][j];
      d += diff * diff;
    }
  }
  return d;
}

/// Real affine critical points of the squared distance to u, isolated by
/// Sturm sequences and refined by bisection to width_bound.
inline TriangulationResult triangulate(const RationalCurve& f, const Arrangement& arr, const DataPoint& u,
                                       const Rat& width_bound) {
  if (width_bound <= 0) throw std::invalid_argument("width bound must be positive");
  const UniPoly g = critical_polynomial(f, arr, u);
  const CriticalReduction red = reduce_critical(g, f, arr);
  const AffineImage img = affine_image(f, arr);
  UniPoly denom = UniPoly::constant(1);
  for (const auto& q : img.q) denom = denom * q.pow(3);

  TriangulationResult res;
  res.width_bound = width_bound;
  res.reduced_degree = red.reduced.degree();
  for (IsolatingInterval iv : sturm_isolate(red.reduced)) {
    iv = refine_root(red.reduced, iv, width_bound);
    std::optional<Rat> bound;
    // shrink until the interval clears every pole, so d is smooth on it
    for (int extra = 0; extra < 64; ++extra) {
      const auto dq = detail::ieval(denom, {iv.lo, iv.hi});
      if (dq.lo > 0 || dq.hi < 0) {
        const auto gi = detail::ieval(g, {iv.lo, iv.hi});
        const Rat sup_g = std::max(abs(gi.lo), abs(gi.hi));
        const Rat inf_q = dq.lo > 0 ? dq.lo : Rat(-dq.hi);
        bound = (iv.hi - iv.lo) * sup_g / inf_q;
        break;
      }
      iv = refine_root(red.reduced, iv, (iv.hi - iv.lo) / 2);
    }
    Rat mid = (iv.lo + iv.hi) / 2;
    res.critical.push_back({iv, mid, squared_distance(img, u, mid), bound});
  }
  for (std::size_t k = 0; k < res.critical.size(); ++k) {
    if (!res.argmin || res.critical[k].distance < res.critical[*res.argmin].distance) res.argmin = k;
  }
  if (res.argmin) {
    const Rat& t = res.critical[*res.argmin].t;
    res.world_point = f(Rat(1), t);
    for (std::size_t i = 0; i < img.q.size(); ++i) {
      std::vector<Rat> block;
      const Rat q = img.q[i](t);
      for (const auto& p : img.p[i]) block.push_back(p(t) / q);
      res.image_blocks.push_back(std::move(block));
    }
  }
  return res;
}

}  // namespace edcurve
