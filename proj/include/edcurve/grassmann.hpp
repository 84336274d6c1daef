// Lines in P^3 through their Pluecker coordinates, wedge cameras, the
// Schubert curve L3 of lines meeting three skew lines, and Bezier scrolls.
//
// Pluecker coordinates are ordered (p12, p13, p23, p14, p24, p34), i.e.
// 2-subsets in colex order, with p_ij = X1_i X2_j - X1_j X2_i (1-based).
// Wedge cameras use the same subset order by default so that
// wedge_camera(C, 2) acts on these coordinates.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "edcurve/exactnum.hpp"
#include "edcurve/linalg.hpp"
#include "edcurve/scene.hpp"

namespace edcurve {

using Point3 = std::array<Rat, 4>;  // homogeneous point of P^3

enum class SubsetOrder {
  colex,  // by largest element, then recursively: (1,2),(1,3),(2,3),(1,4),...
  lex,    // (1,2),(1,3),(1,4),(2,3),...
};

/// All k-subsets of {0, ..., m-1} (0-based, each sorted ascending).
inline std::vector<std::vector<int>> k_subsets(int m, int k, SubsetOrder order = SubsetOrder::colex) {
  if (k < 0 || k > m) throw std::invalid_argument("subset size out of range");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  if (k == 0) return {{}};
  while (true) {
    out.push_back(cur);
    // lex successor
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  if (order == SubsetOrder::colex) {
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pluecker lines

inline Rat pluecker_relation(const std::array<Rat, 6>& p) { return p[0] * p[5] - p[1] * p[4] + p[3] * p[2]; }

class PlueckerLine {
 public:
  explicit PlueckerLine(std::array<Rat, 6> p) : p_(std::move(p)) {
    if (std::all_of(p_.begin(), p_.end(), [](const Rat& x) { return x == 0; })) {
      throw std::invalid_argument("Pluecker vector is zero");
    }
    if (pluecker_relation(p_) != 0) throw std::invalid_argument("vector violates the Pluecker relation");
  }
  const std::array<Rat, 6>& coords() const { return p_; }
  const Rat& operator[](int i) const { return p_.at(static_cast<std::size_t>(i)); }

 private:
  std::array<Rat, 6> p_;
};

/// True iff a and b are nonzero multiples of each other (cross-multiplication).
template <class Vec>
bool proportional(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  const bool za = std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
  const bool zb = std::all_of(b.begin(), b.end(), [](const Rat& x) { return x == 0; });
  if (za || zb) return za && zb;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

/// Line spanned by two independent points of P^3.
inline PlueckerLine pluecker_from_span(const Point3& x1, const Point3& x2) {
  std::array<Rat, 6> p;
  const auto pairs = k_subsets(4, 2);
  for (std::size_t k = 0; k < 6; ++k) {
    const auto i = static_cast<std::size_t>(pairs[k][0]);
    const auto j = static_cast<std::size_t>(pairs[k][1]);
    p[k] = x1[i] * x2[j] - x1[j] * x2[i];
  }
  if (std::all_of(p.begin(), p.end(), [](const Rat& x) { return x == 0; })) {
    throw std::invalid_argument("points do not span a line");
  }
  return PlueckerLine(p);
}

/// det[a1; a2; b1; b2]: zero iff the lines span(a1,a2) and span(b1,b2) meet.
inline Rat meet_determinant(const Point3& a1, const Point3& a2, const Point3& b1, const Point3& b2) {
  RatMatrix m(4, 4);
  const Point3* rows[] = {&a1, &a2, &b1, &b2};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = (*rows[i])[static_cast<std::size_t>(j)];
  return determinant(m);
}

// ---------------------------------------------------------------------------
// Wedge cameras

struct WedgeCamera {
  Camera base;
  int k;
  SubsetOrder order;
  /// C(h+1, k) x C(N+1, k) matrix of k x k minors of base
  RatMatrix entries;

  Camera as_camera() const { return Camera(entries); }
};

/// Matrix of the map induced by C on k-th exterior powers: entry (I, J) is the
/// minor of C on rows I and columns J, subsets in the given order.
inline WedgeCamera wedge_camera(const Camera& cam, int k, SubsetOrder order = SubsetOrder::colex) {
  if (k < 1 || k > cam.h() + 1) throw std::invalid_argument("wedge order must satisfy 1 <= k <= h+1");
  const auto rows = k_subsets(cam.h() + 1, k, order);
  const auto cols = k_subsets(cam.N() + 1, k, order);
  RatMatrix w(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) {
      RatMatrix sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = cam.matrix()(rows[a][static_cast<std::size_t>(i)], cols[b][static_cast<std::size_t>(j)]);
      w(static_cast<int>(a), static_cast<int>(b)) = determinant(sub);
    }
  return {cam, k, order, std::move(w)};
}

/// 2-wedge arrangement of cameras on P^3, acting on Pluecker space P^5.
inline Arrangement wedge_arrangement(const Arrangement& arr) {
  std::vector<Camera> out;
  for (const auto& c : arr.cameras()) out.push_back(wedge_camera(c, 2).as_camera());
  return Arrangement(std::move(out));
}

// ---------------------------------------------------------------------------
// L3 and the Segre quadric

/// Lines spanned by [s:0:t:0] and [0:s:0:t]: (s^2, 0, -st, st, 0, t^2) in P^5.
inline RationalCurve l3_curve() {
  const Rat z(0), o(1), m(-1);
  return RationalCurve({HomPoly2({o, z, z}), HomPoly2({z, z, z}), HomPoly2({z, m, z}), HomPoly2({z, o, z}),
                        HomPoly2({z, z, z}), HomPoly2({z, z, o})});
}

/// The two spanning points [s:0:t:0], [0:s:0:t] of the L3 member at [s:t].
inline std::pair<Point3, Point3> l3_member_span(const Rat& s, const Rat& t) {
  return {Point3{s, Rat(0), t, Rat(0)}, Point3{Rat(0), s, Rat(0), t}};
}

/// Spanning points [u:v:0:0], [0:0:u:v] of the line [s:t] -> [su:sv:tu:tv].
inline std::pair<Point3, Point3> ruling_line_span(const Rat& u, const Rat& v) {
  return {Point3{u, v, Rat(0), Rat(0)}, Point3{Rat(0), Rat(0), u, v}};
}

using P1Point = std::pair<Rat, Rat>;

struct SkewLines {
  std::array<PlueckerLine, 3> lines;
  std::array<std::pair<Point3, Point3>, 3> spans;
};

/// Three lines of one ruling of the Segre quadric, for three distinct
/// parameters [u_i : v_i]; they are pairwise disjoint.
inline SkewLines three_skew_lines(const std::array<P1Point, 3>& params) {
  for (const auto& [u, v] : params) {
    if (u == 0 && v == 0) throw std::invalid_argument("[0:0] is not a point of P^1");
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const auto& a = params[static_cast<std::size_t>(i)];
      const auto& b = params[static_cast<std::size_t>(j)];
      if (a.first * b.second - a.second * b.first == 0) throw std::invalid_argument("line parameters must be distinct");
    }
  std::array<std::pair<Point3, Point3>, 3> spans;
  for (std::size_t i = 0; i < 3; ++i) spans[i] = ruling_line_span(params[i].first, params[i].second);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (meet_determinant(spans[i].first, spans[i].second, spans[j].first, spans[j].second) == 0) {
        throw std::logic_error("ruling lines unexpectedly meet");
      }
  return {{pluecker_from_span(spans[0].first, spans[0].second), pluecker_from_span(spans[1].first, spans[1].second),
           pluecker_from_span(spans[2].first, spans[2].second)},
          spans};
}

/// x0 x3 - x1 x2
inline Rat segre_quadric_eval(const Point3& x) { return x[0] * x[3] - x[1] * x[2]; }

/// [su : sv : tu : tv]
inline Point3 segre_map(const P1Point& st, const P1Point& uv) {
  return {st.first * uv.first, st.first * uv.second, st.second * uv.first, st.second * uv.second};
}

// ---------------------------------------------------------------------------
// Bezier scrolls

using Point3Affine = std::array<Rat, 3>;

struct BezierCurve {
  int E = 0;
  std::vector<Point3Affine> control;

  explicit BezierCurve(std::vector<Point3Affine> pts) : control(std::move(pts)) {
    if (control.size() < 2) throw std::invalid_argument("a Bezier curve needs at least two control points");
    E = static_cast<int>(control.size()) - 1;
    for (std::size_t i = 0; i < control.size(); ++i)
      for (std::size_t j = i + 1; j < control.size(); ++j)
        if (control[i] == control[j]) throw std::invalid_argument("Bezier control points must be pairwise distinct");
  }
};

/// binom(E, i) (s - t)^(E - i) t^i
inline HomPoly2 bernstein(int i, int E) {
  if (i < 0 || i > E) throw std::invalid_argument("Bernstein index out of range");
  Int binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(E), static_cast<unsigned long>(i));
  HomPoly2 out = HomPoly2::monomial(Rat(binom), 0, i);
  const HomPoly2 s_minus_t(std::vector<Rat>{Rat(1), Rat(-1)});
  for (int k = 0; k < E - i; ++k) out = out * s_minus_t;
  return out;
}

/// Homogeneous row (s^E, B_x(s,t), B_y(s,t), B_z(s,t)).
inline std::array<HomPoly2, 4> bezier_row(const BezierCurve& b) {
  std::array<HomPoly2, 4> row{HomPoly2::monomial(1, b.E, 0), HomPoly2(b.E), HomPoly2(b.E), HomPoly2(b.E)};
  for (int i = 0; i <= b.E; ++i) {
    const HomPoly2 basis = bernstein(i, b.E);
    for (std::size_t c = 0; c < 3; ++c) row[c + 1] += b.control[static_cast<std::size_t>(i)][c] * basis;
  }
  return row;
}

/// Pluecker curve of the lines joining B1(s,t) and B2(s,t): the 2x2 minors of
/// [s^E1, B1; s^E2, B2], a curve of degree E1 + E2 in P^5.
inline RationalCurve bezier_scroll(const BezierCurve& b1, const BezierCurve& b2) {
  const auto r1 = bezier_row(b1);
  const auto r2 = bezier_row(b2);
  std::vector<HomPoly2> coords;
  for (const auto& pair : k_subsets(4, 2)) {
    const auto i = static_cast<std::size_t>(pair[0]);
    const auto j = static_cast<std::size_t>(pair[1]);
    coords.push_back(r1[i] * r2[j] - r1[j] * r2[i]);
  }
  try {
    return RationalCurve(std::move(coords));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("non-generic control points");
  }
}

}  // namespace edcurve
