#include <gtest/gtest.h>

#include "common.hpp"
#include "edcurve/eddeg.hpp"
#include "edcurve/grassmann.hpp"

using namespace edcurve;

namespace {

HomPoly2 mono(int s, int t) { return HomPoly2::monomial(1, s, t); }

RationalCurve line_curve() { return RationalCurve({mono(0, 1), mono(1, 0), HomPoly2(1), HomPoly2(1)}); }

/// Camera whose affine image of line_curve() is the first coordinate axis.
Arrangement axis_camera() {
  return Arrangement({Camera(RatMatrix({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}}))});
}

DataPoint data(std::vector<std::vector<Rat>> u) { return DataPoint{std::move(u), 0}; }

/// Per-camera conditions only; constrained families violate the pairwise ones by design.
bool views_generic(const GenericityCertificate& c) {
  for (const auto& d : c.discriminants) {
    if (!d || *d == 0) return false;
  }
  for (bool b : c.infinity_gcd_trivial) {
    if (!b) return false;
  }
  return true;
}

}  // namespace

TEST(CriticalPolynomial, OrthogonalFootOnALine) {
  const UniPoly g = critical_polynomial(line_curve(), axis_camera(), data({{0, 5}}));
  ASSERT_EQ(g.degree(), 1);
  EXPECT_EQ(g.coeff(0), 0);
  EXPECT_NE(g.coeff(1), 0);
}

TEST(CriticalPolynomial, TwistedCubicOneCameraHasDegreeSeven) {
  const auto f = rational_normal_curve(3, 3);
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const auto arr = random_arrangement(s, 1, 2, 3);
    EXPECT_EQ(critical_polynomial(f, arr, random_data_point(s, 1, 2)).degree(), 7);
  }
}

TEST(CriticalPolynomial, CurvePointIsCritical) {
  const auto f = random_curve(5, 3, 3);
  const auto arr = random_arrangement(5, 2, 2, 3);
  const AffineImage img = affine_image(f, arr);
  const Rat t0(1, 2);
  DataPoint u;
  for (std::size_t i = 0; i < img.q.size(); ++i) {
    std::vector<Rat> block;
    for (const auto& p : img.p[i]) block.push_back(p(t0) / img.q[i](t0));
    u.u.push_back(block);
  }
  EXPECT_EQ(critical_polynomial(f, arr, u)(t0), 0);
  const auto tri = triangulate(f, arr, u, Rat(1, 1000000));
  ASSERT_TRUE(tri.has_finite_minimizer());
  const auto& best = tri.critical[*tri.argmin];
  EXPECT_EQ(best.distance, 0);
  EXPECT_TRUE(best.interval.lo < t0 && t0 <= best.interval.hi);
}

TEST(CriticalPolynomial, CurveAtInfinityIsAnError) {
  const Camera c(RatMatrix({{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 1}}));
  EXPECT_THROW(critical_polynomial(line_curve(), Arrangement({c}), data({{1, 2}})), std::domain_error);
}

TEST(CriticalPolynomial, WronskianDropsTwoDegrees) {
  Rng rng(4);
  for (int e = 1; e <= 8; ++e)
    for (int k = 0; k < 20; ++k) {
      const UniPoly p = edtest::random_poly(rng, e), q = edtest::random_poly(rng, e);
      const UniPoly w = p.derivative() * q - p * q.derivative();
      if (!w.is_zero()) {
        EXPECT_LE(w.degree(), 2 * e - 2);
      }
    }
}

TEST(CriticalPolynomial, DegreeBound) {
  for (int e = 1; e <= 4; ++e)
    for (int n = 1; n <= 3; ++n) {
      const auto f = random_curve(derive_seed(e, n), e, std::max(3, e));
      const auto arr = random_arrangement(derive_seed(n, e), n, 2, f.N());
      EXPECT_LE(critical_polynomial(f, arr, random_data_point(1, n, 2)).degree(), 3 * e * n - 2);
    }
}

TEST(EdDegree, TwistedCubicOneCamera) {
  const auto f = rational_normal_curve(3, 3);
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const auto rep = ed_degree_affine(f, random_arrangement(s, 1, 2, 3), s);
    EXPECT_EQ(rep.ed_degree, 7);
    EXPECT_TRUE(rep.matches_formula);
    EXPECT_EQ(rep.seeds, (std::vector<std::uint64_t>{s, s + 1}));
  }
}

TEST(EdDegree, LineThreeNMinusTwo) {
  for (int n = 1; n <= 4; ++n) {
    const auto rep = ed_degree_affine(line_curve(), random_arrangement(derive_seed(2, n), n, 2, 3), 3);
    EXPECT_EQ(rep.ed_degree, 3 * n - 2);
  }
}

TEST(EdDegree, HOneNeedsOverride) {
  const auto f = rational_normal_curve(3, 3);
  const auto arr = random_arrangement(1, 1, 1, 3);
  EXPECT_THROW(ed_degree_affine(f, arr, 1), std::invalid_argument);
  const auto rep = ed_degree_affine(f, arr, 1, {true});
  EXPECT_FALSE(rep.formula_applies);
  EXPECT_GE(rep.ed_degree, 1);
}

TEST(EdDegree, CuspIsSaturatedAway) {
  const RationalCurve cusp({mono(3, 0), mono(1, 2), mono(0, 3)});
  for (std::uint64_t s = 1; s <= 3; ++s) {
    const auto rep = ed_degree_affine(cusp, random_arrangement(s, 1, 2, 2), s);
    EXPECT_EQ(rep.ed_degree, 6);
    EXPECT_EQ(rep.removed_immersion_factors, 1);
    EXPECT_FALSE(rep.certificate.immersion);
    EXPECT_THROW(euler_cross_check(cusp, random_arrangement(s, 1, 2, 2), s), CrossCheckRefused);
  }
}

TEST(EdDegree, ConstrainedFamilies) {
  const auto f = rational_normal_curve(3, 3);
  EXPECT_EQ(ed_degree_affine(f, random_arrangement(5, 1, 2, 3, 10, zero_corner_support()), 1).ed_degree, 7);
  EXPECT_EQ(ed_degree_affine(f, random_arrangement(5, 2, 2, 3, 10, zero_corner_support()), 1).ed_degree, 13);
  const auto f5 = rational_normal_curve(5, 5);
  EXPECT_EQ(ed_degree_affine(f5, random_arrangement(11, 1, 2, 5, 10, block_support()), 1).ed_degree, 9);
}

// counts at n = 1, 2 determine the counts at n = 3, 4 for a fixed family
TEST(EdDegree, LinearInNForFixedFamilies) {
  struct Family {
    RationalCurve f;
    int h;
    CameraSupport support;
  };
  const std::vector<Family> families = {{rational_normal_curve(3, 3), 2, {}},
                                        {rational_normal_curve(3, 3), 2, zero_corner_support()},
                                        {random_curve(8, 2, 4), 3, {}}};
  for (const auto& fam : families) {
    std::vector<int> counts;
    for (int n = 1; n <= 4; ++n) {
      std::uint64_t s = derive_seed(77, n);
      auto arr = random_arrangement(s, n, fam.h, fam.f.N(), 10, fam.support);
      while (!views_generic(genericity_certificate(arr, fam.f))) {
        arr = random_arrangement(++s, n, fam.h, fam.f.N(), 10, fam.support);
      }
      counts.push_back(ed_degree_affine(fam.f, arr, 3).ed_degree);
    }
    const int step = counts[1] - counts[0];
    EXPECT_EQ(counts[2], counts[1] + step);
    EXPECT_EQ(counts[3], counts[2] + step);
  }
}

TEST(EdDegree, DataIndependence) {
  const auto f = random_curve(12, 3, 4);
  const auto arr = random_arrangement(12, 2, 3, 4);
  for (std::uint64_t s = 0; s < 6; ++s) EXPECT_EQ(ed_degree_affine(f, arr, 10 * s).ed_degree, 16);
}

TEST(EdDegree, FormulaSweepSmall) {
  for (int e = 1; e <= 3; ++e)
    for (int n = 1; n <= 3; ++n)
      for (int N = std::max(3, e); N <= 5; ++N) {
        const auto f = random_curve(derive_seed(100 + e, N), e, N);
        const auto arr = random_arrangement(derive_seed(200 + n, N), n, 2, N);
        const auto rep = ed_degree_affine(f, arr, 1);
        if (!rep.certificate.passes()) continue;
        EXPECT_EQ(rep.ed_degree, 3 * e * n - 2);
        EXPECT_EQ(rep.critical_poly_degree, 3 * e * n - 2);
        if (rep.certificate.immersion) {
          EXPECT_EQ(euler_cross_check(f, arr, 5), rep.ed_degree);
        }
      }
}

TEST(EulerCrossCheck, Examples) {
  const auto f = rational_normal_curve(3, 3);
  const auto c = euler_cross_check_counts(f, random_arrangement(3, 1, 2, 3), 1);
  EXPECT_EQ(c.points_at_infinity, 3);
  EXPECT_EQ(c.isotropic_points, 6);
  EXPECT_EQ(c.value, 7);
  const auto l = euler_cross_check_counts(line_curve(), random_arrangement(4, 2, 2, 3), 1);
  EXPECT_EQ(l.points_at_infinity, 2);
  EXPECT_EQ(l.isotropic_points, 4);
  EXPECT_EQ(l.value, 4);
}

TEST(EulerCrossCheck, SixNMinusTwoOnL3) {
  for (int n = 1; n <= 3; ++n) {
    const auto arr = wedge_arrangement(random_arrangement(derive_seed(31, n), n, 2, 3));
    EXPECT_EQ(euler_cross_check(l3_curve(), arr, 2), 6 * n - 2);
  }
}

TEST(ProjectiveEd, SmoothCurves) {
  for (int e = 1; e <= 5; ++e) EXPECT_EQ(projective_ed_degree_smooth_curve(rational_normal_curve(e, e)), 3 * e - 2);
  EXPECT_EQ(projective_ed_degree_smooth_curve(line_curve()), 1);
  const RationalCurve cusp({mono(3, 0), mono(1, 2), mono(0, 3)});
  EXPECT_THROW(projective_ed_degree_smooth_curve(cusp), std::invalid_argument);
}

TEST(Triangulate, OrthogonalFoot) {
  const auto r = triangulate(line_curve(), axis_camera(), data({{0, 5}}), Rat(1, 1000));
  ASSERT_EQ(r.critical.size(), 1u);
  ASSERT_TRUE(r.has_finite_minimizer());
  const auto& best = r.critical[0];
  EXPECT_TRUE(best.interval.lo < 0 && 0 <= best.interval.hi);
  EXPECT_LE(abs(best.distance - 25), Rat(1, 1000));
  EXPECT_LE(best.interval.hi - best.interval.lo, Rat(1, 1000));
}

TEST(Triangulate, BeatsADenseGrid) {
  const auto f = rational_normal_curve(3, 3);
  for (std::uint64_t s = 1; s <= 6; ++s) {
    const auto arr = random_arrangement(s, 1, 2, 3);
    const DataPoint u = random_data_point(derive_seed(s, 9), 1, 2);
    const auto r = triangulate(f, arr, u, Rat(1, 1000000000));
    const int real = static_cast<int>(r.critical.size());
    EXPECT_GE(real, 1);
    EXPECT_LE(real, 7);
    EXPECT_EQ(real % 2, 1);
    ASSERT_TRUE(r.has_finite_minimizer());
    const Rat best = r.critical[*r.argmin].distance;
    ASSERT_TRUE(r.critical[*r.argmin].distance_error_bound.has_value());
    const Rat slack = *r.critical[*r.argmin].distance_error_bound;
    for (const auto& c : r.critical) EXPECT_LE(best, c.distance);
    const AffineImage img = affine_image(f, arr);
    for (int k = 0; k < 1000; ++k) {
      const Rat t = Rat(-10) + Rat(20 * k) / 999;
      bool pole = false;
      for (const auto& q : img.q) pole = pole || q(t) == 0;
      if (!pole) {
        EXPECT_LE(best, squared_distance(img, u, t) + slack);
      }
    }
    // world point is f(1, t*) and the image blocks match it
    EXPECT_EQ(r.world_point, f(1, r.critical[*r.argmin].t));
  }
}

TEST(Triangulate, RejectsBadWidth) {
  EXPECT_THROW(triangulate(line_curve(), axis_camera(), data({{0, 5}}), Rat(0)), std::invalid_argument);
}
