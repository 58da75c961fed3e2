#include <numbers>

#include "oracle.hpp"

using namespace quatspin;

namespace {

Multivector spatial(const Signature &sig, const Vec3 &x) {
  Multivector v(sig);
  for (int k = 0; k + 1 < sig.dimension(); ++k)
    v = v + x[k] * Multivector::generator(sig, k + 1);
  return v;
}

/// a = 2 m^-1 - pole with m = x + pole.
Multivector lift_oracle(const Signature &sig, const Vec3 &x) {
  const auto pole = Multivector::generator(sig, 0);
  return 2.0 * vector_inverse(spatial(sig, x) + pole) - pole;
}

Vec3 axpy(double h, const Vec3 &d, const Vec3 &x) { return add3(x, scale3(h, d)); }

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

} // namespace

TEST(SphereProjection, Examples) {
  const Signature g4 = euclidean4();
  const auto e0 = Multivector::generator(g4, 0);
  const auto e1 = Multivector::generator(g4, 1);
  EXPECT_EQ(project_sphere(make_sphere_point(e0)), PlanePoint{});
  EXPECT_LE(max_abs_diff(project_sphere(make_sphere_point(e1)), PlanePoint{{1, 0, 0}}), 1e-15);
  EXPECT_QS_ERROR(project_sphere(make_sphere_point(-e0)), Errc::pole_singularity);
  EXPECT_QS_ERROR(make_sphere_point(2.0 * e0), Errc::domain_violation);
  EXPECT_QS_ERROR(make_sphere_point(Multivector::blade(g4, blade4::e12)), Errc::not_a_vector);
}

TEST(SphereLift, Examples) {
  const Signature g4 = euclidean4();
  const auto e0 = Multivector::generator(g4, 0);
  const auto e1 = Multivector::generator(g4, 1);
  const auto e2 = Multivector::generator(g4, 2);
  EXPECT_EQ(lift_sphere(PlanePoint{}).a_hat, e0);
  EXPECT_MV_NEAR(lift_sphere(PlanePoint{{1, 0, 0}}).a_hat, e1, 1e-15);
  const auto a = lift_sphere(PlanePoint{{0, 3, 0}}).a_hat;
  EXPECT_MV_NEAR(a, (-8.0 * e0 + 6.0 * e2) / 10.0, 1e-15);
  EXPECT_MV_NEAR(a * a, Multivector::scalar(g4, 1.0), 1e-15);
}

TEST(SphereLift, MatchesInverseOracleAndRoundTrips) {
  Sampler rng(41);
  for (const Signature &sig : {euclidean4(), pauli3()})
    for (int n = 0; n < 200; ++n) {
      const PlanePoint p = rng.ball_point(5.0, sig.dimension() - 1);
      const auto a = lift_sphere(p, sig).a_hat;
      EXPECT_MV_NEAR(a, lift_oracle(sig, p.x), 1e-13);
      EXPECT_NEAR(dot(a, a), 1.0, 1e-12);
      EXPECT_LE(max_abs_diff(project_sphere(make_sphere_point(a)), p), 1e-10);
    }
}

TEST(SphereLift, LiftOfProjection) {
  Sampler rng(42);
  for (int n = 0; n < 100; ++n) {
    Multivector a = grade_select(rng.multivector(euclidean4()), {1});
    a = a / std::sqrt(dot(a, a));
    if (a.coeff(BladeIndex{1}) < -0.9)
      continue;
    EXPECT_MV_NEAR(lift_sphere(project_sphere(make_sphere_point(a))).a_hat, a, 1e-12);
  }
}

TEST(SphereRotor, Examples) {
  const Signature g4 = euclidean4();
  const auto r0 = sphere_rotor(PlanePoint{});
  EXPECT_EQ(r0.rotor, Multivector::scalar(g4, 1.0));
  EXPECT_EQ(r0.angle, 0.0);
  const auto r = sphere_rotor(PlanePoint{{1, 0, 0}});
  EXPECT_NEAR(r.angle, std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(r.cos_angle, 0.0, 1e-15);
  const auto e10 = Multivector::product_of(g4, {1, 0});
  EXPECT_MV_NEAR(r.rotor, (1.0 + e10) / std::sqrt(2.0), 1e-15);
  const auto e0 = Multivector::generator(g4, 0);
  EXPECT_MV_NEAR(r.rotor * e0 * reverse(r.rotor), Multivector::generator(g4, 1), 1e-15);
}

TEST(SphereRotor, SandwichMatchesLift) {
  Sampler rng(43);
  const Signature g4 = euclidean4();
  const auto e0 = Multivector::generator(g4, 0);
  for (int n = 0; n < 200; ++n) {
    const PlanePoint p = rng.ball_point(10.0);
    const auto r = sphere_rotor(p);
    EXPECT_MV_NEAR(oracle::product(oracle::product(r.rotor, e0), reverse(r.rotor)), lift_sphere(p).a_hat,
                   1e-10);
    EXPECT_MV_NEAR(r.rotor * reverse(r.rotor), Multivector::scalar(g4, 1.0), 1e-12);
    EXPECT_NEAR(r.cos_angle * r.cos_angle + r.sin_angle * r.sin_angle, 1.0, 1e-12);
    EXPECT_GE(r.angle, 0.0);
    EXPECT_LT(r.angle, std::numbers::pi);
  }
}

TEST(SphereRotor, ReflectionAndOneSidedFormsAgree) {
  Sampler rng(44);
  for (int n = 0; n < 100; ++n) {
    const PlanePoint p = rng.ball_point(4.0);
    const auto a = lift_sphere(p).a_hat;
    EXPECT_MV_NEAR(sphere_reflection_form(p), a, 1e-12);
    EXPECT_MV_NEAR(sphere_one_sided_form(p), a, 1e-12);
  }
}

TEST(SphereMetric, Examples) {
  EXPECT_DOUBLE_EQ(sphere_metric(PlanePoint{}, {1, 0, 0}).ds2, 4.0);
  EXPECT_DOUBLE_EQ(sphere_metric(PlanePoint{{1, 0, 0}}, {0, 1, 0}).ds2, 1.0);
}

TEST(SphereMetric, FiniteDifferences) {
  Sampler rng(45);
  const double h = 1e-5;
  for (int n = 0; n < 200; ++n) {
    const PlanePoint p = rng.ball_point(3.0);
    const Vec3 dx = rng.vec3();
    const auto arc = sphere_metric(p, dx);
    const auto fd = (lift_sphere(PlanePoint{axpy(h, dx, p.x)}).a_hat -
                     lift_sphere(PlanePoint{axpy(-h, dx, p.x)}).a_hat) /
                    (2.0 * h);
    EXPECT_LE(rel(arc.ds2, dot(fd, fd)), 1e-6);
    EXPECT_LE(max_abs_diff(arc.da_hat, fd), 1e-6 * std::max(1.0, max_abs(fd)));
    EXPECT_NEAR(dot(arc.da_hat, lift_sphere(p).a_hat), 0.0, 1e-12);
    EXPECT_NEAR(dot(arc.da_hat, arc.da_hat), arc.ds2, 1e-12 * std::max(1.0, arc.ds2));
  }
}

TEST(SphereBranch, SignatureChecks) {
  EXPECT_QS_ERROR(lift_sphere(PlanePoint{}, spacetime13()), Errc::signature_mismatch);
  EXPECT_QS_ERROR(lift_sphere(PlanePoint{{0, 0, 1}}, pauli3()), Errc::domain_violation);
}

TEST(HyperLift, Examples) {
  const Signature sta = spacetime13();
  const auto g0 = Multivector::generator(sta, 0);
  const auto g1 = Multivector::generator(sta, 1);
  EXPECT_EQ(lift_hyper(PlanePoint{}).a_hat, g0);
  const auto a = lift_hyper(PlanePoint{{0.5, 0, 0}}).a_hat;
  EXPECT_MV_NEAR(a, (5.0 * g0 + 4.0 * g1) / 3.0, 1e-15);
  EXPECT_MV_NEAR(a * a, Multivector::scalar(sta, 1.0), 1e-15);
  EXPECT_QS_ERROR(lift_hyper(PlanePoint{{1, 0, 0}}), Errc::domain_violation);
  EXPECT_QS_ERROR(lift_hyper(PlanePoint{{0.6, 0.8, 0}}), Errc::domain_violation);
  EXPECT_QS_ERROR(lift_hyper(PlanePoint{}, euclidean4()), Errc::signature_mismatch);
  EXPECT_QS_ERROR(make_hyper_point(-g0), Errc::domain_violation);
}

TEST(HyperLift, MatchesInverseOracleAndRoundTrips) {
  Sampler rng(46);
  for (const Signature &sig : {spacetime13(), minkowski12()})
    for (int n = 0; n < 200; ++n) {
      const PlanePoint p = rng.ball_point(0.95, sig.dimension() - 1);
      const auto a = lift_hyper(p, sig).a_hat;
      EXPECT_MV_NEAR(a, lift_oracle(sig, p.x), 1e-11);
      EXPECT_NEAR(dot(a, a), 1.0, 1e-12 * max_abs(a) * max_abs(a));
      EXPECT_LE(max_abs_diff(project_hyper(make_hyper_point(a, 1e-10)), p), 1e-10);
    }
}

TEST(HyperBoost, Examples) {
  const auto r0 = hyper_boost(PlanePoint{});
  EXPECT_EQ(r0.rotor, Multivector::scalar(spacetime13(), 1.0));
  EXPECT_EQ(r0.angle, 0.0);
  const auto r = hyper_boost(PlanePoint{{0.5, 0, 0}});
  EXPECT_NEAR(r.cos_angle, 5.0 / 3.0, 1e-12);
  EXPECT_NEAR(r.sin_angle, 4.0 / 3.0, 1e-12);
  EXPECT_NEAR(std::cosh(r.angle), 5.0 / 3.0, 1e-12);
  EXPECT_NEAR(r.angle, std::log(3.0), 1e-15);
}

TEST(HyperBoost, SandwichMatchesLift) {
  Sampler rng(47);
  const Signature sta = spacetime13();
  const auto g0 = Multivector::generator(sta, 0);
  for (int n = 0; n < 200; ++n) {
    const PlanePoint p = rng.ball_point(0.95);
    const auto r = hyper_boost(p);
    const auto a = lift_hyper(p).a_hat;
    EXPECT_LE(max_abs_diff(oracle::product(oracle::product(r.rotor, g0), reverse(r.rotor)), a),
              1e-10 * max_abs(a));
    EXPECT_MV_NEAR(r.rotor * reverse(r.rotor), Multivector::scalar(sta, 1.0), 1e-12);
    EXPECT_NEAR(r.cos_angle * r.cos_angle - r.sin_angle * r.sin_angle, 1.0,
                1e-12 * r.cos_angle * r.cos_angle);
    EXPECT_MV_NEAR(hyper_reflection_form(p), a, 1e-10 * max_abs(a));
  }
}

TEST(HyperMetric, Examples) {
  EXPECT_DOUBLE_EQ(hyper_metric(PlanePoint{}, {1, 0, 0}).ds2, -4.0);
  EXPECT_NEAR(hyper_metric(PlanePoint{{0.5, 0, 0}}, {0, 1, 0}).ds2, -64.0 / 9.0, 1e-14);
}

TEST(HyperMetric, FiniteDifferencesWithNegativeSign) {
  Sampler rng(48);
  const double h = 1e-5;
  for (int n = 0; n < 200; ++n) {
    const PlanePoint p = rng.ball_point(0.9);
    const Vec3 dx = rng.vec3();
    const auto arc = hyper_metric(p, dx);
    const auto fd = (lift_hyper(PlanePoint{axpy(h, dx, p.x)}).a_hat -
                     lift_hyper(PlanePoint{axpy(-h, dx, p.x)}).a_hat) /
                    (2.0 * h);
    EXPECT_LT(arc.ds2, 0.0);
    EXPECT_LE(rel(arc.ds2, dot(fd, fd)), 1e-6);
    EXPECT_NEAR(dot(arc.da_hat, lift_hyper(p).a_hat), 0.0, 1e-10 * max_abs(arc.da_hat));
  }
}

TEST(Curves, SphereCrossSection) {
  const auto rows = sphere_cross_section(3);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(rows[1].x.x[0], 0.0, 1e-15);
  EXPECT_MV_NEAR(*rows[1].a_hat, Multivector::generator(euclidean4(), 0), 1e-15);
  for (const auto &r : sphere_cross_section(50)) {
    ASSERT_TRUE(r.a_hat);
    EXPECT_NEAR(dot(*r.a_hat, *r.a_hat), 1.0, 1e-10);
    // The angle from the pole equals t.
    EXPECT_NEAR(r.a_hat->coeff(BladeIndex{1}), std::cos(r.t), 1e-12);
  }
  EXPECT_QS_ERROR(sphere_cross_section(1), Errc::domain_violation);
}

TEST(Curves, HyperCrossSection) {
  const auto rows = hyper_cross_section(7);
  EXPECT_NEAR(rows.front().t, -3.0, 1e-15);
  EXPECT_NEAR(rows.back().t, 3.0, 1e-15);
  for (const auto &r : rows) {
    EXPECT_NEAR(r.a_hat->coeff(BladeIndex{1}), std::cosh(r.t), 1e-12);
    EXPECT_NEAR(dot(*r.a_hat, *r.a_hat), 1.0, 1e-10);
  }
}

TEST(Curves, PoincareGeodesic) {
  const auto rows = poincare_geodesic(9);
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_NEAR(rows.front().x.norm2(), 1.0, 1e-10);
  EXPECT_NEAR(rows.back().x.norm2(), 1.0, 1e-10);
  EXPECT_FALSE(rows.front().a_hat);
  EXPECT_FALSE(rows.back().a_hat);
  for (std::size_t k = 1; k + 1 < rows.size(); ++k) {
    const auto &r = rows[k];
    ASSERT_TRUE(r.a_hat);
    EXPECT_LT(r.x.norm2(), 1.0);
    EXPECT_NEAR(dot(*r.a_hat, *r.a_hat), 1.0, 1e-10);
    // On the circle of radius 3/4 about (0, 5/4).
    EXPECT_NEAR(std::hypot(r.x.x[0], r.x.x[1] - 1.25), 0.75, 1e-14);
  }
  EXPECT_QS_ERROR(poincare_geodesic(5, 1.0), Errc::domain_violation);
}
