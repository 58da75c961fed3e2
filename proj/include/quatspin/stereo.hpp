#pragma once

// Stereographic projection from the pole -g0 (generator 0 of the active
// signature) onto the unit sphere of Cl(n,0) and the future unit hyperboloid
// of Cl(1,n-1), n = 3 or 4.
//
// Flat points are coordinates on generators 1..n-1. With m = x + g0:
//   sphere:      a = ((1 - x^2) g0 + 2x) / (1 + x^2),   x^2 = |x|^2
//   hyperboloid: a = ((1 + x^2) g0 + 2x) / (1 - x^2),   |x| < 1
// and in both cases a = m^ g0 m^ = R g0 R~ with R = exp(angle/2 * x^ g0).

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "quatspin/multivector.hpp"
#include "quatspin/quaternion.hpp"

namespace quatspin {

struct PlanePoint {
  Vec3 x{0.0, 0.0, 0.0};

  double norm2() const { return dot3(x, x); }
  friend bool operator==(const PlanePoint &, const PlanePoint &) = default;
};

inline double max_abs_diff(const PlanePoint &a, const PlanePoint &b) {
  return std::max({std::abs(a.x[0] - b.x[0]), std::abs(a.x[1] - b.x[1]), std::abs(a.x[2] - b.x[2])});
}

struct SpherePoint {
  Multivector a_hat;
};

struct HyperPoint {
  Multivector a_hat;
};

struct Rotor {
  Multivector rotor;
  double angle = 0.0; ///< theta in [0, pi) or rapidity phi >= 0
  double cos_angle = 1.0; ///< cos theta or cosh phi, from the rational closed form
  double sin_angle = 0.0; ///< sin theta or sinh phi, from the rational closed form
};

struct ArcElement {
  Multivector da_hat;
  double ds2 = 0.0;
};

namespace detail {

inline void require_sphere_signature(const Signature &sig) {
  if (sig.minus_count() != 0 || sig.dimension() < 3 || sig.dimension() > 4)
    throw Error(Errc::signature_mismatch, "sphere branch needs Cl(3,0) or Cl(4,0), got " +
                                              sig.to_string());
}

inline void require_hyper_signature(const Signature &sig) {
  if (sig.plus_count() != 1 || sig.dimension() < 3 || sig.dimension() > 4)
    throw Error(Errc::signature_mismatch, "hyperbolic branch needs Cl(1,2) or Cl(1,3), got " +
                                              sig.to_string());
}

inline void require_fits(const PlanePoint &p, const Signature &sig) {
  if (sig.dimension() == 3 && p.x[2] != 0.0)
    throw Error(Errc::domain_violation, "third coordinate must vanish in " + sig.to_string());
}

inline Multivector spatial_vector(const Signature &sig, const Vec3 &x) {
  std::vector<double> c(sig.blade_count(), 0.0);
  for (int k = 0; k + 1 < sig.dimension(); ++k)
    c[std::size_t{1} << (k + 1)] = x[k];
  return Multivector(sig, std::move(c));
}

inline PlanePoint spatial_part(const Multivector &a) {
  PlanePoint p;
  for (int k = 0; k + 1 < a.signature().dimension(); ++k)
    p.x[k] = a.coeff(BladeIndex{1u << (k + 1)});
  return p;
}

/// sum_k u_k g_k g0 for a unit direction u.
inline Multivector direction_bivector(const Signature &sig, const Vec3 &u) {
  return spatial_vector(sig, u) * Multivector::generator(sig, 0);
}

inline Multivector pole(const Signature &sig) { return Multivector::generator(sig, 0); }

inline void require_unit_vector(const Multivector &a, double tol) {
  if (!is_vector(a, tol))
    throw Error(Errc::not_a_vector, "point must be grade 1");
  const double sq = dot(a, a, tol);
  if (std::abs(sq - 1.0) > tol)
    throw Error(Errc::domain_violation, "point must square to 1, got " + std::to_string(sq));
}

} // namespace detail

inline SpherePoint make_sphere_point(const Multivector &a, double tol = default_tolerance) {
  detail::require_sphere_signature(a.signature());
  detail::require_unit_vector(a, tol);
  return {a};
}

inline HyperPoint make_hyper_point(const Multivector &a, double tol = default_tolerance) {
  detail::require_hyper_signature(a.signature());
  detail::require_unit_vector(a, tol);
  if (a.coeff(BladeIndex{1}) < 1.0 - tol)
    throw Error(Errc::domain_violation, "hyperboloid point needs a0 >= 1");
  return {a};
}

// Sphere branch --------------------------------------------------------------

/// x_m with m = 2/(a + e0) = (a + e0)/(1 + e0.a) = x_m + e0.
inline PlanePoint project_sphere(const SpherePoint &p, double tol = default_tolerance) {
  const Multivector &a = p.a_hat;
  const Signature &sig = a.signature();
  const double denom = 1.0 + dot(detail::pole(sig), a, tol);
  if (denom < tol)
    throw Error(Errc::pole_singularity, "projection from the south pole");
  return detail::spatial_part((a + detail::pole(sig)) / denom);
}

inline SpherePoint lift_sphere(const PlanePoint &p, const Signature &sig = euclidean4()) {
  detail::require_sphere_signature(sig);
  detail::require_fits(p, sig);
  const double s = p.norm2();
  const Multivector x = detail::spatial_vector(sig, p.x);
  return {((1.0 - s) * detail::pole(sig) + 2.0 * x) / (1.0 + s)};
}

/// R = exp(theta/2 x^ e0) with cos theta = (1-x^2)/(1+x^2), sin theta = 2|x|/(1+x^2).
inline Rotor sphere_rotor(const PlanePoint &p, const Signature &sig = euclidean4()) {
  detail::require_sphere_signature(sig);
  detail::require_fits(p, sig);
  const double s = p.norm2();
  const double r = std::sqrt(s);
  if (r == 0.0)
    return {Multivector::scalar(sig, 1.0), 0.0, 1.0, 0.0};
  const double c = (1.0 - s) / (1.0 + s);
  const double sn = 2.0 * r / (1.0 + s);
  const double theta = std::atan2(sn, c);
  const Multivector b = detail::direction_bivector(sig, scale3(1.0 / r, p.x));
  return {exp_blade(0.5 * theta * b), theta, c, sn};
}

/// da = [2(1+x^2)dx - 4(x + e0)(x.dx)] / (1+x^2)^2 and (da)^2 = 4dx^2/(1+x^2)^2.
inline ArcElement sphere_metric(const PlanePoint &p, const Vec3 &dx,
                                const Signature &sig = euclidean4()) {
  detail::require_sphere_signature(sig);
  detail::require_fits(p, sig);
  detail::require_fits(PlanePoint{dx}, sig);
  const double s = p.norm2();
  const double w = (1.0 + s) * (1.0 + s);
  const Multivector x = detail::spatial_vector(sig, p.x);
  const Multivector d = detail::spatial_vector(sig, dx);
  const Multivector da =
      (2.0 * (1.0 + s) * d - 4.0 * dot3(p.x, dx) * (x + detail::pole(sig))) / w;
  return {da, 4.0 * dot3(dx, dx) / w};
}

/// m^ e0 m^ with m^ = (x + e0)/|x + e0|.
inline Multivector sphere_reflection_form(const PlanePoint &p,
                                          const Signature &sig = euclidean4()) {
  detail::require_sphere_signature(sig);
  detail::require_fits(p, sig);
  const Multivector m = detail::spatial_vector(sig, p.x) + detail::pole(sig);
  const Multivector m_hat = m / std::sqrt(1.0 + p.norm2());
  return m_hat * detail::pole(sig) * m_hat;
}

/// (m^ e0)^2 e0: the one-sided rotor form.
inline Multivector sphere_one_sided_form(const PlanePoint &p,
                                         const Signature &sig = euclidean4()) {
  detail::require_sphere_signature(sig);
  detail::require_fits(p, sig);
  const Multivector m = detail::spatial_vector(sig, p.x) + detail::pole(sig);
  const Multivector m_hat = m / std::sqrt(1.0 + p.norm2());
  const Multivector half = m_hat * detail::pole(sig);
  return half * half * detail::pole(sig);
}

// Hyperbolic branch ----------------------------------------------------------

namespace detail {
inline void require_open_ball(const PlanePoint &p) {
  if (!(p.norm2() < 1.0))
    throw Error(Errc::domain_violation,
                "|x|^2 = " + std::to_string(p.norm2()) + " outside the open unit ball");
}
} // namespace detail

/// x_m with m = 2/(a + g0) = (a + g0)/(1 + a0).
inline PlanePoint project_hyper(const HyperPoint &p, double tol = default_tolerance) {
  const Multivector &a = p.a_hat;
  const Signature &sig = a.signature();
  const double denom = 1.0 + dot(detail::pole(sig), a, tol);
  return detail::spatial_part((a + detail::pole(sig)) / denom);
}

inline HyperPoint lift_hyper(const PlanePoint &p, const Signature &sig = spacetime13()) {
  detail::require_hyper_signature(sig);
  detail::require_fits(p, sig);
  detail::require_open_ball(p);
  const double s = p.norm2();
  const Multivector x = detail::spatial_vector(sig, p.x);
  return {((1.0 + s) * detail::pole(sig) + 2.0 * x) / (1.0 - s)};
}

/// R = exp(phi/2 x^ g0) with cosh phi = (1+x^2)/(1-x^2), sinh phi = 2|x|/(1-x^2).
inline Rotor hyper_boost(const PlanePoint &p, const Signature &sig = spacetime13()) {
  detail::require_hyper_signature(sig);
  detail::require_fits(p, sig);
  detail::require_open_ball(p);
  const double s = p.norm2();
  const double r = std::sqrt(s);
  if (r == 0.0)
    return {Multivector::scalar(sig, 1.0), 0.0, 1.0, 0.0};
  const double ch = (1.0 + s) / (1.0 - s);
  const double sh = 2.0 * r / (1.0 - s);
  const double phi = 2.0 * std::atanh(r);
  const Multivector b = detail::direction_bivector(sig, scale3(1.0 / r, p.x));
  return {exp_blade(0.5 * phi * b), phi, ch, sh};
}

/// da = [2(1-x^2)dx + 4(x + g0)(x.dx)] / (1-x^2)^2 and (da)^2 = -4dx^2/(1-x^2)^2,
/// with x^2 and x.dx the Euclidean values of the coordinates.
inline ArcElement hyper_metric(const PlanePoint &p, const Vec3 &dx,
                               const Signature &sig = spacetime13()) {
  detail::require_hyper_signature(sig);
  detail::require_fits(p, sig);
  detail::require_fits(PlanePoint{dx}, sig);
  detail::require_open_ball(p);
  const double s = p.norm2();
  const double w = (1.0 - s) * (1.0 - s);
  const Multivector x = detail::spatial_vector(sig, p.x);
  const Multivector d = detail::spatial_vector(sig, dx);
  const Multivector da =
      (2.0 * (1.0 - s) * d + 4.0 * dot3(p.x, dx) * (x + detail::pole(sig))) / w;
  return {da, -4.0 * dot3(dx, dx) / w};
}

inline Multivector hyper_reflection_form(const PlanePoint &p,
                                         const Signature &sig = spacetime13()) {
  detail::require_hyper_signature(sig);
  detail::require_fits(p, sig);
  detail::require_open_ball(p);
  const Multivector m = detail::spatial_vector(sig, p.x) + detail::pole(sig);
  const Multivector m_hat = m / std::sqrt(1.0 - p.norm2());
  return m_hat * detail::pole(sig) * m_hat;
}

// Curve sampling -------------------------------------------------------------

struct CurveSample {
  double t = 0.0;
  PlanePoint x;
  std::optional<Multivector> a_hat; ///< empty where the lift is undefined
};

namespace detail {
inline void require_samples(int samples) {
  if (samples < 2)
    throw Error(Errc::domain_violation, "need at least 2 samples");
}
} // namespace detail

/// Great circle through the poles in the e0-e1 plane, angle t in (-pi, pi).
/// Odd sample counts include t = 0 (x = 0, a = e0).
inline std::vector<CurveSample> sphere_cross_section(int samples) {
  detail::require_samples(samples);
  std::vector<CurveSample> out;
  for (int k = 0; k < samples; ++k) {
    const double t = -std::numbers::pi + 2.0 * std::numbers::pi * (k + 1) / (samples + 1);
    const PlanePoint x{{std::tan(0.5 * t), 0.0, 0.0}};
    out.push_back({t, x, lift_sphere(x).a_hat});
  }
  return out;
}

/// Hyperbola in the g0-g1 plane, rapidity t in [-max_rapidity, max_rapidity].
inline std::vector<CurveSample> hyper_cross_section(int samples, double max_rapidity = 3.0) {
  detail::require_samples(samples);
  std::vector<CurveSample> out;
  for (int k = 0; k < samples; ++k) {
    const double t = -max_rapidity + 2.0 * max_rapidity * k / (samples - 1);
    const PlanePoint x{{std::tanh(0.5 * t), 0.0, 0.0}};
    out.push_back({t, x, lift_hyper(x).a_hat});
  }
  return out;
}

/// Arc of the circle centred at (0, d), radius sqrt(d^2 - 1), inside the unit
/// disk; the circle meets the unit circle at right angles. The lift lies on
/// the hyperboloid of Cl(1,2). The two endpoints sit on the unit circle and
/// carry no lift.
inline std::vector<CurveSample> poincare_geodesic(int samples, double center_distance = 1.25) {
  detail::require_samples(samples);
  if (!(center_distance > 1.0))
    throw Error(Errc::domain_violation, "center distance must exceed 1");
  const double d = center_distance;
  const double r = std::sqrt(d * d - 1.0);
  const double start = std::atan2(1.0 / d - d, -r / d);
  const double stop = std::atan2(1.0 / d - d, r / d);
  const Signature sig = minkowski12();
  std::vector<CurveSample> out;
  for (int k = 0; k < samples; ++k) {
    const double t = start + (stop - start) * k / (samples - 1);
    const PlanePoint x{{r * std::cos(t), d + r * std::sin(t), 0.0}};
    CurveSample sample{t, x, std::nullopt};
    if (k != 0 && k != samples - 1)
      sample.a_hat = lift_hyper(x, sig).a_hat;
    out.push_back(sample);
  }
  return out;
}

} // namespace quatspin
