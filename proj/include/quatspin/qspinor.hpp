#pragma once

// Quaternion spinors alpha = (q0 + q1 i) v+ with i = e123 (= g0123 under the
// isomorphism) and v+ = (1 + e0)/2. Images live in Cl(4,0) or Cl(1,3)
// according to the tag; the bilinear identities are evaluated in Cl(1,3).

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quatspin/gspinor.hpp"
#include "quatspin/iso_map.hpp"
#include "quatspin/multivector.hpp"
#include "quatspin/quaternion.hpp"
#include "quatspin/stereo.hpp"

namespace quatspin {

struct QSpinor {
  Quaternion q0;
  Quaternion q1;
  AlgebraTag tag = AlgebraTag::spacetime13;
};

struct CanonicalQ {
  double rho = 0.0;
  double theta = 0.0;
  Vec3 x_dir{0.0, 0.0, 1.0}; ///< axis of the phase e^{theta i x}
  Multivector M;
  Multivector M_hat;
};

struct OrthogonalQ {
  CanonicalQ canon;
  Vec3 x_m{0.0, 0.0, 0.0}; ///< M = (1 + x_m) e0
};

struct GradeParts {
  double g0 = 0.0;
  Quaternion g1;
};

/// Which involution builds the bra: the Cl(4,0) reverse (g0 g~ g0 in Cl(1,3))
/// or the Cl(1,3) reverse.
enum class Adjoint { hermitian, spacetime_reverse };

struct FidelityRoutesQ {
  double chain = 0.0;  ///< <b|a><a|b>
  double closed = 0.0; ///< (1 + A'.B')/2
  double residual() const { return std::abs(chain - closed); }
};

/// (ab + ba)/2
inline Quaternion circ(const Quaternion &a, const Quaternion &b) {
  return 0.5 * (a * b + b * a);
}

/// (ab - ba)/2
inline Quaternion otimes(const Quaternion &a, const Quaternion &b) {
  return 0.5 * (a * b - b * a);
}

/// Scalar and vector parts of q1 q0^dagger for (a, b) = (q0, q1).
inline GradeParts grade_parts(const Quaternion &a, const Quaternion &b) {
  const Quaternion sym = 0.5 * (b * a.conj() + a * b.conj());
  const Quaternion anti = 0.5 * (b * a.conj() - a * b.conj());
  return {sym.s, anti};
}

namespace detail {

inline void require_q_tag(AlgebraTag tag) {
  if (tag != AlgebraTag::euclidean4 && tag != AlgebraTag::spacetime13)
    throw Error(Errc::tag_mismatch, "quaternion spinors live in Euclidean4 or Spacetime13, not " +
                                        std::string(to_string(tag)));
}

inline AlgebraTag q_tag_of(const Signature &sig) {
  if (sig == euclidean4())
    return AlgebraTag::euclidean4;
  if (sig == spacetime13())
    return AlgebraTag::spacetime13;
  throw Error(Errc::signature_mismatch, "expected Cl(4,0) or Cl(1,3), got " + sig.to_string());
}

inline Multivector g4_unit(BladeIndex b) { return Multivector::blade(euclidean4(), b); }

inline Multivector v_plus_g4() { return 0.5 * (1.0 + g4_unit(blade4::e0)); }

inline Multivector image_g4(const QSpinor &psi) {
  return (to_multivector(psi.q0) + to_multivector(psi.q1) * g4_unit(blade4::e123)) *
         v_plus_g4();
}

inline Multivector to_sta(const Multivector &g) { return to_algebra(g, AlgebraTag::spacetime13); }

inline void require_same_q_tag(const QSpinor &a, const QSpinor &b) {
  if (a.tag != b.tag)
    throw Error(Errc::tag_mismatch, std::string(to_string(a.tag)) + " vs " +
                                        std::string(to_string(b.tag)));
}


} // namespace detail

/// v+ = (1 + e0)/2 in the algebra of `tag`.
inline Multivector idempotent_q(AlgebraTag tag) {
  detail::require_q_tag(tag);
  return to_algebra(detail::v_plus_g4(), tag);
}

inline Multivector image(const QSpinor &psi) {
  detail::require_q_tag(psi.tag);
  return to_algebra(detail::image_g4(psi), psi.tag);
}

/// Inverts `image`: q0 is twice the part in span{1, e23, e13, e12} and q1 i
/// twice the part in span{e1, e2, e3, e123}.
inline QSpinor qspinor_from_image(const Multivector &m, double tol = default_tolerance) {
  const AlgebraTag tag = detail::q_tag_of(m.signature());
  const Multivector g = to_algebra(m, AlgebraTag::euclidean4);
  if (!detail::in_ideal(g, detail::v_plus_g4(), tol))
    throw Error(Errc::not_in_ideal, "element is not in the v+ ideal");
  const Quaternion q0 = 2.0 * quaternion_part(g);
  const Multivector odd = 2.0 * (g.coeff(blade4::e1) * detail::g4_unit(blade4::e1) +
                                 g.coeff(blade4::e2) * detail::g4_unit(blade4::e2) +
                                 g.coeff(blade4::e3) * detail::g4_unit(blade4::e3) +
                                 g.coeff(blade4::e123) * detail::g4_unit(blade4::e123));
  const Quaternion q1 = quaternion_part(-(odd * detail::g4_unit(blade4::e123)));
  return {q0, q1, tag};
}

/// alpha = rho e^{theta i x} M^ v+ with e^{theta i x} = q0/|q0|,
/// M = e0 + w0 i + <w>_2 i e0 and w = q0^dagger q1 / |q0|^2.
inline CanonicalQ canonical_q(const QSpinor &psi, double tol = default_tolerance) {
  detail::require_q_tag(psi.tag);
  const double n0 = psi.q0.norm2();
  const double n1 = psi.q1.norm2();
  if (n0 <= tol * tol * std::max(1.0, n1))
    throw Error(Errc::zero_q0, "q0 = 0 has no canonical form");
  const double rho2 = n0 - n1;
  if (rho2 <= tol * (n0 + n1))
    throw Error(Errc::non_timelike, "rho^2 = " + std::to_string(rho2));

  const Quaternion w = (1.0 / n0) * (psi.q0.conj() * psi.q1);
  const Multivector e0 = detail::g4_unit(blade4::e0);
  const Multivector i = detail::g4_unit(blade4::e123);
  const Multivector w2 = to_multivector(Quaternion{0.0, w.v});
  const Multivector M = e0 + w.s * i + w2 * i * e0;

  CanonicalQ out{std::sqrt(rho2), 0.0, {0.0, 0.0, 1.0}, to_algebra(M, psi.tag),
                 to_algebra(M / std::sqrt(1.0 - n1 / n0), psi.tag)};
  const double vn = std::sqrt(dot3(psi.q0.v, psi.q0.v));
  out.theta = std::atan2(vn, psi.q0.s);
  if (vn > 0.0)
    out.x_dir = scale3(1.0 / vn, psi.q0.v);
  return out;
}

/// e^{theta i x} = cos theta + sin theta i x in the algebra of `tag`.
inline Multivector phase_element(const CanonicalQ &c, AlgebraTag tag) {
  return to_algebra(to_multivector(Quaternion{std::cos(c.theta),
                                              scale3(std::sin(c.theta), c.x_dir)}),
                    tag);
}

inline Multivector reconstruct(const CanonicalQ &c, AlgebraTag tag) {
  return c.rho * phase_element(c, tag) * c.M_hat * idempotent_q(tag);
}

/// M written directly in Cl(1,3):
/// g0 + [y0 x - x0 y + g123 (x^y)]/(x0^2 - x^2) + g0123 (x0 y0 - x.y)/(x0^2 - x^2)
/// with x, y the spacetime vectors sum_k x_k g_k.
inline Multivector m_spacetime_form(const QSpinor &psi) {
  const Signature sta = spacetime13();
  const auto vec = [&](const Vec3 &u) {
    return u[0] * Multivector::generator(sta, 1) + u[1] * Multivector::generator(sta, 2) +
           u[2] * Multivector::generator(sta, 3);
  };
  const double x0 = psi.q0.s;
  const double y0 = psi.q1.s;
  const Multivector x = vec(psi.q0.v);
  const Multivector y = vec(psi.q1.v);
  const Multivector wedge = 0.5 * (x * y - y * x);
  const double xx = (x * x).scalar_part();
  const double xy = (x * y).scalar_part();
  const double den = x0 * x0 - xx;
  if (den == 0.0)
    throw Error(Errc::zero_q0, "q0 = 0 has no canonical form");
  const Multivector g0 = Multivector::generator(sta, 0);
  const Multivector g123 = Multivector::product_of(sta, {1, 2, 3});
  const Multivector g0123 = Multivector::product_of(sta, {0, 1, 2, 3});
  return g0 + (y0 * x - x0 * y + g123 * wedge) / den + g0123 * ((x0 * y0 - xy) / den);
}

/// <q0^dagger q1>_0 = 0.
inline bool is_orthogonal(const QSpinor &psi, double tol = default_tolerance) {
  const double scale = std::sqrt(psi.q0.norm2() * psi.q1.norm2());
  return std::abs(grade_parts(psi.q0, psi.q1).g0) <= tol * std::max(1.0, scale);
}

/// For orthogonal states M = (1 + x_m) e0 with
/// x_m = (y0 x - x0 y - x cross y) / (x0^2 + |x|^2).
inline OrthogonalQ canonical_orthogonal(const QSpinor &psi, double tol = default_tolerance) {
  if (!is_orthogonal(psi, tol))
    throw Error(Errc::not_orthogonal, "<q0^dagger q1>_0 = " +
                                          std::to_string(grade_parts(psi.q0, psi.q1).g0));
  OrthogonalQ out{canonical_q(psi, tol), {}};
  const Quaternion &a = psi.q0;
  const Quaternion &b = psi.q1;
  out.x_m = scale3(1.0 / a.norm2(),
                   sub3(sub3(scale3(b.s, a.v), scale3(a.s, b.v)), cross3(a.v, b.v)));
  return out;
}

/// M assembled from x_m: (1 + x_m) e0, in the algebra of `tag`.
inline Multivector orthogonal_m(const Vec3 &x_m, AlgebraTag tag) {
  const Multivector x = x_m[0] * detail::g4_unit(blade4::e1) +
                        x_m[1] * detail::g4_unit(blade4::e2) +
                        x_m[2] * detail::g4_unit(blade4::e3);
  return to_algebra((1.0 + x) * detail::g4_unit(blade4::e0), tag);
}

inline Multivector adjoint(const Multivector &g, Adjoint kind) {
  const AlgebraTag tag = detail::q_tag_of(g.signature());
  if (kind == Adjoint::hermitian)
    return to_algebra(reverse(to_algebra(g, AlgebraTag::euclidean4)), tag);
  return to_algebra(reverse(detail::to_sta(g)), tag);
}

/// ket = sqrt2 alpha, bra = sqrt2 adjoint(alpha).
inline BraKet braket_q(const QSpinor &psi, Adjoint kind = Adjoint::hermitian) {
  const Multivector a = image(psi);
  return {std::sqrt(2.0) * a, std::sqrt(2.0) * adjoint(a, kind)};
}

/// |alpha><alpha|
inline Multivector projector(const QSpinor &psi, Adjoint kind = Adjoint::hermitian) {
  const BraKet bk = braket_q(psi, kind);
  return bk.ket * bk.bra;
}

/// Closed form of the hermitian projector of an orthogonal state:
/// (|q0|^2 + |q1|^2) + (x0^2 - y0^2 + |x|^2 - |y|^2) e0 - 2 (x0 y - y0 x - x cross y),
/// with the last vector on e1, e2, e3 of Cl(4,0).
inline Multivector projector_closed_form(const QSpinor &psi, double tol = default_tolerance) {
  if (!is_orthogonal(psi, tol))
    throw Error(Errc::not_orthogonal, "closed form needs an orthogonal state");
  const Quaternion &a = psi.q0;
  const Quaternion &b = psi.q1;
  const Vec3 v = sub3(sub3(scale3(a.s, b.v), scale3(b.s, a.v)), cross3(a.v, b.v));
  const Multivector out =
      (a.norm2() + b.norm2()) +
      (a.norm2() - b.norm2()) * detail::g4_unit(blade4::e0) -
      2.0 * (v[0] * detail::g4_unit(blade4::e1) + v[1] * detail::g4_unit(blade4::e2) +
             v[2] * detail::g4_unit(blade4::e3));
  return to_algebra(out, psi.tag);
}

/// <alpha||alpha> with the spacetime reverse; equals 2 rho^2 v+.
inline Multivector norm_form(const QSpinor &psi) {
  const BraKet bk = braket_q(psi, Adjoint::spacetime_reverse);
  return bk.bra * bk.ket;
}

/// 2 <alpha~ beta>_{0+3}, evaluated in Cl(1,3).
inline Multivector inner_q(const QSpinor &a, const QSpinor &b) {
  detail::require_same_q_tag(a, b);
  const Multivector x = detail::to_sta(image(a));
  const Multivector y = detail::to_sta(image(b));
  return 2.0 * grade_select(reverse(x) * y, {0, 3});
}

inline QSpinor normalized(const QSpinor &psi, double tol = default_tolerance) {
  const CanonicalQ c = canonical_q(psi, tol);
  const double k = 1.0 / c.rho;
  return {k * psi.q0, k * psi.q1, psi.tag};
}

/// A' = M'^ g0 M'^ with M'^ = phase M^ phase~, in Cl(1,3).
inline Multivector bloch_point_q(const QSpinor &psi, double tol = default_tolerance) {
  const CanonicalQ c = canonical_q(psi, tol);
  const Multivector phase = phase_element(c, AlgebraTag::spacetime13);
  const Multivector m = phase * detail::to_sta(c.M_hat) * reverse(phase);
  return m * Multivector::generator(spacetime13(), 0) * m;
}

inline FidelityRoutesQ fidelity_q_routes(const QSpinor &psi, const QSpinor &chi,
                                         double tol = default_tolerance) {
  detail::require_same_q_tag(psi, chi);
  const QSpinor a = normalized(psi, tol);
  const QSpinor b = normalized(chi, tol);
  FidelityRoutesQ r;
  r.chain = (inner_q(b, a) * inner_q(a, b)).scalar_part();
  const Multivector pa = bloch_point_q(a, tol);
  const Multivector pb = bloch_point_q(b, tol);
  r.closed = 0.5 * (1.0 + (0.5 * (pa * pb + pb * pa)).scalar_part());
  return r;
}

/// <b|a><a|b> of the normalized states (a hyperbolic quantity >= 1).
inline double fidelity_q(const QSpinor &psi, const QSpinor &chi, double tol = default_tolerance) {
  return fidelity_q_routes(psi, chi, tol).chain;
}

/// (a0, a1) with a = s + p i in Cl(1,2) becomes q = s + p k, k = i e3.
inline QSpinor from_gspinor(const GSpinor &psi) {
  if (psi.tag != AlgebraTag::minkowski12)
    throw Error(Errc::tag_mismatch, "only Minkowski12 g-spinors embed as quaternion spinors");
  return {Quaternion{psi.a0.s, {0.0, 0.0, psi.a0.p}},
          Quaternion{psi.a1.s, {0.0, 0.0, psi.a1.p}}, AlgebraTag::spacetime13};
}

/// The orthogonal state (1, -i x) whose canonical form has x_m = x.
inline QSpinor qspinor_from_plane(const PlanePoint &x) {
  if (!(x.norm2() < 1.0))
    throw Error(Errc::domain_violation, "|x|^2 = " + std::to_string(x.norm2()) +
                                            " outside the open unit ball");
  return {Quaternion::real(1.0), Quaternion{0.0, scale3(-1.0, x.x)}, AlgebraTag::spacetime13};
}

} // namespace quatspin
