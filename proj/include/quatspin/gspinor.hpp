#pragma once

// Two-component geometric spinors alpha = (a0 + a1 e1) u+ in Cl(3,0) and
// alpha = (a0 + a1 g1) v+ in Cl(1,2), with u+ = (1 + e3)/2, v+ = (1 + g0)/2
// and a0, a1 in the centre span{1, i}.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "quatspin/iso_map.hpp"
#include "quatspin/multivector.hpp"
#include "quatspin/stereo.hpp"

namespace quatspin {

/// s + p i with i the unit pseudoscalar (e123 in Cl(3,0), g012 in Cl(1,2)).
struct CenterScalar {
  double s = 0.0;
  double p = 0.0;

  static CenterScalar of(std::complex<double> z) { return {z.real(), z.imag()}; }
  std::complex<double> to_complex() const { return {s, p}; }
  CenterScalar conj() const { return {s, -p}; }
  double norm2() const { return s * s + p * p; }

  friend CenterScalar operator*(const CenterScalar &a, const CenterScalar &b) {
    return of(a.to_complex() * b.to_complex());
  }
  friend bool operator==(const CenterScalar &, const CenterScalar &) = default;
};

struct GSpinor {
  AlgebraTag tag = AlgebraTag::pauli3;
  CenterScalar a0;
  CenterScalar a1;
};

struct GCanonical {
  double rho = 0.0;
  double theta = 0.0;
  PlanePoint x;       ///< coordinates of x_m on (e1, e2) or (g1, g2)
  Multivector m;      ///< x_m + pole
  Multivector m_hat;  ///< m / sqrt(m^2)
};

struct BraKet {
  Multivector ket;
  Multivector bra;
};

struct FidelityRoutes {
  double chain = 0.0;    ///< <b|a><a|b>
  double dot = 0.0;      ///< (1 + a.b)/2
  double distance = 0.0; ///< 1 - (m_a - m_b)^2 / (m_a^2 m_b^2)

  double max_residual() const {
    return std::max({std::abs(chain - dot), std::abs(chain - distance),
                     std::abs(dot - distance)});
  }
};

namespace detail {

inline void require_spinor_tag(AlgebraTag tag) {
  if (tag != AlgebraTag::pauli3 && tag != AlgebraTag::minkowski12)
    throw Error(Errc::tag_mismatch, "g-spinors live in Pauli3 or Minkowski12, not " +
                                        std::string(to_string(tag)));
}

inline int pole_index(AlgebraTag tag) { return tag == AlgebraTag::pauli3 ? 2 : 0; }

inline Multivector spinor_pole(AlgebraTag tag) {
  return Multivector::generator(signature_of(tag), pole_index(tag));
}

/// e1 in Cl(3,0) (index 0), g1 in Cl(1,2) (index 1).
inline Multivector spinor_column(AlgebraTag tag) {
  return Multivector::generator(signature_of(tag), tag == AlgebraTag::pauli3 ? 0 : 1);
}

inline Multivector pseudoscalar(const Signature &sig) {
  return Multivector::blade(sig, BladeIndex{static_cast<std::uint32_t>(sig.blade_count() - 1)});
}

inline Multivector center(const Signature &sig, const CenterScalar &z) {
  return z.s + z.p * pseudoscalar(sig);
}

inline CenterScalar center_part(const Multivector &a) {
  return {a.scalar_part(),
          a.coeff(BladeIndex{static_cast<std::uint32_t>(a.signature().blade_count() - 1)})};
}

inline void require_same_tag(const GSpinor &a, const GSpinor &b) {
  if (a.tag != b.tag)
    throw Error(Errc::tag_mismatch, std::string(to_string(a.tag)) + " vs " +
                                        std::string(to_string(b.tag)));
}

inline bool in_ideal(const Multivector &m, const Multivector &idem, double tol) {
  return max_abs_diff(m * idem, m) <= tol * std::max(1.0, max_abs(m));
}

} // namespace detail

/// u+ = (1 + e3)/2 in Cl(3,0) or v+ = (1 + g0)/2 in Cl(1,2).
inline Multivector spinor_idempotent(AlgebraTag tag) {
  detail::require_spinor_tag(tag);
  return 0.5 * (1.0 + detail::spinor_pole(tag));
}

inline Multivector to_multivector(const GSpinor &psi) {
  detail::require_spinor_tag(psi.tag);
  const Signature sig = signature_of(psi.tag);
  return (detail::center(sig, psi.a0) +
          detail::center(sig, psi.a1) * detail::spinor_column(psi.tag)) *
         spinor_idempotent(psi.tag);
}

/// The same element through the row-matrix-column product
/// (1, c) idem [[a0, 0], [a1, 0]] (1, +-c)^T with c = e1 or g1.
inline Multivector to_multivector_by_matrix(const GSpinor &psi) {
  detail::require_spinor_tag(psi.tag);
  const Signature sig = signature_of(psi.tag);
  const Multivector one = Multivector::scalar(sig, 1.0);
  const Multivector c = detail::spinor_column(psi.tag);
  const std::array<Multivector, 2> row{one, c};
  const std::array<Multivector, 2> col{one, psi.tag == AlgebraTag::pauli3 ? c : -c};
  const Multivector zero(sig);
  const std::array<std::array<Multivector, 2>, 2> mat{
      {{detail::center(sig, psi.a0), zero}, {detail::center(sig, psi.a1), zero}}};
  const Multivector idem = spinor_idempotent(psi.tag);
  Multivector out(sig);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      out = out + row[j] * idem * mat[j][k] * col[k];
  return out;
}

inline GSpinor gspinor_from_multivector(const Multivector &m, AlgebraTag tag,
                                        double tol = default_tolerance) {
  detail::require_spinor_tag(tag);
  if (!(m.signature() == signature_of(tag)))
    throw Error(Errc::signature_mismatch, "element is not in " + signature_of(tag).to_string());
  if (!detail::in_ideal(m, spinor_idempotent(tag), tol))
    throw Error(Errc::not_in_ideal, "element is not in the spinor ideal");
  const Multivector c = detail::spinor_column(tag);
  const double c_sq = (c * c).scalar_part();
  const CenterScalar a0 = detail::center_part(2.0 * m);
  const CenterScalar a1 = detail::center_part((2.0 * c_sq) * (c * m));
  return {tag, a0, a1};
}

/// ket = sqrt2 alpha, bra = sqrt2 reverse(alpha).
inline BraKet braket(const GSpinor &psi) {
  const Multivector a = to_multivector(psi);
  return {std::sqrt(2.0) * a, std::sqrt(2.0) * reverse(a)};
}

/// 2 <rev(psi) chi>_{0+3}.
inline CenterScalar inner(const GSpinor &psi, const GSpinor &chi) {
  detail::require_same_tag(psi, chi);
  return detail::center_part(2.0 * (reverse(to_multivector(psi)) * to_multivector(chi)));
}

/// |a0|^2 + |a1|^2 in Cl(3,0), |a0|^2 - |a1|^2 in Cl(1,2).
inline double norm2(const GSpinor &psi) {
  detail::require_spinor_tag(psi.tag);
  return psi.tag == AlgebraTag::pauli3 ? psi.a0.norm2() + psi.a1.norm2()
                                       : psi.a0.norm2() - psi.a1.norm2();
}

/// alpha = rho e^{i theta} m^ idem with m = x_m + pole. The ratio
/// a1/a0 = a + b i gives x_m = a e1 + b e2 in Cl(3,0) and a g1 - b g2 in Cl(1,2).
inline GCanonical canonical_form(const GSpinor &psi, double tol = default_tolerance) {
  detail::require_spinor_tag(psi.tag);
  const double n0 = psi.a0.norm2();
  if (n0 <= tol * tol * std::max(1.0, n0 + psi.a1.norm2()))
    throw Error(Errc::degenerate_state, "a0 = 0 has no canonical form");
  const double n = norm2(psi);
  if (psi.tag == AlgebraTag::minkowski12 && n <= tol * (n0 + psi.a1.norm2()))
    throw Error(Errc::non_timelike, "Minkowski norm^2 = " + std::to_string(n));
  const std::complex<double> z = psi.a1.to_complex() / psi.a0.to_complex();
  const Signature sig = signature_of(psi.tag);
  GCanonical out{std::sqrt(n), std::atan2(psi.a0.p, psi.a0.s), PlanePoint{},
                 Multivector(sig), Multivector(sig)};
  Multivector x(sig);
  if (psi.tag == AlgebraTag::pauli3) {
    out.x = PlanePoint{{z.real(), z.imag(), 0.0}};
    x = z.real() * Multivector::generator(sig, 0) + z.imag() * Multivector::generator(sig, 1);
  } else {
    out.x = PlanePoint{{z.real(), -z.imag(), 0.0}};
    x = z.real() * Multivector::generator(sig, 1) - z.imag() * Multivector::generator(sig, 2);
  }
  out.m = x + detail::spinor_pole(psi.tag);
  out.m_hat = out.m / std::sqrt((out.m * out.m).scalar_part());
  return out;
}

inline Multivector reconstruct(const GCanonical &c, AlgebraTag tag) {
  const Signature sig = c.m.signature();
  const Multivector phase = std::cos(c.theta) + std::sin(c.theta) * detail::pseudoscalar(sig);
  return c.rho * phase * c.m_hat * spinor_idempotent(tag);
}

/// a^ = m^ pole m^: the Bloch sphere (hyperboloid) point of the state.
inline Multivector bloch_point(const GSpinor &psi, double tol = default_tolerance) {
  const GCanonical c = canonical_form(psi, tol);
  return c.m_hat * detail::spinor_pole(psi.tag) * c.m_hat;
}

inline GSpinor normalized(const GSpinor &psi, double tol = default_tolerance) {
  const double n = norm2(psi);
  if (!(n > tol))
    throw Error(psi.tag == AlgebraTag::pauli3 ? Errc::degenerate_state : Errc::non_timelike,
                "cannot normalize a state with norm^2 = " + std::to_string(n));
  const double k = 1.0 / std::sqrt(n);
  return {psi.tag, {k * psi.a0.s, k * psi.a0.p}, {k * psi.a1.s, k * psi.a1.p}};
}

inline FidelityRoutes fidelity_routes(const GSpinor &psi, const GSpinor &chi,
                                      double tol = default_tolerance) {
  detail::require_same_tag(psi, chi);
  const GSpinor a = normalized(psi, tol);
  const GSpinor b = normalized(chi, tol);
  FidelityRoutes r;
  r.chain = (inner(b, a) * inner(a, b)).s;

  const GCanonical ca = canonical_form(a, tol);
  const GCanonical cb = canonical_form(b, tol);
  const Multivector pole = detail::spinor_pole(psi.tag);
  r.dot = 0.5 * (1.0 + dot(ca.m_hat * pole * ca.m_hat, cb.m_hat * pole * cb.m_hat));

  const Multivector d = ca.m - cb.m;
  r.distance = 1.0 - (d * d).scalar_part() /
                         ((ca.m * ca.m).scalar_part() * (cb.m * cb.m).scalar_part());
  return r;
}

/// <b|a><a|b> for the normalized states. In Cl(3,0) this is a transition
/// probability in [0, 1]; in Cl(1,2) it is the Bloch hyperboloid quantity >= 1.
inline double fidelity(const GSpinor &psi, const GSpinor &chi, double tol = default_tolerance) {
  return fidelity_routes(psi, chi, tol).chain;
}

/// The state (1, a1) whose canonical x_m has the given coordinates.
inline GSpinor gspinor_from_plane(AlgebraTag tag, const PlanePoint &x) {
  detail::require_spinor_tag(tag);
  if (x.x[2] != 0.0)
    throw Error(Errc::domain_violation, "g-spinor planes are two dimensional");
  if (tag == AlgebraTag::pauli3)
    return {tag, {1.0, 0.0}, {x.x[0], x.x[1]}};
  if (!(x.norm2() < 1.0))
    throw Error(Errc::domain_violation, "|x|^2 = " + std::to_string(x.norm2()) +
                                            " outside the open unit disk");
  return {tag, {1.0, 0.0}, {x.x[0], -x.x[1]}};
}

/// x_b = -1/x_a = -x_a / |x_a|^2, the plane point of the orthogonal state.
inline PlanePoint antipodal_state(const PlanePoint &xa) {
  const double s = xa.norm2();
  if (s == 0.0)
    throw Error(Errc::degenerate_state, "the antipode of the origin is the excluded pole");
  return PlanePoint{scale3(-1.0 / s, xa.x)};
}

} // namespace quatspin
