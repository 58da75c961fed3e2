#pragma once

// Four-component Dirac columns as elements of the minimal left ideal of
// u++ in the complexified spacetime algebra. The classical imaginary unit j
// is kept apart from the pseudoscalar i = g0123:
//   u(a,b) = (1 + a g0)(1 + b j g12) / 4,   j u++ = g21 u++.
// The column basis is (1, e13, e3, e1) u++ with e_k = g_k g0.

#include <array>
#include <complex>
#include <cmath>

#include "quatspin/iso_map.hpp"
#include "quatspin/multivector.hpp"
#include "quatspin/qspinor.hpp"
#include "quatspin/quaternion.hpp"

namespace quatspin {

/// re + j im over Cl(1,3).
struct ComplexMultivector {
  Multivector re;
  Multivector im;

  static ComplexMultivector real(const Multivector &a) { return {a, Multivector(a.signature())}; }
  static ComplexMultivector j_times(const Multivector &a) { return {Multivector(a.signature()), a}; }

  ComplexMultivector conj() const { return {re, -im}; }

  friend ComplexMultivector operator+(const ComplexMultivector &a, const ComplexMultivector &b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexMultivector operator-(const ComplexMultivector &a, const ComplexMultivector &b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexMultivector operator*(double s, const ComplexMultivector &a) {
    return {s * a.re, s * a.im};
  }
  friend ComplexMultivector operator*(std::complex<double> z, const ComplexMultivector &a) {
    return {z.real() * a.re - z.imag() * a.im, z.real() * a.im + z.imag() * a.re};
  }
  friend ComplexMultivector operator*(const ComplexMultivector &a, const ComplexMultivector &b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexMultivector operator*(const Multivector &a, const ComplexMultivector &b) {
    return {a * b.re, a * b.im};
  }
  friend ComplexMultivector operator*(const ComplexMultivector &a, const Multivector &b) {
    return {a.re * b, a.im * b};
  }
  friend bool operator==(const ComplexMultivector &, const ComplexMultivector &) = default;
};

inline double max_abs(const ComplexMultivector &a) {
  return std::max(max_abs(a.re), max_abs(a.im));
}

inline double max_abs_diff(const ComplexMultivector &a, const ComplexMultivector &b) {
  return std::max(max_abs_diff(a.re, b.re), max_abs_diff(a.im, b.im));
}

/// g0 rev(a) g0 with j -> -j.
inline ComplexMultivector hermitian_adjoint(const ComplexMultivector &a) {
  const Multivector g0 = Multivector::generator(a.re.signature(), 0);
  return {g0 * reverse(a.re) * g0, -(g0 * reverse(a.im) * g0)};
}

struct DiracSpinor4 {
  std::array<std::complex<double>, 4> phi{};

  double norm2() const {
    double s = 0.0;
    for (const auto &z : phi)
      s += std::norm(z);
    return s;
  }

  /// (Re phi1, Im phi1, ..., Re phi4, Im phi4)
  static DiracSpinor4 from_reals(const std::array<double, 8> &r) {
    DiracSpinor4 d;
    for (int k = 0; k < 4; ++k)
      d.phi[k] = {r[2 * k], r[2 * k + 1]};
    return d;
  }

  std::array<double, 8> to_reals() const {
    std::array<double, 8> r{};
    for (int k = 0; k < 4; ++k) {
      r[2 * k] = phi[k].real();
      r[2 * k + 1] = phi[k].imag();
    }
    return r;
  }

  friend bool operator==(const DiracSpinor4 &, const DiracSpinor4 &) = default;
};

inline double max_abs_diff(const DiracSpinor4 &a, const DiracSpinor4 &b) {
  double m = 0.0;
  for (int k = 0; k < 4; ++k)
    m = std::max(m, std::abs(a.phi[k] - b.phi[k]));
  return m;
}

struct DiracIdempotent {
  int time_sign = 1; ///< sign of g0
  int spin_sign = 1; ///< sign of j g12

  ComplexMultivector element() const {
    const Signature sta = spacetime13();
    const Multivector a = 0.25 * (1.0 + time_sign * Multivector::generator(sta, 0));
    const Multivector g12 = Multivector::product_of(sta, {1, 2});
    return {a, spin_sign * (a * g12)};
  }

  friend bool operator==(const DiracIdempotent &, const DiracIdempotent &) = default;
};

inline std::array<DiracIdempotent, 4> dirac_idempotents() {
  return {{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
}

inline ComplexMultivector u_plus_plus() { return DiracIdempotent{1, 1}.element(); }

/// Images of the column units (1, e13, e3, e1) in Cl(1,3).
inline std::array<Multivector, 4> dirac_columns() {
  const Signature g4 = euclidean4();
  return {g4_to_sta(Multivector::scalar(g4, 1.0)), g4_to_sta(Multivector::blade(g4, blade4::e13)),
          g4_to_sta(Multivector::blade(g4, blade4::e3)),
          g4_to_sta(Multivector::blade(g4, blade4::e1))};
}

/// sum_k c_k (Re phi_k + Im phi_k g21) u++: the j of each component acts as g21
/// on the right-hand idempotent.
inline ComplexMultivector dirac_to_geometric(const DiracSpinor4 &d) {
  const Signature sta = spacetime13();
  const Multivector g21 = Multivector::product_of(sta, {2, 1});
  const auto cols = dirac_columns();
  Multivector factor(sta);
  for (int k = 0; k < 4; ++k)
    factor = factor + cols[k] * (d.phi[k].real() + d.phi[k].imag() * g21);
  return factor * u_plus_plus();
}

/// The real element X with X u++ = dirac_to_geometric(d):
/// (x1 + x4 e1 + y4 e2 + x3 e3) + i (y3 + y2 e1 - x2 e2 + y1 e3), phi_k = x_k + j y_k.
inline Multivector dirac_real_factor(const DiracSpinor4 &d) {
  const Signature g4 = euclidean4();
  const auto x = [&](int k) { return d.phi[k - 1].real(); };
  const auto y = [&](int k) { return d.phi[k - 1].imag(); };
  const Multivector e1 = Multivector::blade(g4, blade4::e1);
  const Multivector e2 = Multivector::blade(g4, blade4::e2);
  const Multivector e3 = Multivector::blade(g4, blade4::e3);
  const Multivector i = Multivector::blade(g4, blade4::e123);
  const Multivector X = (x(1) + x(4) * e1 + y(4) * e2 + x(3) * e3) +
                        i * (y(3) + y(2) * e1 - x(2) * e2 + y(1) * e3);
  return g4_to_sta(X);
}

namespace detail {

/// {q u++} and {q i u++} for q in (1, i e1, i e2, i e3); pairwise orthogonal
/// under the flat coefficient product, each with squared length 1/4.
inline const std::array<ComplexMultivector, 8> &dirac_ideal_basis() {
  static const std::array<ComplexMultivector, 8> basis = [] {
    const ComplexMultivector u = u_plus_plus();
    const Signature g4 = euclidean4();
    const Multivector i = Multivector::blade(g4, blade4::e123);
    const std::array<Multivector, 4> q{Multivector::scalar(g4, 1.0), i * Multivector::blade(g4, blade4::e1),
                                       i * Multivector::blade(g4, blade4::e2),
                                       i * Multivector::blade(g4, blade4::e3)};
    return std::array<ComplexMultivector, 8>{
        g4_to_sta(q[0]) * u,     g4_to_sta(q[1]) * u,     g4_to_sta(q[2]) * u,
        g4_to_sta(q[3]) * u,     g4_to_sta(q[0] * i) * u, g4_to_sta(q[1] * i) * u,
        g4_to_sta(q[2] * i) * u, g4_to_sta(q[3] * i) * u};
  }();
  return basis;
}

inline double flat_dot(const ComplexMultivector &a, const ComplexMultivector &b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.re.coeffs().size(); ++k)
    s += a.re.coeffs()[k] * b.re.coeffs()[k] + a.im.coeffs()[k] * b.im.coeffs()[k];
  return s;
}

} // namespace detail

/// Reads (q0, q1) from m = (q0 + q1 i) u++.
inline QSpinor geometric_to_qspinor(const ComplexMultivector &m, double tol = default_tolerance) {
  if (!(m.re.signature() == spacetime13()) || !(m.im.signature() == spacetime13()))
    throw Error(Errc::signature_mismatch, "Dirac ideal elements live in Cl(1,3)");
  if (max_abs_diff(m * u_plus_plus(), m) > tol * std::max(1.0, max_abs(m)))
    throw Error(Errc::not_in_ideal, "element is not in the u++ ideal");
  const auto &basis = detail::dirac_ideal_basis();
  std::array<double, 8> c{};
  for (int k = 0; k < 8; ++k)
    c[k] = 4.0 * detail::flat_dot(basis[k], m);
  return {Quaternion{c[0], {c[1], c[2], c[3]}}, Quaternion{c[4], {c[5], c[6], c[7]}},
          AlgebraTag::spacetime13};
}

/// phi1 = x0 + j x3, phi2 = -x2 + j x1, phi3 = -y3 + j y0, phi4 = -y1 - j y2
/// for q0 = x0 + i x, q1 = y0 + i y.
inline DiracSpinor4 qspinor_to_dirac(const QSpinor &psi) {
  const Quaternion &a = psi.q0;
  const Quaternion &b = psi.q1;
  return {{{{a.s, a.v[2]}, {-a.v[1], a.v[0]}, {-b.v[2], b.s}, {-b.v[0], -b.v[1]}}}};
}

/// Inverse of the component list.
inline QSpinor dirac_to_qspinor_components(const DiracSpinor4 &d) {
  const auto &p = d.phi;
  return {Quaternion{p[0].real(), {p[1].imag(), -p[1].real(), p[0].imag()}},
          Quaternion{p[2].imag(), {-p[3].real(), -p[3].imag(), -p[2].real()}},
          AlgebraTag::spacetime13};
}

/// 4 <m^H m>_0 with ^H the hermitian adjoint; equals the column norm.
inline double dirac_ideal_norm(const ComplexMultivector &m) {
  return 4.0 * (hermitian_adjoint(m) * m).re.scalar_part();
}

/// Two readings of J: -j i, and j g0123 (the negative of the first).
enum class JConvention { minus_j_i, j_pseudoscalar };

inline ComplexMultivector j_unit_J(JConvention conv) {
  const Multivector I = Multivector::product_of(spacetime13(), {0, 1, 2, 3});
  return ComplexMultivector::j_times(conv == JConvention::minus_j_i ? -I : I);
}

/// J applied on the left.
inline ComplexMultivector apply_J(JConvention conv, const ComplexMultivector &m) {
  return j_unit_J(conv) * m;
}

/// E+ = (1 + J e3)/2 with e3 = g3 g0.
inline ComplexMultivector e_plus(JConvention conv) {
  const Signature sta = spacetime13();
  const Multivector e3 = g4_to_sta(Multivector::blade(euclidean4(), blade4::e3));
  return 0.5 * (ComplexMultivector::real(Multivector::scalar(sta, 1.0)) + j_unit_J(conv) * e3);
}

/// max |v+ E+ - u++|: zero when the convention reproduces u++.
inline double e_plus_residual(JConvention conv) {
  const Multivector v_plus = 0.5 * (1.0 + Multivector::generator(spacetime13(), 0));
  return max_abs_diff(v_plus * e_plus(conv), u_plus_plus());
}

} // namespace quatspin
