#pragma once

// The two spectral-basis representations of Cl(4,0) as 2x2 matrices over the
// quaternions:
//
//   e-basis:  g = (1 i) e+ [g]_e (1; -i),    e+ = (1 + e0)/2, i = e123
//   I-basis:  g = (1 e0) I+ [g]_I (1; e0),   I+ = (1 + e0123)/2
//
// Quaternion entries commute with e0, e+ and I+, so both maps are algebra
// homomorphisms with entries multiplied left to right.

#include <array>
#include <cmath>
#include <cstdint>

#include "quatspin/multivector.hpp"
#include "quatspin/quaternion.hpp"

namespace quatspin {

struct QuatMatrix2 {
  std::array<std::array<Quaternion, 2>, 2> m{};

  static QuatMatrix2 identity() {
    QuatMatrix2 r;
    r.m[0][0] = Quaternion::real(1);
    r.m[1][1] = Quaternion::real(1);
    return r;
  }

  static QuatMatrix2 of(Quaternion a, Quaternion b, Quaternion c, Quaternion d) {
    QuatMatrix2 r;
    r.m = {{{a, b}, {c, d}}};
    return r;
  }

  const Quaternion &operator()(int row, int col) const { return m[row][col]; }

  friend QuatMatrix2 operator+(const QuatMatrix2 &a, const QuatMatrix2 &b) {
    QuatMatrix2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.m[i][j] = a.m[i][j] + b.m[i][j];
    return r;
  }

  friend QuatMatrix2 operator*(double s, const QuatMatrix2 &a) {
    QuatMatrix2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.m[i][j] = s * a.m[i][j];
    return r;
  }

  friend QuatMatrix2 operator*(const QuatMatrix2 &a, const QuatMatrix2 &b) {
    QuatMatrix2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return r;
  }

  /// Entrywise quaternion conjugation followed by transposition.
  QuatMatrix2 conj_transpose() const {
    QuatMatrix2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.m[i][j] = m[j][i].conj();
    return r;
  }

  friend bool operator==(const QuatMatrix2 &, const QuatMatrix2 &) = default;
};

inline double max_abs_diff(const QuatMatrix2 &a, const QuatMatrix2 &b) {
  double d = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      d = std::max(d, max_abs_diff(a.m[i][j], b.m[i][j]));
  return d;
}

namespace detail {

inline void require_euclidean4(const Multivector &g) {
  if (!(g.signature() == euclidean4()))
    throw Error(Errc::signature_mismatch,
                "expected Cl(4,0), got " + g.signature().to_string());
}

/// Quaternion with unit vector part along axis k: i e_{k+1}.
inline Quaternion axis_quaternion(int k) {
  Quaternion q;
  q.v[k] = 1.0;
  return q;
}

using BladeImages = std::array<QuatMatrix2, 16>;

inline BladeImages blade_images(const std::array<QuatMatrix2, 4> &generators) {
  BladeImages images;
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    QuatMatrix2 acc = QuatMatrix2::identity();
    for (int k = 0; k < 4; ++k)
      if (mask >> k & 1u)
        acc = acc * generators[k];
    images[mask] = acc;
  }
  return images;
}

inline QuatMatrix2 apply_linear(const BladeImages &images, const Multivector &g) {
  QuatMatrix2 r;
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    const double c = g.coeffs()[mask];
    if (c != 0.0)
      r = r + c * images[mask];
  }
  return r;
}

/// sum_jk row[j] * idem * entry(j,k) * col[k]
inline Multivector sandwich(const std::array<Multivector, 2> &row, const Multivector &idem,
                            const QuatMatrix2 &entries, const std::array<Multivector, 2> &col) {
  Multivector out(euclidean4());
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      out = out + row[j] * idem * to_multivector(entries.m[j][k]) * col[k];
  return out;
}

} // namespace detail

/// [e0]_e = diag(1,-1); [e_k]_e = [[0, i e_k], [-i e_k, 0]].
inline const std::array<QuatMatrix2, 4> &e_basis_generators() {
  static const std::array<QuatMatrix2, 4> gens = [] {
    std::array<QuatMatrix2, 4> g;
    g[0] = QuatMatrix2::of(Quaternion::real(1), {}, {}, Quaternion::real(-1));
    for (int k = 0; k < 3; ++k) {
      const Quaternion q = detail::axis_quaternion(k);
      g[k + 1] = QuatMatrix2::of({}, q, -q, {});
    }
    return g;
  }();
  return gens;
}

/// [e0]_I = [[0,1],[1,0]]; [e_k]_I = [[0, i e_k], [-i e_k, 0]].
inline const std::array<QuatMatrix2, 4> &i_basis_generators() {
  static const std::array<QuatMatrix2, 4> gens = [] {
    std::array<QuatMatrix2, 4> g;
    g[0] = QuatMatrix2::of({}, Quaternion::real(1), Quaternion::real(1), {});
    for (int k = 0; k < 3; ++k) {
      const Quaternion q = detail::axis_quaternion(k);
      g[k + 1] = QuatMatrix2::of({}, q, -q, {});
    }
    return g;
  }();
  return gens;
}

inline QuatMatrix2 rep_e(const Multivector &g) {
  detail::require_euclidean4(g);
  static const detail::BladeImages images = detail::blade_images(e_basis_generators());
  return detail::apply_linear(images, g);
}

inline QuatMatrix2 rep_I(const Multivector &g) {
  detail::require_euclidean4(g);
  static const detail::BladeImages images = detail::blade_images(i_basis_generators());
  return detail::apply_linear(images, g);
}

/// g = (1 i) e+ M (1; -i), expanded in the algebra.
inline Multivector unrep_e(const QuatMatrix2 &m) {
  const Signature sig = euclidean4();
  const Multivector one = Multivector::scalar(sig, 1.0);
  const Multivector i = Multivector::blade(sig, blade4::e123);
  const Multivector e_plus = 0.5 * (one + Multivector::generator(sig, 0));
  return detail::sandwich({one, i}, e_plus, m, {one, -i});
}

/// g = (1 e0) I+ M (1; e0), expanded in the algebra.
inline Multivector unrep_I(const QuatMatrix2 &m) {
  const Signature sig = euclidean4();
  const Multivector one = Multivector::scalar(sig, 1.0);
  const Multivector e0 = Multivector::generator(sig, 0);
  const Multivector big_i_plus = 0.5 * (one + Multivector::blade(sig, blade4::e0123));
  return detail::sandwich({one, e0}, big_i_plus, m, {one, e0});
}

/// A = (1/sqrt 2)[[1,1],[-1,1]].
inline QuatMatrix2 change_matrix() {
  const double h = 1.0 / std::sqrt(2.0);
  return QuatMatrix2::of(Quaternion::real(h), Quaternion::real(h), Quaternion::real(-h),
                         Quaternion::real(h));
}

/// A^{-1} = A^* = (1/sqrt 2)[[1,-1],[1,1]].
inline QuatMatrix2 change_matrix_inverse() { return change_matrix().conj_transpose(); }

/// A M A^{-1}; maps I-basis matrices to e-basis matrices.
inline QuatMatrix2 change_basis(const QuatMatrix2 &m_i) {
  return change_matrix() * m_i * change_matrix_inverse();
}

/// 2x2 matrix with multivector entries, used where the entries (i+, I+, ...)
/// are not quaternions.
struct MvMatrix2 {
  std::array<std::array<Multivector, 2>, 2> m;

  friend MvMatrix2 operator*(const MvMatrix2 &a, const MvMatrix2 &b) {
    auto entry = [&](int i, int j) { return a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j]; };
    return {{{{entry(0, 0), entry(0, 1)}, {entry(1, 0), entry(1, 1)}}}};
  }

  /// Entrywise reverse (the Cl(4,0) conjugation) followed by transposition.
  MvMatrix2 conj_transpose() const {
    return {{{{reverse(m[0][0]), reverse(m[1][0])}, {reverse(m[0][1]), reverse(m[1][1])}}}};
  }
};

inline double max_abs_diff(const MvMatrix2 &a, const MvMatrix2 &b) {
  double d = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      d = std::max(d, max_abs_diff(a.m[i][j], b.m[i][j]));
  return d;
}

struct IdempotentResiduals {
  double big_i_plus = 0.0;         ///< |I+ - 2 i- e+ i+|
  double e_plus = 0.0;             ///< |e+ - 2 i+ I+ i-|
  double spectral_outer = 0.0;     ///< e-basis matrix vs 2 (i+; -i-) I+ (i-, -i+)
  double spectral_change = 0.0;    ///< e-basis matrix vs B (I-basis matrix) B^*
  double singular_deviation = 0.0; ///< max |B B^* - identity|; B has no inverse
};

/// B = (sqrt 2 / 2)[[i+, i-], [-i-, i+]] with i+- = (1 +- e123)/2.
inline MvMatrix2 singular_matrix() {
  const Signature sig = euclidean4();
  const Multivector one = Multivector::scalar(sig, 1.0);
  const Multivector i = Multivector::blade(sig, blade4::e123);
  const Multivector ip = 0.5 * (one + i);
  const Multivector im = 0.5 * (one - i);
  const double h = std::sqrt(2.0) / 2.0;
  return {{{{h * ip, h * im}, {-h * im, h * ip}}}};
}

/// Both spectral bases written as matrices of multivectors.
inline MvMatrix2 e_spectral_basis() {
  const Signature sig = euclidean4();
  const Multivector one = Multivector::scalar(sig, 1.0);
  const Multivector i = Multivector::blade(sig, blade4::e123);
  const Multivector e0 = Multivector::generator(sig, 0);
  const Multivector ep = 0.5 * (one + e0);
  const Multivector em = 0.5 * (one - e0);
  return {{{{ep, -(i * em)}, {i * ep, em}}}};
}

inline MvMatrix2 i_spectral_basis() {
  const Signature sig = euclidean4();
  const Multivector one = Multivector::scalar(sig, 1.0);
  const Multivector big_i = Multivector::blade(sig, blade4::e0123);
  const Multivector e0 = Multivector::generator(sig, 0);
  const Multivector ip = 0.5 * (one + big_i);
  const Multivector im = 0.5 * (one - big_i);
  return {{{{ip, e0 * im}, {e0 * ip, im}}}};
}

inline IdempotentResiduals idempotent_identities() {
  const Signature sig = euclidean4();
  const Multivector one = Multivector::scalar(sig, 1.0);
  const Multivector i = Multivector::blade(sig, blade4::e123);
  const Multivector big_i = Multivector::blade(sig, blade4::e0123);
  const Multivector e0 = Multivector::generator(sig, 0);
  const Multivector ep = 0.5 * (one + e0);
  const Multivector ip = 0.5 * (one + i);
  const Multivector im = 0.5 * (one - i);
  const Multivector big_ip = 0.5 * (one + big_i);

  IdempotentResiduals r;
  r.big_i_plus = max_abs_diff(big_ip, 2.0 * (im * ep * ip));
  r.e_plus = max_abs_diff(ep, 2.0 * (ip * big_ip * im));

  const MvMatrix2 lhs = e_spectral_basis();
  const std::array<Multivector, 2> column{ip, -im};
  const std::array<Multivector, 2> row{im, -ip};
  MvMatrix2 outer = lhs;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      outer.m[j][k] = 2.0 * (column[j] * big_ip * row[k]);
  r.spectral_outer = max_abs_diff(lhs, outer);

  const MvMatrix2 b = singular_matrix();
  const MvMatrix2 b_star = b.conj_transpose();
  r.spectral_change = max_abs_diff(lhs, b * i_spectral_basis() * b_star);

  const Multivector zero(sig);
  const MvMatrix2 id{{{{one, zero}, {zero, one}}}};
  r.singular_deviation = max_abs_diff(b * b_star, id);
  return r;
}

} // namespace quatspin
