#pragma once

#include <array>
#include <cmath>

#include "quatspin/multivector.hpp"

namespace quatspin {

using Vec3 = std::array<double, 3>;

inline double dot3(const Vec3 &a, const Vec3 &b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross3(const Vec3 &a, const Vec3 &b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline Vec3 scale3(double s, const Vec3 &a) { return {s * a[0], s * a[1], s * a[2]}; }
inline Vec3 add3(const Vec3 &a, const Vec3 &b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 sub3(const Vec3 &a, const Vec3 &b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

/// q = s + i v with i = e123, so that i e1 = e23, i e2 = -e13, i e3 = e12.
struct Quaternion {
  double s = 0.0;
  Vec3 v{0.0, 0.0, 0.0};

  static Quaternion real(double x) { return {x, {0, 0, 0}}; }

  Quaternion conj() const { return {s, scale3(-1.0, v)}; }
  double norm2() const { return s * s + dot3(v, v); }

  friend Quaternion operator+(const Quaternion &a, const Quaternion &b) {
    return {a.s + b.s, add3(a.v, b.v)};
  }
  friend Quaternion operator-(const Quaternion &a, const Quaternion &b) {
    return {a.s - b.s, sub3(a.v, b.v)};
  }
  Quaternion operator-() const { return {-s, scale3(-1.0, v)}; }
  friend Quaternion operator*(double k, const Quaternion &a) { return {k * a.s, scale3(k, a.v)}; }

  /// (x0 + i x)(y0 + i y) = x0 y0 - x.y + i(x0 y + y0 x - x cross y)
  friend Quaternion operator*(const Quaternion &a, const Quaternion &b) {
    const Vec3 c = cross3(a.v, b.v);
    return {a.s * b.s - dot3(a.v, b.v),
            {a.s * b.v[0] + b.s * a.v[0] - c[0], a.s * b.v[1] + b.s * a.v[1] - c[1],
             a.s * b.v[2] + b.s * a.v[2] - c[2]}};
  }

  friend bool operator==(const Quaternion &, const Quaternion &) = default;
};

inline Quaternion quat_mul(const Quaternion &a, const Quaternion &b) { return a * b; }

inline double max_abs_diff(const Quaternion &a, const Quaternion &b) {
  double m = std::abs(a.s - b.s);
  for (int k = 0; k < 3; ++k)
    m = std::max(m, std::abs(a.v[k] - b.v[k]));
  return m;
}

namespace blade4 {
// Masks in Cl(4,0) with generator k at bit k (e0 = bit 0).
inline constexpr BladeIndex e0{0b0001};
inline constexpr BladeIndex e1{0b0010};
inline constexpr BladeIndex e2{0b0100};
inline constexpr BladeIndex e3{0b1000};
inline constexpr BladeIndex e12{0b0110};
inline constexpr BladeIndex e13{0b1010};
inline constexpr BladeIndex e23{0b1100};
inline constexpr BladeIndex e123{0b1110};
inline constexpr BladeIndex e0123{0b1111};
} // namespace blade4

/// The quaternion as the Cl(4,0) element s + v1 e23 - v2 e13 + v3 e12. This
/// is the only place the sign convention of the middle term lives.
inline Multivector to_multivector(const Quaternion &q) {
  const Signature sig = euclidean4();
  std::vector<double> c(sig.blade_count(), 0.0);
  c[0] = q.s;
  c[blade4::e23.mask] = q.v[0];
  c[blade4::e13.mask] = -q.v[1];
  c[blade4::e12.mask] = q.v[2];
  return Multivector(sig, std::move(c));
}

/// Reads the quaternion components of a Cl(4,0) element, ignoring all blades
/// outside span{1, e23, e13, e12}.
inline Quaternion quaternion_part(const Multivector &g) {
  if (!(g.signature() == euclidean4()))
    throw Error(Errc::signature_mismatch, "quaternion_part expects Cl(4,0)");
  return {g.scalar_part(), {g.coeff(blade4::e23), -g.coeff(blade4::e13), g.coeff(blade4::e12)}};
}

} // namespace quatspin
