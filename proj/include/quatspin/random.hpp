#pragma once

// Seeded sampling for property checks. Doubles are built from the raw 64-bit
// engine output so sequences match across standard library implementations.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

#include "quatspin/dirac.hpp"
#include "quatspin/gspinor.hpp"
#include "quatspin/multivector.hpp"
#include "quatspin/qspinor.hpp"
#include "quatspin/quaternion.hpp"
#include "quatspin/stereo.hpp"

namespace quatspin {

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform in [-1, 1) on each coefficient.
  Multivector multivector(const Signature &sig) {
    std::vector<double> c(sig.blade_count());
    for (double &x : c)
      x = uniform(-1.0, 1.0);
    return Multivector(sig, std::move(c));
  }

  Vec3 vec3(double lo = -1.0, double hi = 1.0) {
    return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
  }

  Quaternion quaternion(double scale = 1.0) {
    return {scale * uniform(-1.0, 1.0), scale3(scale, vec3())};
  }

  /// Point with |x| uniform in [0, max_radius) along a random direction;
  /// dimension 2 leaves the third coordinate zero.
  PlanePoint ball_point(double max_radius, int dimension = 3) {
    Vec3 d{0.0, 0.0, 0.0};
    double n = 0.0;
    while (n < 1e-3) {
      d = vec3();
      if (dimension == 2)
        d[2] = 0.0;
      n = std::sqrt(dot3(d, d));
    }
    return PlanePoint{scale3(uniform(0.0, max_radius) / n, d)};
  }

  /// Centre scalar with modulus in [lo, hi).
  CenterScalar center_scalar(double lo, double hi) {
    const double r = uniform(lo, hi);
    const double t = uniform(-3.141592653589793, 3.141592653589793);
    return {r * std::cos(t), r * std::sin(t)};
  }

  /// a0 bounded away from zero; for Minkowski12, |a1| < 0.9 |a0|.
  GSpinor gspinor(AlgebraTag tag) {
    const CenterScalar a0 = center_scalar(0.3, 2.0);
    const double r0 = std::sqrt(a0.norm2());
    const CenterScalar a1 = tag == AlgebraTag::pauli3 ? center_scalar(0.0, 2.0)
                                                      : center_scalar(0.0, 0.9 * r0);
    return {tag, a0, a1};
  }

  /// q0 bounded away from zero and |q1| < 0.9 |q0|.
  QSpinor qspinor(AlgebraTag tag = AlgebraTag::spacetime13) {
    Quaternion q0 = quaternion();
    while (q0.norm2() < 0.09)
      q0 = quaternion();
    Quaternion q1 = quaternion();
    const double ratio = uniform(0.0, 0.9) * std::sqrt(q0.norm2() / std::max(q1.norm2(), 1e-300));
    return {q0, ratio * q1, tag};
  }

  /// Orthogonal state: q1 has <q0^dagger q1>_0 removed.
  QSpinor orthogonal_qspinor(AlgebraTag tag = AlgebraTag::spacetime13) {
    QSpinor s = qspinor(tag);
    const double g0 = grade_parts(s.q0, s.q1).g0;
    s.q1 = s.q1 - (g0 / s.q0.norm2()) * s.q0;
    return s;
  }

  DiracSpinor4 dirac() {
    DiracSpinor4 d;
    for (auto &z : d.phi)
      z = {uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
    return d;
  }

private:
  std::mt19937_64 engine_;
};

} // namespace quatspin
