#pragma once

// Dense Clifford algebra Cl(p,q) over bit-indexed basis blades.
//
// Generator k squares to +1 for k < p and to -1 otherwise. Bit k of a blade
// mask selects generator k; a blade is the product of its generators in
// ascending index order.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quatspin/error.hpp"

namespace quatspin {

inline constexpr double default_tolerance = 1e-12;
inline constexpr int max_dimension = 6;

struct BladeIndex {
  std::uint32_t mask = 0;

  constexpr int grade() const noexcept { return std::popcount(mask); }
  friend constexpr bool operator==(BladeIndex, BladeIndex) = default;
};

class Signature {
public:
  /// `prefix` and `first_index` only affect generated names: prefix 'e' with
  /// first_index 1 names the generators e1, e2, ...
  Signature(int plus_count, int minus_count, char prefix = 'e',
            int first_index = 1)
      : p_(plus_count), q_(minus_count), prefix_(prefix),
        first_index_(first_index) {
    if (p_ < 0 || q_ < 0 || p_ + q_ < 1 || p_ + q_ > max_dimension)
      throw Error(Errc::invalid_signature,
                  "need 1 <= p+q <= " + std::to_string(max_dimension) +
                      ", got (" + std::to_string(p_) + "," +
                      std::to_string(q_) + ")");
  }

  int plus_count() const noexcept { return p_; }
  int minus_count() const noexcept { return q_; }
  int dimension() const noexcept { return p_ + q_; }
  std::size_t blade_count() const noexcept { return std::size_t{1} << dimension(); }

  int square_of(int generator) const noexcept { return generator < p_ ? 1 : -1; }

  std::string generator_label(int generator) const {
    return std::string(1, prefix_) + std::to_string(first_index_ + generator);
  }

  std::vector<std::string> generator_labels() const {
    std::vector<std::string> out;
    for (int k = 0; k < dimension(); ++k)
      out.push_back(generator_label(k));
    return out;
  }

  /// "1" for the scalar blade, otherwise prefix followed by the indices,
  /// e.g. "e12" or "g013".
  std::string blade_name(BladeIndex blade) const {
    if (blade.mask == 0)
      return "1";
    std::string name(1, prefix_);
    for (int k = 0; k < dimension(); ++k)
      if (blade.mask >> k & 1u)
        name += std::to_string(first_index_ + k);
    return name;
  }

  std::string to_string() const {
    return "Cl(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
  }

  friend bool operator==(const Signature &, const Signature &) = default;

private:
  int p_;
  int q_;
  char prefix_;
  int first_index_;
};

/// Cl(4,0) with generators e0..e3.
inline Signature euclidean4() { return Signature(4, 0, 'e', 0); }
/// Cl(1,3) with generators g0..g3 (g0 timelike).
inline Signature spacetime13() { return Signature(1, 3, 'g', 0); }
/// Cl(3,0) with generators e1..e3.
inline Signature pauli3() { return Signature(3, 0, 'e', 1); }
/// Cl(1,2) with generators g0..g2.
inline Signature minkowski12() { return Signature(1, 2, 'g', 0); }

/// Sign from sorting the concatenated generator lists of `a` then `b` into
/// ascending order (parity of the number of transpositions).
constexpr int reorder_sign(std::uint32_t a, std::uint32_t b) noexcept {
  int swaps = 0;
  for (a >>= 1; a != 0; a >>= 1)
    swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

/// Sign s with blade(a) * blade(b) = s * blade(a ^ b).
inline int blade_product_sign(const Signature &sig, BladeIndex a,
                              BladeIndex b) noexcept {
  int sign = reorder_sign(a.mask, b.mask);
  const std::uint32_t shared = a.mask & b.mask;
  for (int k = sig.plus_count(); k < sig.dimension(); ++k)
    if (shared >> k & 1u)
      sign = -sign;
  return sign;
}

class Multivector {
public:
  explicit Multivector(const Signature &sig)
      : sig_(sig), coeffs_(sig.blade_count(), 0.0) {}

  Multivector(const Signature &sig, std::vector<double> coeffs)
      : sig_(sig), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != sig_.blade_count())
      throw Error(Errc::signature_mismatch,
                  "coefficient count " + std::to_string(coeffs_.size()) +
                      " does not match " + sig_.to_string());
    for (double c : coeffs_)
      if (!std::isfinite(c))
        throw Error(Errc::domain_violation, "non-finite coefficient");
  }

  static Multivector scalar(const Signature &sig, double value) {
    return blade(sig, BladeIndex{0}, value);
  }

  static Multivector blade(const Signature &sig, BladeIndex index,
                           double coeff = 1.0) {
    std::vector<double> c(sig.blade_count(), 0.0);
    c.at(index.mask) = coeff;
    return Multivector(sig, std::move(c));
  }

  static Multivector generator(const Signature &sig, int k) {
    return blade(sig, BladeIndex{1u << k});
  }

  /// Grade-1 element sum_k components[k] * generator(k).
  static Multivector vector(const Signature &sig,
                            std::span<const double> components) {
    std::vector<double> c(sig.blade_count(), 0.0);
    for (std::size_t k = 0; k < components.size(); ++k)
      c.at(std::size_t{1} << k) = components[k];
    return Multivector(sig, std::move(c));
  }

  /// Product of the listed generators, in the given order.
  static Multivector product_of(const Signature &sig,
                                std::initializer_list<int> generators);

  const Signature &signature() const noexcept { return sig_; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double coeff(BladeIndex blade) const { return coeffs_.at(blade.mask); }
  double scalar_part() const noexcept { return coeffs_[0]; }

  Multivector operator-() const {
    auto c = coeffs_;
    for (double &x : c)
      x = -x;
    return Multivector(sig_, std::move(c));
  }

  friend Multivector operator+(const Multivector &a, const Multivector &b) {
    require_same(a, b);
    auto c = a.coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] += b.coeffs_[i];
    return Multivector(a.sig_, std::move(c));
  }

  friend Multivector operator-(const Multivector &a, const Multivector &b) {
    return a + (-b);
  }

  friend Multivector operator*(double s, const Multivector &a) {
    auto c = a.coeffs_;
    for (double &x : c)
      x *= s;
    return Multivector(a.sig_, std::move(c));
  }
  friend Multivector operator*(const Multivector &a, double s) { return s * a; }
  friend Multivector operator/(const Multivector &a, double s) {
    return (1.0 / s) * a;
  }

  friend Multivector operator+(const Multivector &a, double s) {
    return a + scalar(a.sig_, s);
  }
  friend Multivector operator+(double s, const Multivector &a) { return a + s; }
  friend Multivector operator-(const Multivector &a, double s) { return a + (-s); }
  friend Multivector operator-(double s, const Multivector &a) { return (-a) + s; }

  /// Geometric product.
  friend Multivector operator*(const Multivector &a, const Multivector &b) {
    require_same(a, b);
    const std::size_t n = a.coeffs_.size();
    std::vector<double> c(n, 0.0);
    for (std::uint32_t i = 0; i < n; ++i) {
      const double ai = a.coeffs_[i];
      if (ai == 0.0)
        continue;
      for (std::uint32_t j = 0; j < n; ++j) {
        const double bj = b.coeffs_[j];
        if (bj == 0.0)
          continue;
        c[i ^ j] += blade_product_sign(a.sig_, BladeIndex{i}, BladeIndex{j}) * ai * bj;
      }
    }
    return Multivector(a.sig_, std::move(c));
  }

  friend bool operator==(const Multivector &, const Multivector &) = default;

  static void require_same(const Multivector &a, const Multivector &b) {
    if (!(a.sig_ == b.sig_))
      throw Error(Errc::signature_mismatch,
                  a.sig_.to_string() + " vs " + b.sig_.to_string());
  }

private:
  Signature sig_;
  std::vector<double> coeffs_;
};

inline Multivector Multivector::product_of(const Signature &sig,
                                           std::initializer_list<int> generators) {
  Multivector out = scalar(sig, 1.0);
  for (int k : generators)
    out = out * generator(sig, k);
  return out;
}

inline Multivector geometric_product(const Multivector &a, const Multivector &b) {
  return a * b;
}

/// Reversion: the grade-k part is scaled by (-1)^(k(k-1)/2).
inline Multivector reverse(const Multivector &a) {
  std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    const int k = std::popcount(i);
    if ((k * (k - 1) / 2) & 1)
      c[i] = -c[i];
  }
  return Multivector(a.signature(), std::move(c));
}

/// Keeps only the blades whose grade is listed.
inline Multivector grade_select(const Multivector &a, std::span<const int> grades) {
  const int n = a.signature().dimension();
  std::uint32_t keep = 0;
  for (int g : grades) {
    if (g < 0 || g > n)
      throw Error(Errc::grade_out_of_range,
                  "grade " + std::to_string(g) + " in " + a.signature().to_string());
    keep |= 1u << g;
  }
  std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
  for (std::uint32_t i = 0; i < c.size(); ++i)
    if (!(keep >> std::popcount(i) & 1u))
      c[i] = 0.0;
  return Multivector(a.signature(), std::move(c));
}

inline Multivector grade_select(const Multivector &a, std::initializer_list<int> grades) {
  return grade_select(a, std::span<const int>(grades.begin(), grades.size()));
}

inline double max_abs(const Multivector &a) {
  double m = 0.0;
  for (double c : a.coeffs())
    m = std::max(m, std::abs(c));
  return m;
}

inline double max_abs_diff(const Multivector &a, const Multivector &b) {
  return max_abs(a - b);
}

/// Largest coefficient outside the listed grades.
inline double off_grade_residual(const Multivector &a, std::initializer_list<int> grades) {
  return max_abs(a - grade_select(a, grades));
}

inline bool is_vector(const Multivector &a, double tol = default_tolerance) {
  return off_grade_residual(a, {1}) <= tol;
}

/// Scalar product of two grade-1 elements, (ab + ba)/2.
inline double dot(const Multivector &a, const Multivector &b,
                  double tol = default_tolerance) {
  Multivector::require_same(a, b);
  if (!is_vector(a, tol) || !is_vector(b, tol))
    throw Error(Errc::not_a_vector, "dot expects grade-1 arguments");
  const Signature &sig = a.signature();
  double sum = 0.0;
  for (int k = 0; k < sig.dimension(); ++k) {
    const BladeIndex g{1u << k};
    sum += sig.square_of(k) * a.coeff(g) * b.coeff(g);
  }
  return sum;
}

/// v / v^2 for a non-null vector.
inline Multivector vector_inverse(const Multivector &v, double tol = default_tolerance) {
  if (!is_vector(v, tol))
    throw Error(Errc::not_a_vector, "vector_inverse expects a grade-1 argument");
  const double sq = dot(v, v, tol);
  if (std::abs(sq) < tol)
    throw Error(Errc::null_vector, "v^2 = " + std::to_string(sq));
  return v / sq;
}

/// exp(B) for B whose square is a real scalar: the circular, hyperbolic or
/// parabolic branch is picked by the sign of B^2.
inline Multivector exp_blade(const Multivector &b, double tol = default_tolerance) {
  const Multivector sq = b * b;
  const double s = sq.scalar_part();
  if (max_abs(sq - Multivector::scalar(b.signature(), s)) > tol * std::max(1.0, std::abs(s)))
    throw Error(Errc::non_scalar_square, "B^2 has non-scalar components");
  if (std::abs(s) < tol)
    return 1.0 + b;
  if (s < 0) {
    const double theta = std::sqrt(-s);
    return std::cos(theta) + b * (std::sin(theta) / theta);
  }
  const double phi = std::sqrt(s);
  return std::cosh(phi) + b * (std::sinh(phi) / phi);
}

/// Relabels generator k of `a` as generator perm[k] of `target`, re-sorting
/// each blade into canonical order.
inline Multivector permute_generators(const Multivector &a, std::span<const int> perm,
                                      const Signature &target) {
  const Signature &src = a.signature();
  if (static_cast<int>(perm.size()) != src.dimension() ||
      target.dimension() != src.dimension())
    throw Error(Errc::signature_mismatch, "permutation size does not match");
  for (int k = 0; k < src.dimension(); ++k)
    if (src.square_of(k) != target.square_of(perm[k]))
      throw Error(Errc::signature_mismatch, "permutation does not preserve the metric");
  Multivector out(target);
  for (std::uint32_t i = 0; i < src.blade_count(); ++i) {
    const double c = a.coeffs()[i];
    if (c == 0.0)
      continue;
    Multivector image = Multivector::scalar(target, c);
    for (int k = 0; k < src.dimension(); ++k)
      if (i >> k & 1u)
        image = image * Multivector::generator(target, perm[k]);
    out = out + image;
  }
  return out;
}

/// "0.6*e0 + 0.8*e2"; terms with |c| <= `zero` are dropped.
inline std::string format_multivector(const Multivector &a, int precision = 12,
                                      double zero = 0.0) {
  std::string out;
  char buf[64];
  const Signature &sig = a.signature();
  for (std::uint32_t i = 0; i < sig.blade_count(); ++i) {
    const double c = a.coeffs()[i];
    if (std::abs(c) <= zero)
      continue;
    std::snprintf(buf, sizeof buf, "%.*g", precision, std::abs(c));
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    out += buf;
    if (i != 0)
      out += "*" + sig.blade_name(BladeIndex{i});
  }
  return out.empty() ? "0" : out;
}

} // namespace quatspin
