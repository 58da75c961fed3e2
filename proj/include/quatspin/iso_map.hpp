#pragma once

// Algebra isomorphism Cl(4,0) <-> Cl(1,3):
//   e0 -> g0,  e_k -> g_k g0      and back   g0 -> e0,  g_k -> e_k e0.
// Each map is fixed on generators and extended blade by blade, so it is a
// homomorphism by construction. Grades are not preserved.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quatspin/multivector.hpp"

namespace quatspin {

enum class AlgebraTag { euclidean4, spacetime13, pauli3, minkowski12 };

inline Signature signature_of(AlgebraTag tag) {
  switch (tag) {
  case AlgebraTag::euclidean4: return euclidean4();
  case AlgebraTag::spacetime13: return spacetime13();
  case AlgebraTag::pauli3: return pauli3();
  case AlgebraTag::minkowski12: return minkowski12();
  }
  throw Error(Errc::tag_mismatch, "unknown algebra tag");
}

constexpr std::string_view to_string(AlgebraTag tag) {
  switch (tag) {
  case AlgebraTag::euclidean4: return "Euclidean4";
  case AlgebraTag::spacetime13: return "Spacetime13";
  case AlgebraTag::pauli3: return "Pauli3";
  case AlgebraTag::minkowski12: return "Minkowski12";
  }
  return "?";
}

namespace detail {

using IsoTable = std::vector<Multivector>;

template <class GeneratorImage>
IsoTable iso_table(const Signature &target, GeneratorImage image_of) {
  const std::array<Multivector, 4> gens{image_of(0), image_of(1), image_of(2), image_of(3)};
  IsoTable table;
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    Multivector acc = Multivector::scalar(target, 1.0);
    for (int k = 0; k < 4; ++k)
      if (mask >> k & 1u)
        acc = acc * gens[k];
    table.push_back(acc);
  }
  return table;
}

inline Multivector apply_table(const IsoTable &table, const Multivector &g,
                               const Signature &target) {
  std::vector<double> out(16, 0.0);
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    const double c = g.coeffs()[mask];
    if (c == 0.0)
      continue;
    const auto img = table[mask].coeffs();
    for (std::size_t b = 0; b < 16; ++b)
      out[b] += c * img[b];
  }
  return Multivector(target, std::move(out));
}

} // namespace detail

/// Images of the 16 Cl(4,0) blades in Cl(1,3).
inline const detail::IsoTable &g4_to_sta_table() {
  static const detail::IsoTable table = [] {
    const Signature sta = spacetime13();
    return detail::iso_table(sta, [&](int k) {
      return k == 0 ? Multivector::generator(sta, 0)
                    : Multivector::generator(sta, k) * Multivector::generator(sta, 0);
    });
  }();
  return table;
}

/// Images of the 16 Cl(1,3) blades in Cl(4,0).
inline const detail::IsoTable &sta_to_g4_table() {
  static const detail::IsoTable table = [] {
    const Signature g4 = euclidean4();
    return detail::iso_table(g4, [&](int k) {
      return k == 0 ? Multivector::generator(g4, 0)
                    : Multivector::generator(g4, k) * Multivector::generator(g4, 0);
    });
  }();
  return table;
}

inline Multivector g4_to_sta(const Multivector &g) {
  if (!(g.signature() == euclidean4()))
    throw Error(Errc::signature_mismatch, "g4_to_sta expects Cl(4,0), got " +
                                              g.signature().to_string());
  return detail::apply_table(g4_to_sta_table(), g, spacetime13());
}

inline Multivector sta_to_g4(const Multivector &g) {
  if (!(g.signature() == spacetime13()))
    throw Error(Errc::signature_mismatch, "sta_to_g4 expects Cl(1,3), got " +
                                              g.signature().to_string());
  return detail::apply_table(sta_to_g4_table(), g, euclidean4());
}

/// Re-expresses a Cl(4,0) or Cl(1,3) element in the algebra of `tag`
/// (only euclidean4 and spacetime13 are valid targets).
inline Multivector to_algebra(const Multivector &g, AlgebraTag tag) {
  const Signature target = signature_of(tag);
  if (g.signature() == target)
    return g;
  if (tag == AlgebraTag::spacetime13)
    return g4_to_sta(g);
  if (tag == AlgebraTag::euclidean4)
    return sta_to_g4(g);
  throw Error(Errc::tag_mismatch, "no isomorphism into " + std::string(to_string(tag)));
}

} // namespace quatspin
