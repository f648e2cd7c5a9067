#pragma once

#include "laxcenter/rings.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace laxcenter {

/// A fixed graph of rings and homomorphisms used by the property suites.
struct Corpus {
  std::vector<RingRef> rings;
  std::vector<RingHom> homs;

  /// Every (f, g, h) with target(f) == source(g) and target(g) == source(h),
  /// as indices into `homs`, in lexicographic order.
  std::vector<std::array<std::size_t, 3>> composable_triples() const;
};

Corpus build_corpus();

/// `count` distinct triples drawn with a seeded generator, in draw order.
/// All of them when fewer exist.
std::vector<std::array<std::size_t, 3>> sample_triples(const Corpus& c, std::size_t count,
                                                       std::uint64_t seed);

/// Finite rings with at most `max_elements` elements: group rings of the
/// groups of order <= 8 over Z/2 (and those that fit over Z/3), matrix and
/// upper triangular rings of size <= 2 and a few products.
std::vector<RingRef> small_finite_rings(std::size_t max_elements = 512);

}  // namespace laxcenter
