#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace zonograph {

// Subsets of the vertex set {0,...,n} as one-word bitmasks. n is capped so
// full 2^(n+1) tables stay desk-sized; everything downstream is exhaustive
// by design.
using Mask = std::uint32_t;

inline constexpr int kMaxN = 15;

inline Mask full_mask(int n) { return (Mask{1} << (n + 1)) - 1; }

inline int mask_card(Mask s) { return std::popcount(s); }

inline bool mask_contains(Mask s, int i) { return (s >> i) & 1u; }

inline Mask mask_complement(Mask s, int n) { return full_mask(n) & ~s; }

/// Representative of the pair {S, complement}: the side not containing 0.
inline Mask canonical_mask(Mask s, int n) {
  return mask_contains(s, 0) ? mask_complement(s, n) : s;
}

std::vector<int> mask_elements(Mask s);

/// Builds a mask from a vertex list; throws on out-of-range or repeats.
Mask mask_from_elements(const std::vector<int>& elems, int n);

}  // namespace zonograph
