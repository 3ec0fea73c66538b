#pragma once

// Bit-level kernels on packed words (see word.hpp for the layout). Shared by
// the parallel enumeration and set-checking code paths.

#include <cstddef>
#include <cstdint>

#include "cbf/word.hpp"

namespace cbf::packed {

inline std::uint64_t prefix(std::uint64_t bits, std::size_t n, std::size_t k) noexcept {
  return bits >> (n - k);
}

inline std::uint64_t suffix(std::uint64_t bits, std::size_t k) noexcept {
  return bits & low_mask(k);
}

/// Shortest k in [1, n) with prefix_k(a) == suffix_k(b), or 0 if none.
inline std::size_t shortest_overlap(std::uint64_t a, std::uint64_t b, std::size_t n) noexcept {
  for (std::size_t k = 1; k < n; ++k) {
    if (prefix(a, n, k) == suffix(b, k)) return k;
  }
  return 0;
}

/// A bordered word always has a border of length <= n/2, so only those are
/// scanned.
inline bool has_border(std::uint64_t bits, std::size_t n) noexcept {
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    if (prefix(bits, n, k) == suffix(bits, k)) return true;
  }
  return false;
}

inline bool conflicts(std::uint64_t a, std::uint64_t b, std::size_t n) noexcept {
  return shortest_overlap(a, b, n) != 0 || shortest_overlap(b, a, n) != 0;
}

}  // namespace cbf::packed
