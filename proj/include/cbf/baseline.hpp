#pragma once

// Kernel-method baseline cardinalities and the comparison table against the
// lattice-path construction.

#include <cstddef>
#include <vector>

#include "cbf/combinatorics.hpp"

namespace cbf {

/// |S(n)| = |S(n-1)| + |S(n-2)|, |S(3)| = |S(4)| = 1.
/// Throws Error(UnsupportedLength) for n < 3.
BigInt kernel_cardinality(std::size_t n);

struct CardinalityRow {
  std::size_t n;
  BigInt bf_count;
  BigInt cbfs_count;
  BigInt kernel_count;

  bool cbfs_exceeds_kernel() const { return cbfs_count > kernel_count; }
};

struct CardinalityTable {
  std::size_t n_min;
  std::size_t n_max;
  std::vector<CardinalityRow> rows;
};

/// One row per n in [n_min, n_max]. With `cross_check`, each row is also
/// confirmed by enumerating BF_2(n) and constructing CBFS_2(n); a mismatch
/// throws Error(ConsistencyFailure) and n_max above `cap` throws
/// Error(CapExceeded). Throws Error(InvalidArgument) unless 3 <= n_min <= n_max.
CardinalityTable compare_table(std::size_t n_min, std::size_t n_max, bool cross_check = false,
                               std::size_t cap = kDefaultEnumerationCap);

}  // namespace cbf
