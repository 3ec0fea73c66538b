#pragma once

// Catalan numbers, Dyck paths, and bifix-free counting/enumeration.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cbf/word.hpp"
#include "cbf/word_set.hpp"

namespace cbf {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultEnumerationCap = 24;

/// A lattice path from height 0 back to 0 that never dips below the axis.
/// D_k in this library always means Dyck paths of length k.
class DyckPath {
 public:
  /// The empty path.
  DyckPath() = default;
  /// Throws Error(InvalidArgument) unless `path` is a Dyck path of <= 64 steps.
  explicit DyckPath(LatticePath path);

  const LatticePath& path() const noexcept { return path_; }
  std::size_t size() const noexcept { return path_.size(); }
  /// Steps packed as in BinaryWord (Rise = 1), for concatenation.
  std::uint64_t bits() const noexcept { return bits_; }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  LatticePath path_;
  std::uint64_t bits_ = 0;
};

/// C_m = binom(2m, m) / (m + 1), exact.
BigInt catalan(std::size_t m);

/// All Dyck paths of length k in lexicographic order with Rise < Fall.
/// Throws Error(OddLength) for odd k and Error(InvalidArgument) for k > 64.
std::vector<DyckPath> dyck_paths(std::size_t k);

/// Same order as dyck_paths, packed (Rise = 1). Length 0 yields {0}.
std::vector<std::uint64_t> dyck_words(std::size_t k);

/// |BF_q(n)| by the memoized three-case recurrence.
/// Throws Error(InvalidArgument) unless q >= 2 and n >= 1.
BigInt bifix_free_count(unsigned q, std::size_t n);

/// BF_2(n) in lexicographic order. Parallel over disjoint integer ranges; the
/// result does not depend on thread count.
/// Throws Error(CapExceeded) if n > cap and Error(InvalidArgument) if n == 0.
WordSet enumerate_bifix_free(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

/// Words of BF_2(n) starting with 1 and ending with 0, optionally restricted
/// to end height h. Throws Error(ImpossibleHeight) unless -n < h < n and
/// h = n (mod 2).
WordSet enumerate_hat_bf(std::size_t n, std::optional<int> h,
                         std::size_t cap = kDefaultEnumerationCap);

/// End height |w|_1 - |w|_0.
int end_height(const BinaryWord& w) noexcept;

}  // namespace cbf
