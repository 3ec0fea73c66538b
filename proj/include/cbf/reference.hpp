#pragma once

// Serial reference implementations of the parallel kernels. They go through
// the BinaryWord predicates (is_bifix_free, cross_bifixes) rather than the
// packed bit kernels, and exist for cross-checking in tests and benchmarks.

#include <cstddef>

#include "cbf/verification.hpp"
#include "cbf/word_set.hpp"

namespace cbf::reference {

/// Filters 0 .. 2^n - 1 through is_bifix_free. n <= 24.
WordSet enumerate_bifix_free(std::size_t n);

/// All ordered pairs via cross_bifixes / bifixes; same report as check_set.
VerificationReport check_set(const WordSet& s);

/// Serial early-exit scan over BF_2(n) \ s.
NonExpandability is_non_expandable(const WordSet& s, std::size_t universe_n);

}  // namespace cbf::reference
