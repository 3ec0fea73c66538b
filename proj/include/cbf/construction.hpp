#pragma once

// Lattice-path construction of the cross-bifix-free sets CBFS_2(n), n >= 3.
//
//   n = 2m+1:          { x a : a in D_2m }
//   n = 2m+2, m even:  { a x b x' : a in D_2i, b in D_2(m-i), 0 <= i <= m/2 }
//   n = 2m+2, m odd:   same inclusion with 0 <= i <= (m+1)/2, minus
//                      { x a' x' x b' x' : a', b' in D_(m-1) }
//
// x is a rise (1), x' a fall (0), D_k the Dyck paths of length k.

#include <cstddef>

#include "cbf/combinatorics.hpp"
#include "cbf/word_set.hpp"

namespace cbf {

/// m >= 1. Throws Error(InvalidArgument) otherwise.
WordSet cbfs_odd(std::size_t m);
/// m even, m >= 2.
WordSet cbfs_even_m_even(std::size_t m);
/// m odd, m >= 1.
WordSet cbfs_even_m_odd(std::size_t m);
/// The doubled elevated Dyck paths removed in the m-odd case; m odd, m >= 1.
WordSet exclusion_set(std::size_t m);

/// Dispatch by parity of n. Throws Error(UnsupportedLength) for n < 3 or n > 64.
WordSet cbfs(std::size_t n);

/// Closed-form |CBFS_2(n)| from Catalan numbers, no enumeration.
/// Throws Error(UnsupportedLength) for n < 3.
BigInt cbfs_cardinality(std::size_t n);

}  // namespace cbf
