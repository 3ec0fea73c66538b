#pragma once

// Certification of cross-bifix-freeness and non-expandability, plus an exact
// maximum cross-bifix-free set search for small lengths.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cbf/combinatorics.hpp"
#include "cbf/word.hpp"
#include "cbf/word_set.hpp"

namespace cbf {

/// `factor` is a non-empty strict prefix of word_a and a strict suffix of
/// word_b. word_a == word_b marks a word that is not bifix-free.
struct ConflictWitness {
  BinaryWord word_a;
  BinaryWord word_b;
  Factor factor;

  friend bool operator==(const ConflictWitness&, const ConflictWitness&) = default;
};

enum class CheckMethod { Naive, Trie };

std::string_view to_string(CheckMethod method);
/// Throws Error(ParseError) for anything but "naive" / "trie".
CheckMethod check_method_from_string(std::string_view name);

struct VerificationReport {
  bool ok = true;
  /// One witness per conflicting ordered pair (word_a, word_b), carrying the
  /// shortest shared factor; sorted by (word_a, word_b).
  std::vector<ConflictWitness> violations;
  std::uint64_t checked_pairs = 0;
  CheckMethod method = CheckMethod::Naive;
};

/// Checks every ordered pair of `s`, self-pairs included.
///
/// Naive compares prefix/suffix pairs directly. Trie builds an Aho-Corasick
/// automaton over all words; the failure chain from the state reached after
/// reading a word lists every proper suffix that is also a prefix of some
/// word, so each word is scanned in O(n + matches). Both methods return the
/// same violations. Throws Error(InvalidArgument) for an empty set.
VerificationReport check_set(const WordSet& s, CheckMethod method = CheckMethod::Trie);

struct NonExpandability {
  bool non_expandable = true;
  /// Lexicographically smallest word of BF_2(n) \ s that keeps s cross-bifix-free.
  std::optional<BinaryWord> expanding_word;
  std::size_t candidates_checked = 0;
};

/// Exhaustive over BF_2(universe_n). Throws Error(MixedLengths) if s has
/// another length, Error(CapExceeded) above `cap`, and Error(InvalidArgument)
/// if s is not itself cross-bifix-free.
NonExpandability is_non_expandable(const WordSet& s, std::size_t universe_n,
                                   std::size_t cap = kDefaultEnumerationCap);

/// A member of s that conflicts with gamma: smallest such word, then shortest
/// shared factor (gamma-as-prefix first on equal length). Throws
/// Error(NoBlocker) if s + gamma is cross-bifix-free, Error(InvalidArgument)
/// if gamma is in s or is bordered, Error(MixedLengths) on a length mismatch.
ConflictWitness expansion_blocker(const BinaryWord& gamma, const WordSet& s);

struct MaxSetResult {
  WordSet best;
  /// False if the time limit stopped the search before it closed.
  bool optimal = false;
  std::uint64_t nodes = 0;
};

/// Maximum cross-bifix-free subset of BF_2(n): a maximum independent set of
/// the conflict graph, found by branch and bound with greedy clique-cover
/// bounds over lexicographically ordered vertices. Single-threaded and
/// deterministic. Throws Error(InvalidArgument) for n < 2 and
/// Error(CapExceeded) above `cap`.
MaxSetResult max_set_search(std::size_t n, std::chrono::duration<double> time_limit,
                            std::size_t cap = kDefaultEnumerationCap);

}  // namespace cbf
