#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cbf/word.hpp"

namespace cbf {

/// Where a WordSet came from.
enum class Provenance {
  CbfsOdd,
  CbfsEvenMEven,
  CbfsEvenMOdd,
  Exclusion,
  User,
  Enumeration,
  MaxSetSearch,
};

std::string_view to_string(Provenance p);
/// Throws Error(ParseError) for an unknown name.
Provenance provenance_from_string(std::string_view name);

/// Equal-length words, deduplicated and kept in lexicographic order.
class WordSet {
 public:
  /// Throws Error(MixedLengths) if any word is not of length n and
  /// Error(InvalidArgument) if n is outside 1..64.
  WordSet(std::size_t n, std::vector<BinaryWord> words, Provenance provenance);

  /// Length taken from the first word; throws Error(InvalidArgument) if empty.
  static WordSet from_words(std::vector<BinaryWord> words, Provenance provenance);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  Provenance provenance() const noexcept { return provenance_; }
  std::span<const BinaryWord> words() const noexcept { return words_; }

  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }

  bool contains(const BinaryWord& w) const;

  /// Copy with `w` added (or removed); provenance becomes User.
  WordSet with(const BinaryWord& w) const;
  WordSet without(const BinaryWord& w) const;

  friend bool operator==(const WordSet&, const WordSet&) = default;

 private:
  std::size_t n_;
  std::vector<BinaryWord> words_;
  Provenance provenance_;
};

}  // namespace cbf
