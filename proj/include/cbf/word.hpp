#pragma once

// Binary words, their lattice-path twins, and the border predicates the
// rest of the library is built on.
//
// A word of length n is packed into the low n bits of a 64-bit integer with
// the first written symbol in the most significant of those bits, so "110"
// is stored as 0b110. For equal lengths, integer order equals lexicographic
// order on the text.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cbf {

inline constexpr std::uint64_t low_mask(std::size_t k) noexcept {
  return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

class BinaryWord {
 public:
  static constexpr std::size_t kMaxLength = 64;

  /// Throws Error(InvalidArgument) unless 1 <= length <= 64 and `bits` fits.
  BinaryWord(std::uint64_t bits, std::size_t length);

  /// Parses '0'/'1' text. Throws Error(ParseError) on any other character or
  /// on an empty/oversized string.
  static BinaryWord parse(std::string_view text);

  std::size_t size() const noexcept { return length_; }
  std::uint64_t bits() const noexcept { return bits_; }

  /// Symbol at written position i (0-based), as 0 or 1.
  unsigned at(std::size_t i) const;
  /// |w|_a: occurrences of symbol a.
  std::size_t count(unsigned symbol) const;

  bool first() const noexcept { return at(0) != 0; }
  bool last() const noexcept { return (bits_ & 1U) != 0; }

  /// Prefix/suffix of length k, 1 <= k <= size().
  BinaryWord prefix(std::size_t k) const;
  BinaryWord suffix(std::size_t k) const;

  /// Bitwise complement: swaps rise and fall steps.
  BinaryWord complement() const noexcept;

  std::string to_string() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  /// Lexicographic on the text, shorter word first on a common prefix.
  friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b);

 private:
  std::uint64_t bits_;
  std::size_t length_;
};

/// Concatenation; throws Error(InvalidArgument) past 64 symbols.
BinaryWord operator+(const BinaryWord& a, const BinaryWord& b);

enum class FactorRole { Prefix, Suffix, Bifix, CrossBifix };

std::string_view to_string(FactorRole role);

struct Factor {
  BinaryWord bits;
  FactorRole role;

  friend bool operator==(const Factor&, const Factor&) = default;
};

enum class Step : std::uint8_t { Rise, Fall };

/// Sequence of (1,1) / (1,-1) steps from the origin. May be empty (the empty
/// Dyck path). Always h = n (mod 2); paths of bifix-free words of length >= 2
/// also satisfy -n < h < n.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  std::span<const Step> steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }

  /// #Rise - #Fall.
  int end_height() const noexcept;
  /// Lowest height reached by any prefix (0 for the empty path).
  int min_height() const noexcept;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<Step> steps_;
};

bool is_bifix_free(const BinaryWord& w);

/// All strict non-empty borders of w in increasing length, computed with the
/// failure-function scan.
std::vector<Factor> bifixes(const BinaryWord& w);

/// Every strict non-empty factor that is a prefix of one word and a suffix of
/// the other, sorted by length then text. Equals bifixes(w) when w == v.
/// Throws Error(LengthMismatch) if the lengths differ.
std::vector<Factor> cross_bifixes(const BinaryWord& w, const BinaryWord& v);

LatticePath word_to_path(const BinaryWord& w);
/// Throws Error(InvalidArgument) for an empty path or more than 64 steps.
BinaryWord path_to_word(const LatticePath& p);

}  // namespace cbf
