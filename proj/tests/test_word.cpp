#include <algorithm>
#include <cstdlib>
#include <string>

#include "cbf/error.hpp"
#include "cbf/word.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cbf;

namespace {

BinaryWord W(const char* text) { return BinaryWord::parse(text); }

std::vector<std::string> texts(const std::vector<Factor>& factors) {
  std::vector<std::string> out;
  for (const auto& f : factors) out.push_back(f.bits.to_string());
  return out;
}

}  // namespace

TEST_CASE("BinaryWord parses and prints in written order") {
  const auto w = W("110");
  CHECK(w.size() == 3);
  CHECK(w.bits() == 0b110);
  CHECK(w.at(0) == 1);
  CHECK(w.at(2) == 0);
  CHECK(w.count(1) == 2);
  CHECK(w.count(0) == 1);
  CHECK(w.to_string() == "110");
  CHECK(W("0001").to_string() == "0001");
  CHECK(W("10").complement() == W("01"));
}

TEST_CASE("BinaryWord rejects invalid input") {
  CHECK_THROWS_AS(BinaryWord::parse(""), Error);
  CHECK_THROWS_AS(BinaryWord::parse("10a1"), Error);
  CHECK_THROWS_AS(BinaryWord::parse(std::string(65, '1')), Error);
  CHECK_THROWS_AS(BinaryWord(0b100, 2), Error);
  CHECK_THROWS_AS(BinaryWord(0, 0), Error);
  try {
    BinaryWord::parse("1x");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("lexicographic order matches string order") {
  const std::vector<std::string> samples{"0", "1", "00", "01", "10", "11", "010", "1", "0110", "011"};
  for (const auto& a : samples) {
    for (const auto& b : samples) {
      CHECK((W(a.c_str()) < W(b.c_str())) == (a < b));
    }
  }
}

TEST_CASE("64-symbol words") {
  const std::string text = "1" + std::string(62, '0') + "1";
  const auto w = BinaryWord::parse(text);
  CHECK(w.to_string() == text);
  CHECK(w.prefix(64) == w);
  CHECK(w.suffix(1) == W("1"));
  CHECK_FALSE(is_bifix_free(w));
  CHECK_THROWS_AS(w + W("0"), Error);
}

TEST_CASE("is_bifix_free examples") {
  CHECK(is_bifix_free(W("111010100")));
  CHECK_FALSE(is_bifix_free(W("101001010")));
  CHECK_FALSE(is_bifix_free(W("11")));
  CHECK(is_bifix_free(W("10")));
  CHECK(is_bifix_free(W("0")));
  CHECK(is_bifix_free(W("1")));
}

TEST_CASE("bifixes examples") {
  CHECK(texts(bifixes(W("101001010"))) == std::vector<std::string>{"10", "1010"});
  CHECK(bifixes(W("111010100")).empty());
  CHECK(texts(bifixes(W("00"))) == std::vector<std::string>{"0"});
  CHECK(texts(bifixes(W("0000"))) ==
        std::vector<std::string>{"0", "00", "000"});
  for (const auto& f : bifixes(W("101001010"))) CHECK(f.role == FactorRole::Bifix);
}

TEST_CASE("cross_bifixes examples") {
  CHECK(cross_bifixes(W("111010100"), W("110101010")).empty());
  const auto found = texts(cross_bifixes(W("111001100"), W("110011010")));
  CHECK(std::find(found.begin(), found.end(), "1100") != found.end());
  CHECK(cross_bifixes(W("10"), W("10")).empty());
  CHECK(texts(cross_bifixes(W("1010"), W("1010"))) == std::vector<std::string>{"10"});
  CHECK_THROWS_AS(cross_bifixes(W("10"), W("100")), Error);
  try {
    cross_bifixes(W("10"), W("100"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LengthMismatch);
  }
}

TEST_CASE("border predicates agree with the string oracle up to length 14") {
  for (std::size_t n = 1; n <= 14; ++n) {
    for (const auto& s : oracle::all_strings(n)) {
      const auto w = BinaryWord::parse(s);
      const auto mine = texts(bifixes(w));
      REQUIRE(mine == oracle::borders(s));
      REQUIRE(is_bifix_free(w) == mine.empty());
      if (is_bifix_free(w) && n > 1) REQUIRE(w.first() != w.last());
    }
  }
}

TEST_CASE("cross_bifixes is symmetric and matches the oracle") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto words = oracle::all_strings(n);
    for (const auto& a : words) {
      for (const auto& b : words) {
        const auto ab = cross_bifixes(W(a.c_str()), W(b.c_str()));
        REQUIRE(ab == cross_bifixes(W(b.c_str()), W(a.c_str())));
        std::vector<std::string> expected;
        if (a == b) {
          expected = oracle::borders(a);
        } else {
          for (std::size_t k = 1; k < n; ++k) {
            for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
              if (x.substr(0, k) == y.substr(n - k) &&
                  std::find(expected.begin(), expected.end(), x.substr(0, k)) == expected.end()) {
                expected.push_back(x.substr(0, k));
              }
            }
          }
          std::sort(expected.begin(), expected.end(), [](const auto& x, const auto& y) {
            return x.size() != y.size() ? x.size() < y.size() : x < y;
          });
        }
        REQUIRE(texts(ab) == expected);
      }
    }
  }
}

TEST_CASE("word_to_path examples") {
  const auto p = word_to_path(W("110"));
  CHECK(std::vector<Step>(p.steps().begin(), p.steps().end()) ==
        std::vector<Step>{Step::Rise, Step::Rise, Step::Fall});
  CHECK(p.end_height() == 1);
  CHECK(word_to_path(W("111010100")).end_height() == 1);
  CHECK(word_to_path(W("0")).end_height() == -1);
  CHECK(word_to_path(W("0")).min_height() == -1);
}

TEST_CASE("path_to_word examples") {
  CHECK(path_to_word(LatticePath({Step::Rise, Step::Fall})) == W("10"));
  CHECK(path_to_word(LatticePath({Step::Rise, Step::Rise, Step::Fall, Step::Fall})) == W("1100"));
  CHECK_THROWS_AS(path_to_word(LatticePath{}), Error);
}

TEST_CASE("word/path conversion is a bijection on each length up to 12") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const BinaryWord w(x, n);
      const auto p = word_to_path(w);
      REQUIRE(p.size() == n);
      const int h = p.end_height();
      REQUIRE(std::abs(h) <= static_cast<int>(n));
      // Strict bound -n < h < n holds for every bifix-free word of length >= 2.
      if (n >= 2 && is_bifix_free(w)) REQUIRE(std::abs(h) < static_cast<int>(n));
      REQUIRE((h + static_cast<int>(n)) % 2 == 0);
      REQUIRE(path_to_word(p) == w);
    }
  }
}
