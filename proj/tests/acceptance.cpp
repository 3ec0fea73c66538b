// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cbf/baseline.hpp"
#include "cbf/combinatorics.hpp"
#include "cbf/construction.hpp"
#include "cbf/error.hpp"
#include "cbf/reference.hpp"
#include "cbf/verification.hpp"

using namespace cbf;
using namespace std::chrono_literals;

namespace {

// Collects the first failure message of a criterion; later ones are dropped.
struct Check {
  std::string failure;

  void expect(bool condition, const std::string& what) {
    if (!condition && failure.empty()) failure = what;
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;  // 0 means untimed
  std::function<void(Check&)> body;
};

BinaryWord W(const char* text) { return BinaryWord::parse(text); }

std::string str(const BigInt& v) { return v.str(); }

void cardinality_sequence(Check& c) {
  const unsigned expected[] = {1, 1, 2, 3, 5, 8, 14, 23, 42, 72, 132, 227, 429};
  for (std::size_t n = 3; n <= 15; ++n) {
    const auto built = cbfs(n).size();
    const BigInt formula = cbfs_cardinality(n);
    c.expect(built == expected[n - 3],
             "n=" + std::to_string(n) + " construction has " + std::to_string(built) + " words");
    c.expect(formula == expected[n - 3], "n=" + std::to_string(n) + " formula gives " + str(formula));
  }
}

void kernel_sequence(Check& c) {
  const unsigned expected[] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233};
  for (std::size_t n = 3; n <= 15; ++n) {
    const BigInt k = kernel_cardinality(n);
    c.expect(k == expected[n - 3], "n=" + std::to_string(n) + " kernel gives " + str(k));
    if (n >= 9) c.expect(cbfs_cardinality(n) > k, "n=" + std::to_string(n) + " cbfs does not exceed kernel");
  }
}

void bifix_free_counts(Check& c) {
  const unsigned table[] = {2, 4, 6, 12, 20};
  for (std::size_t n = 2; n <= 6; ++n) {
    c.expect(bifix_free_count(2, n) == table[n - 2], "n=" + std::to_string(n) + " small-table mismatch");
  }
  for (std::size_t n = 1; n <= 20; ++n) {
    const auto listed = enumerate_bifix_free(n, 20).size();
    c.expect(bifix_free_count(2, n) == listed, "n=" + std::to_string(n) + " recurrence " +
                                                   str(bifix_free_count(2, n)) + " vs enumeration " +
                                                   std::to_string(listed));
  }
}

void cross_bifix_free(Check& c) {
  for (std::size_t n = 3; n <= 16; ++n) {
    const WordSet s = cbfs(n);
    const auto naive = check_set(s, CheckMethod::Naive);
    const auto trie = check_set(s, CheckMethod::Trie);
    c.expect(naive.ok, "n=" + std::to_string(n) + " naive check reports violations");
    c.expect(trie.ok, "n=" + std::to_string(n) + " trie check reports violations");
    c.expect(naive.violations == trie.violations, "n=" + std::to_string(n) + " methods disagree");
  }
}

void non_expandable(Check& c) {
  for (std::size_t n = 3; n <= 14; ++n) {
    const WordSet s = cbfs(n);
    const auto universe = enumerate_bifix_free(n);
    const auto r = is_non_expandable(s, n);
    c.expect(r.non_expandable, "n=" + std::to_string(n) + " construction is expandable");
    c.expect(r.candidates_checked == universe.size() - s.size(),
             "n=" + std::to_string(n) + " scan skipped candidates");
    for (const auto& gamma : universe) {
      if (s.contains(gamma)) continue;
      try {
        const auto w = expansion_blocker(gamma, s);
        const bool placed = (w.word_a == gamma && s.contains(w.word_b)) ||
                            (w.word_b == gamma && s.contains(w.word_a));
        const auto k = w.factor.bits.size();
        c.expect(placed && w.word_a.prefix(k) == w.factor.bits && w.word_b.suffix(k) == w.factor.bits,
                 "bad blocker for " + gamma.to_string());
      } catch (const Error& e) {
        c.expect(false, "no blocker for " + gamma.to_string() + ": " + e.what());
      }
    }
  }
}

void worked_examples(Check& c) {
  c.expect(is_bifix_free(W("111010100")), "111010100 should be bifix-free");
  c.expect(!is_bifix_free(W("101001010")), "101001010 should be bordered");
  const auto b = bifixes(W("101001010"));
  c.expect(b.size() == 2 && b[0].bits == W("10") && b[1].bits == W("1010"),
           "101001010 bifixes differ from {10, 1010}");
  c.expect(bifixes(W("111010100")).empty(), "111010100 has bifixes");
  c.expect(cross_bifixes(W("111010100"), W("110101010")).empty(), "111010100/110101010 share a cross-bifix");
  const auto cb = cross_bifixes(W("111001100"), W("110011010"));
  bool has_1100 = false;
  for (const auto& f : cb) has_1100 = has_1100 || f.bits == W("1100");
  c.expect(has_1100, "111001100/110011010 lack cross-bifix 1100");
}

void catalan_dyck(Check& c) {
  for (std::size_t m = 0; m <= 10; ++m) {
    c.expect(catalan(m) == dyck_paths(2 * m).size(), "m=" + std::to_string(m) + " Dyck count mismatch");
  }
  c.expect(catalan(3) == 5, "C_3 != 5");
  c.expect(catalan(4) + catalan(1) * catalan(3) + catalan(2) * catalan(2) == 23, "14+5+4 != 23");
  c.expect(catalan(3) + catalan(1) * catalan(2) + catalan(2) * catalan(1) - catalan(1) * catalan(1) == 8,
           "(5+2+2)-1 != 8");
  c.expect(cbfs(10).size() == 23 && cbfs(8).size() == 8, "construction sizes at n=8,10 differ");
}

void exclusion_properties(Check& c) {
  for (std::size_t m = 1; m <= 7; m += 2) {
    const WordSet built = cbfs(2 * m + 2);
    const std::size_t half = m + 1;
    for (const auto& w : exclusion_set(m)) {
      if (w.prefix(half) == w.suffix(half)) {
        c.expect(!is_bifix_free(w), w.to_string() + " repeats a half yet is bifix-free");
        continue;
      }
      try {
        const auto blocker = expansion_blocker(w, built);
        c.expect(!cross_bifixes(blocker.word_a, blocker.word_b).empty(), "empty blocker for " + w.to_string());
      } catch (const Error& e) {
        c.expect(false, "no blocker for " + w.to_string() + ": " + e.what());
      }
    }
  }
}

void maximality_probe(Check& c) {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto r = max_set_search(n, 60s);
    c.expect(r.optimal, "n=" + std::to_string(n) + " search did not finish");
    c.expect(check_set(r.best, CheckMethod::Naive).ok && check_set(r.best, CheckMethod::Trie).ok &&
                 reference::check_set(r.best).ok,
             "n=" + std::to_string(n) + " certificate is not cross-bifix-free");
    const BigInt built = cbfs_cardinality(n);
    std::printf("       n=%zu max=%zu cbfs=%s %s\n", n, r.best.size(), str(built).c_str(),
                r.best.size() > built ? "exceeds" : "equal");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "cardinality sequence n=3..15 (construction and formula)", 5, cardinality_sequence},
      {"AC2", "kernel baseline n=3..15, construction larger for n>=9", 0, kernel_sequence},
      {"AC3", "bifix-free recurrence vs enumeration n<=20", 60, bifix_free_counts},
      {"AC4", "construction cross-bifix-free n=3..16, naive == trie", 0, cross_bifix_free},
      {"AC5", "construction non-expandable n=3..14 with blockers", 120, non_expandable},
      {"AC6", "worked bifix and cross-bifix examples", 0, worked_examples},
      {"AC7", "Dyck counts and Catalan arithmetic", 0, catalan_dyck},
      {"AC8", "exclusion-set members bordered or blocked, odd m<=7", 0, exclusion_properties},
      {"AC9", "exact maximum-set search n<=8 with verified certificate", 0, maximality_probe},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.limit_seconds > 0 && seconds >= criterion.limit_seconds) {
      std::ostringstream msg;
      msg << "ran " << seconds << " s, limit " << criterion.limit_seconds << " s";
      check.expect(false, msg.str());
    }
    const bool ok = check.failure.empty();
    failed += ok ? 0 : 1;
    std::printf("[%s] %s %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", criterion.id, criterion.title, seconds,
                ok ? "" : ": ", check.failure.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
