#include "cbf/reference.hpp"

#include "cbf/error.hpp"

namespace cbf::reference {

namespace {

// Shortest factor that is a prefix of a and a suffix of b, or 0.
std::size_t shortest_prefix_suffix(const BinaryWord& a, const BinaryWord& b) {
  for (std::size_t k = 1; k < a.size(); ++k) {
    if (a.prefix(k) == b.suffix(k)) return k;
  }
  return 0;
}

}  // namespace

WordSet enumerate_bifix_free(std::size_t n) {
  if (n == 0 || n > kDefaultEnumerationCap) {
    throw Error(ErrorCode::CapExceeded, "reference enumeration supports 1 <= n <= 24");
  }
  std::vector<BinaryWord> words;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    BinaryWord w(x, n);
    if (is_bifix_free(w)) words.push_back(w);
  }
  return WordSet(n, std::move(words), Provenance::Enumeration);
}

VerificationReport check_set(const WordSet& s) {
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "cannot verify an empty set");
  VerificationReport report;
  report.method = CheckMethod::Naive;
  for (const BinaryWord& a : s) {
    for (const BinaryWord& b : s) {
      ++report.checked_pairs;
      const bool shares = !cross_bifixes(a, b).empty();
      if (!shares) continue;
      const std::size_t k = shortest_prefix_suffix(a, b);
      if (k == 0) continue;  // only b-prefix/a-suffix overlaps; reported as (b, a)
      const FactorRole role = a == b ? FactorRole::Bifix : FactorRole::CrossBifix;
      report.violations.push_back(ConflictWitness{a, b, Factor{a.prefix(k), role}});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

NonExpandability is_non_expandable(const WordSet& s, std::size_t universe_n) {
  if (s.n() != universe_n) throw Error(ErrorCode::MixedLengths, "set length differs from universe");
  NonExpandability result;
  for (const BinaryWord& gamma : enumerate_bifix_free(universe_n)) {
    if (s.contains(gamma)) continue;
    ++result.candidates_checked;
    bool blocked = false;
    for (const BinaryWord& omega : s) {
      if (!cross_bifixes(gamma, omega).empty()) {
        blocked = true;
        break;
      }
    }
    if (!blocked) {
      result.non_expandable = false;
      result.expanding_word = gamma;
      return result;
    }
  }
  return result;
}

}  // namespace cbf::reference
