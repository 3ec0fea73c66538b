#include "cbf/verification.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <tuple>
#include <string>
#include <utility>

#include "cbf/error.hpp"
#include "packed.hpp"

namespace cbf {

namespace {

struct PairHit {
  std::size_t a;  // index of the word whose prefix matched
  std::size_t length;
};

// Aho-Corasick automaton over the words of one set. Every node is a prefix of
// at least one word; `owners` lists those words.
class PrefixAutomaton {
 public:
  explicit PrefixAutomaton(const WordSet& s) : n_(s.n()) {
    nodes_.emplace_back();
    const auto words = s.words();
    for (std::size_t id = 0; id < words.size(); ++id) {
      std::size_t cur = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        const unsigned c = words[id].at(i);
        if (nodes_[cur].next[c] == kNone) {
          nodes_[cur].next[c] = nodes_.size();
          Node child;
          child.depth = nodes_[cur].depth + 1;
          nodes_.push_back(child);
        }
        cur = nodes_[cur].next[c];
        nodes_[cur].owners.push_back(id);
      }
    }
    link();
  }

  // Hits (a, k) with prefix_k(word a) == suffix_k(w), 1 <= k < n, longest first.
  void scan(const BinaryWord& w, std::vector<PairHit>& hits) const {
    std::size_t state = 0;
    for (std::size_t i = 0; i < n_; ++i) state = nodes_[state].next[w.at(i)];
    for (; state != 0; state = nodes_[state].fail) {
      const std::size_t depth = nodes_[state].depth;
      if (depth >= n_) continue;
      for (std::size_t a : nodes_[state].owners) hits.push_back(PairHit{a, depth});
    }
  }

 private:
  static constexpr std::size_t kNone = ~std::size_t{0};

  struct Node {
    std::array<std::size_t, 2> next{kNone, kNone};
    std::size_t fail = 0;
    std::size_t depth = 0;
    std::vector<std::size_t> owners;
  };

  // BFS: failure links plus completed goto transitions.
  void link() {
    std::deque<std::size_t> queue;
    for (unsigned c = 0; c < 2; ++c) {
      std::size_t& child = nodes_[0].next[c];
      if (child == kNone) {
        child = 0;
      } else {
        nodes_[child].fail = 0;
        queue.push_back(child);
      }
    }
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (unsigned c = 0; c < 2; ++c) {
        const std::size_t v = nodes_[u].next[c];
        const std::size_t via_fail = nodes_[nodes_[u].fail].next[c];
        if (v == kNone) {
          nodes_[u].next[c] = via_fail;
        } else {
          nodes_[v].fail = via_fail;
          queue.push_back(v);
        }
      }
    }
  }

  std::size_t n_;
  std::vector<Node> nodes_;
};

ConflictWitness make_witness(const BinaryWord& a, const BinaryWord& b, std::size_t k) {
  return ConflictWitness{a, b, Factor{a.prefix(k), a == b ? FactorRole::Bifix : FactorRole::CrossBifix}};
}

VerificationReport check_naive(const WordSet& s) {
  const auto words = s.words();
  const std::size_t n = s.n();
  const auto rows = static_cast<std::int64_t>(words.size());
  std::vector<std::vector<ConflictWitness>> partial(words.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t r = 0; r < rows; ++r) {
    const BinaryWord& a = words[static_cast<std::size_t>(r)];
    for (const BinaryWord& b : words) {
      const std::size_t k = packed::shortest_overlap(a.bits(), b.bits(), n);
      if (k != 0) partial[static_cast<std::size_t>(r)].push_back(make_witness(a, b, k));
    }
  }
  VerificationReport report;
  report.method = CheckMethod::Naive;
  report.checked_pairs = static_cast<std::uint64_t>(words.size()) * words.size();
  for (auto& p : partial) {
    report.violations.insert(report.violations.end(), p.begin(), p.end());
  }
  report.ok = report.violations.empty();
  return report;
}

VerificationReport check_trie(const WordSet& s) {
  const auto words = s.words();
  const PrefixAutomaton automaton(s);
  const auto cols = static_cast<std::int64_t>(words.size());
  std::vector<std::vector<ConflictWitness>> partial(words.size());
#pragma omp parallel
  {
    std::vector<PairHit> hits;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t c = 0; c < cols; ++c) {
      const BinaryWord& b = words[static_cast<std::size_t>(c)];
      hits.clear();
      automaton.scan(b, hits);
      // Shortest factor per partner word.
      std::sort(hits.begin(), hits.end(), [](const PairHit& x, const PairHit& y) {
        return x.a != y.a ? x.a < y.a : x.length < y.length;
      });
      auto& out = partial[static_cast<std::size_t>(c)];
      for (std::size_t i = 0; i < hits.size(); ++i) {
        if (i > 0 && hits[i].a == hits[i - 1].a) continue;
        out.push_back(make_witness(words[hits[i].a], b, hits[i].length));
      }
    }
  }
  VerificationReport report;
  report.method = CheckMethod::Trie;
  report.checked_pairs = static_cast<std::uint64_t>(words.size()) * words.size();
  for (auto& p : partial) {
    report.violations.insert(report.violations.end(), p.begin(), p.end());
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const ConflictWitness& x, const ConflictWitness& y) {
              return std::tie(x.word_a, x.word_b) < std::tie(y.word_a, y.word_b);
            });
  report.ok = report.violations.empty();
  return report;
}

}  // namespace

std::string_view to_string(CheckMethod method) {
  return method == CheckMethod::Naive ? "naive" : "trie";
}

CheckMethod check_method_from_string(std::string_view name) {
  if (name == "naive") return CheckMethod::Naive;
  if (name == "trie") return CheckMethod::Trie;
  throw Error(ErrorCode::ParseError, "unknown method '" + std::string(name) + "'");
}

VerificationReport check_set(const WordSet& s, CheckMethod method) {
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "cannot verify an empty set");
  return method == CheckMethod::Naive ? check_naive(s) : check_trie(s);
}

NonExpandability is_non_expandable(const WordSet& s, std::size_t universe_n, std::size_t cap) {
  if (s.n() != universe_n) {
    throw Error(ErrorCode::MixedLengths, "set length " + std::to_string(s.n()) +
                                             " differs from universe length " +
                                             std::to_string(universe_n));
  }
  if (!s.empty() && !check_set(s).ok) {
    throw Error(ErrorCode::InvalidArgument, "set is not cross-bifix-free");
  }
  const WordSet universe = enumerate_bifix_free(universe_n, cap);
  std::vector<std::uint64_t> candidates;
  for (const auto& w : universe) {
    if (!s.contains(w)) candidates.push_back(w.bits());
  }
  std::vector<std::uint64_t> members;
  for (const auto& w : s) members.push_back(w.bits());

  const std::size_t n = universe_n;
  const auto count = static_cast<std::int64_t>(candidates.size());
  std::int64_t first_free = count;
#pragma omp parallel for schedule(dynamic, 32) reduction(min : first_free)
  for (std::int64_t i = 0; i < count; ++i) {
    const std::uint64_t gamma = candidates[static_cast<std::size_t>(i)];
    const bool blocked = std::any_of(members.begin(), members.end(), [&](std::uint64_t omega) {
      return packed::conflicts(gamma, omega, n);
    });
    if (!blocked && i < first_free) first_free = i;
  }

  NonExpandability result;
  result.candidates_checked = candidates.size();
  if (first_free < count) {
    result.non_expandable = false;
    result.expanding_word = BinaryWord(candidates[static_cast<std::size_t>(first_free)], n);
  }
  return result;
}

ConflictWitness expansion_blocker(const BinaryWord& gamma, const WordSet& s) {
  if (gamma.size() != s.n()) throw Error(ErrorCode::MixedLengths, "gamma length differs from set");
  if (s.contains(gamma)) throw Error(ErrorCode::InvalidArgument, "gamma is already in the set");
  if (!is_bifix_free(gamma)) throw Error(ErrorCode::InvalidArgument, "gamma is not bifix-free");
  const std::size_t n = gamma.size();
  for (const BinaryWord& omega : s) {
    const std::size_t as_prefix = packed::shortest_overlap(gamma.bits(), omega.bits(), n);
    const std::size_t as_suffix = packed::shortest_overlap(omega.bits(), gamma.bits(), n);
    if (as_prefix != 0 && (as_suffix == 0 || as_prefix <= as_suffix)) {
      return make_witness(gamma, omega, as_prefix);
    }
    if (as_suffix != 0) return make_witness(omega, gamma, as_suffix);
  }
  throw Error(ErrorCode::NoBlocker, "no member of the set conflicts with " + gamma.to_string());
}

}  // namespace cbf
