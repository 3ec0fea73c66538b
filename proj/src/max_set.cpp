#include <bit>
#include <string>

#include "cbf/error.hpp"
#include "cbf/verification.hpp"
#include "packed.hpp"

namespace cbf {

namespace {

// Bitset over vertex indices. Vertices are the words of BF_2(n) in
// lexicographic order; the search runs in the compatibility graph (edge =
// cross-bifix-free pair), where a maximum clique is a maximum independent set
// of the conflict graph. A colour class of the compatibility graph is a
// clique of the conflict graph, so greedy colouring gives the clique-cover
// bound.
class VertexSet {
 public:
  explicit VertexSet(std::size_t size) : blocks_((size + 63) / 64, 0) {}

  void set(std::size_t v) { blocks_[v / 64] |= std::uint64_t{1} << (v % 64); }
  void reset(std::size_t v) { blocks_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

  bool any() const {
    for (auto b : blocks_) {
      if (b != 0) return true;
    }
    return false;
  }

  /// Lowest set index; undefined if empty.
  std::size_t lowest() const {
    for (std::size_t i = 0;; ++i) {
      if (blocks_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(blocks_[i]));
    }
  }

  void intersect(const VertexSet& other) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= other.blocks_[i];
  }
  void subtract(const VertexSet& other) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~other.blocks_[i];
  }

 private:
  std::vector<std::uint64_t> blocks_;
};

class CliqueSearch {
 public:
  using Clock = std::chrono::steady_clock;

  CliqueSearch(std::vector<VertexSet> compatible, Clock::time_point deadline)
      : compatible_(std::move(compatible)), deadline_(deadline) {}

  void run() {
    const std::size_t size = compatible_.size();
    seed_greedy();
    VertexSet all(size);
    for (std::size_t v = 0; v < size; ++v) all.set(v);
    std::vector<std::size_t> current;
    expand(all, current);
  }

  const std::vector<std::size_t>& best() const { return best_; }
  bool timed_out() const { return timed_out_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void seed_greedy() {
    VertexSet candidates(compatible_.size());
    for (std::size_t v = 0; v < compatible_.size(); ++v) candidates.set(v);
    while (candidates.any()) {
      const std::size_t v = candidates.lowest();
      best_.push_back(v);
      candidates.intersect(compatible_[v]);
    }
  }

  bool out_of_time() {
    if ((nodes_ & 0x3FF) == 0 && Clock::now() >= deadline_) timed_out_ = true;
    return timed_out_;
  }

  void expand(VertexSet candidates, std::vector<std::size_t>& current) {
    ++nodes_;
    if (out_of_time()) return;

    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    VertexSet uncoloured = candidates;
    for (std::size_t c = 1; uncoloured.any(); ++c) {
      VertexSet available = uncoloured;
      while (available.any()) {
        const std::size_t v = available.lowest();
        uncoloured.reset(v);
        available.reset(v);
        available.subtract(compatible_[v]);
        order.push_back(v);
        colour.push_back(c);
      }
    }

    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colour[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current.push_back(v);
      VertexSet next = candidates;
      next.intersect(compatible_[v]);
      if (next.any()) {
        expand(next, current);
      } else if (current.size() > best_.size()) {
        best_ = current;
      }
      current.pop_back();
      if (timed_out_) return;
      candidates.reset(v);
    }
  }

  std::vector<VertexSet> compatible_;
  Clock::time_point deadline_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

MaxSetResult max_set_search(std::size_t n, std::chrono::duration<double> time_limit,
                            std::size_t cap) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "max_set_search needs n >= 2");
  const WordSet universe = enumerate_bifix_free(n, cap);
  const auto words = universe.words();
  const std::size_t size = words.size();

  std::vector<VertexSet> compatible(size, VertexSet(size));
  for (std::size_t u = 0; u < size; ++u) {
    for (std::size_t v = u + 1; v < size; ++v) {
      if (!packed::conflicts(words[u].bits(), words[v].bits(), n)) {
        compatible[u].set(v);
        compatible[v].set(u);
      }
    }
  }

  const auto deadline =
      CliqueSearch::Clock::now() +
      std::chrono::duration_cast<CliqueSearch::Clock::duration>(time_limit);
  CliqueSearch search(std::move(compatible), deadline);
  search.run();

  std::vector<BinaryWord> chosen;
  for (std::size_t v : search.best()) chosen.push_back(words[v]);
  return MaxSetResult{WordSet(n, std::move(chosen), Provenance::MaxSetSearch), !search.timed_out(),
                      search.nodes()};
}

}  // namespace cbf
