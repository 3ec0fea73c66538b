#include "cbf/combinatorics.hpp"

#include <string>

#include "cbf/error.hpp"
#include "packed.hpp"

namespace cbf {

namespace {

void extend_dyck(std::size_t remaining_rises, std::size_t open, std::uint64_t acc,
                 std::vector<std::uint64_t>& out) {
  if (remaining_rises == 0 && open == 0) {
    out.push_back(acc);
    return;
  }
  if (remaining_rises > 0) extend_dyck(remaining_rises - 1, open + 1, (acc << 1) | 1U, out);
  if (open > 0) extend_dyck(remaining_rises, open - 1, acc << 1, out);
}

// Bifix-free words of length n in [lo, hi), appended in increasing order.
void collect_bifix_free(std::size_t n, std::uint64_t lo, std::uint64_t hi,
                        std::vector<std::uint64_t>& out) {
  for (std::uint64_t x = lo; x < hi; ++x) {
    if (!packed::has_border(x, n)) out.push_back(x);
  }
}

void check_enumeration_args(std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "enumeration length must be >= 1");
  if (n > cap || n >= BinaryWord::kMaxLength) {
    throw Error(ErrorCode::CapExceeded, "length " + std::to_string(n) +
                                            " exceeds enumeration cap " + std::to_string(cap));
  }
}

}  // namespace

DyckPath::DyckPath(LatticePath path) : path_(std::move(path)) {
  if (path_.size() > BinaryWord::kMaxLength || path_.end_height() != 0 || path_.min_height() < 0) {
    throw Error(ErrorCode::InvalidArgument, "not a Dyck path");
  }
  for (Step s : path_.steps()) bits_ = (bits_ << 1) | (s == Step::Rise ? 1U : 0U);
}

BigInt catalan(std::size_t m) {
  // C_{i+1} = C_i * 2(2i+1) / (i+2); each step divides exactly.
  BigInt c = 1;
  for (std::size_t i = 0; i < m; ++i) {
    c *= 2 * (2 * i + 1);
    c /= i + 2;
  }
  return c;
}

std::vector<std::uint64_t> dyck_words(std::size_t k) {
  if (k % 2 != 0) throw Error(ErrorCode::OddLength, "Dyck paths have even length");
  if (k > BinaryWord::kMaxLength) throw Error(ErrorCode::InvalidArgument, "Dyck length above 64");
  std::vector<std::uint64_t> out;
  extend_dyck(k / 2, 0, 0, out);
  return out;
}

std::vector<DyckPath> dyck_paths(std::size_t k) {
  const auto packed_paths = dyck_words(k);
  std::vector<DyckPath> out;
  out.reserve(packed_paths.size());
  for (std::uint64_t bits : packed_paths) {
    std::vector<Step> steps(k);
    for (std::size_t i = 0; i < k; ++i) {
      steps[i] = ((bits >> (k - 1 - i)) & 1U) ? Step::Rise : Step::Fall;
    }
    out.emplace_back(LatticePath(std::move(steps)));
  }
  return out;
}

BigInt bifix_free_count(unsigned q, std::size_t n) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "alphabet size must be >= 2");
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "length must be >= 1");
  std::vector<BigInt> table(n + 1);
  table[1] = q;
  for (std::size_t len = 2; len <= n; ++len) {
    if (len % 2 == 1) {
      table[len] = q * table[len - 1];
    } else {
      table[len] = q * table[len - 1] - table[len / 2];
    }
  }
  return table[n];
}

WordSet enumerate_bifix_free(std::size_t n, std::size_t cap) {
  check_enumeration_args(n, cap);
  constexpr std::size_t kChunkBits = 14;
  const std::size_t chunk_bits = n < kChunkBits ? n : kChunkBits;
  const std::uint64_t chunk_size = std::uint64_t{1} << chunk_bits;
  const auto chunks = static_cast<std::int64_t>(std::uint64_t{1} << (n - chunk_bits));

  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t lo = static_cast<std::uint64_t>(c) * chunk_size;
    collect_bifix_free(n, lo, lo + chunk_size, partial[static_cast<std::size_t>(c)]);
  }

  std::vector<BinaryWord> words;
  std::size_t total = 0;
  for (const auto& p : partial) total += p.size();
  words.reserve(total);
  for (const auto& p : partial) {
    for (std::uint64_t x : p) words.emplace_back(x, n);
  }
  return WordSet(n, std::move(words), Provenance::Enumeration);
}

WordSet enumerate_hat_bf(std::size_t n, std::optional<int> h, std::size_t cap) {
  check_enumeration_args(n, cap);
  if (h) {
    const auto len = static_cast<int>(n);
    if (*h <= -len || *h >= len || ((*h - len) % 2) != 0) {
      throw Error(ErrorCode::ImpossibleHeight, "no path of length " + std::to_string(n) +
                                                   " ends at height " + std::to_string(*h));
    }
  }
  const WordSet all = enumerate_bifix_free(n, cap);
  std::vector<BinaryWord> words;
  for (const auto& w : all) {
    if (!w.first() || w.last()) continue;
    if (h && end_height(w) != *h) continue;
    words.push_back(w);
  }
  return WordSet(n, std::move(words), Provenance::Enumeration);
}

int end_height(const BinaryWord& w) noexcept {
  return static_cast<int>(w.count(1)) - static_cast<int>(w.count(0));
}

}  // namespace cbf
