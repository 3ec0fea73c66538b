#include "cbf/construction.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <string>

#include "cbf/error.hpp"

namespace cbf {

namespace {

// alpha x beta x' for every alpha in D_2i, beta in D_2(m-i), i in [0, i_max].
std::vector<BinaryWord> rise_fall_slices(std::size_t m, std::size_t i_max) {
  const std::size_t n = 2 * m + 2;
  const auto slices = static_cast<std::int64_t>(i_max + 1);
  std::vector<std::vector<BinaryWord>> partial(i_max + 1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t s = 0; s < slices; ++s) {
    const auto i = static_cast<std::size_t>(s);
    const auto alphas = dyck_words(2 * i);
    const auto betas = dyck_words(2 * (m - i));
    auto& out = partial[i];
    out.reserve(alphas.size() * betas.size());
    const std::size_t beta_shift = 2 * (m - i) + 1;
    for (std::uint64_t alpha : alphas) {
      for (std::uint64_t beta : betas) {
        const std::uint64_t elevated = (((std::uint64_t{1} << (beta_shift - 1)) | beta) << 1);
        const std::uint64_t head = i == 0 ? 0 : alpha << (beta_shift + 1);
        out.emplace_back(head | elevated, n);
      }
    }
  }
  std::vector<BinaryWord> words;
  for (auto& p : partial) words.insert(words.end(), p.begin(), p.end());
  return words;
}

void require_length(std::size_t n) {
  if (n < 3 || n > BinaryWord::kMaxLength) {
    throw Error(ErrorCode::UnsupportedLength,
                "construction is defined for 3 <= n <= 64, got " + std::to_string(n));
  }
}

}  // namespace

WordSet cbfs_odd(std::size_t m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "cbfs_odd needs m >= 1");
  const std::size_t n = 2 * m + 1;
  require_length(n);
  std::vector<BinaryWord> words;
  for (std::uint64_t alpha : dyck_words(2 * m)) {
    words.emplace_back((std::uint64_t{1} << (2 * m)) | alpha, n);
  }
  return WordSet(n, std::move(words), Provenance::CbfsOdd);
}

WordSet cbfs_even_m_even(std::size_t m) {
  if (m < 2 || m % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "cbfs_even_m_even needs even m >= 2");
  }
  require_length(2 * m + 2);
  return WordSet(2 * m + 2, rise_fall_slices(m, m / 2), Provenance::CbfsEvenMEven);
}

WordSet exclusion_set(std::size_t m) {
  if (m < 1 || m % 2 != 1) throw Error(ErrorCode::InvalidArgument, "exclusion_set needs odd m >= 1");
  const std::size_t n = 2 * m + 2;
  require_length(n);
  const std::size_t half = m + 1;  // |x a' x'|
  const auto inner = dyck_words(m - 1);
  std::vector<BinaryWord> words;
  words.reserve(inner.size() * inner.size());
  const std::uint64_t top = std::uint64_t{1} << (half - 1);
  for (std::uint64_t a : inner) {
    for (std::uint64_t b : inner) {
      const std::uint64_t left = top | (a << 1);
      const std::uint64_t right = top | (b << 1);
      words.emplace_back((left << half) | right, n);
    }
  }
  return WordSet(n, std::move(words), Provenance::Exclusion);
}

WordSet cbfs_even_m_odd(std::size_t m) {
  if (m < 1 || m % 2 != 1) throw Error(ErrorCode::InvalidArgument, "cbfs_even_m_odd needs odd m >= 1");
  require_length(2 * m + 2);
  auto words = rise_fall_slices(m, (m + 1) / 2);
  std::sort(words.begin(), words.end());
  const WordSet excluded = exclusion_set(m);
  std::vector<BinaryWord> kept;
  kept.reserve(words.size());
  std::set_difference(words.begin(), words.end(), excluded.begin(), excluded.end(),
                      std::back_inserter(kept));
  return WordSet(2 * m + 2, std::move(kept), Provenance::CbfsEvenMOdd);
}

WordSet cbfs(std::size_t n) {
  require_length(n);
  if (n % 2 == 1) return cbfs_odd((n - 1) / 2);
  const std::size_t m = (n - 2) / 2;
  return m % 2 == 0 ? cbfs_even_m_even(m) : cbfs_even_m_odd(m);
}

BigInt cbfs_cardinality(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorCode::UnsupportedLength, "cardinality is defined for n >= 3");
  }
  if (n % 2 == 1) return catalan((n - 1) / 2);
  const std::size_t m = (n - 2) / 2;
  const std::size_t i_max = m % 2 == 0 ? m / 2 : (m + 1) / 2;
  BigInt total = 0;
  for (std::size_t i = 0; i <= i_max; ++i) total += catalan(i) * catalan(m - i);
  if (m % 2 == 1) {
    const BigInt c = catalan((m - 1) / 2);
    total -= c * c;
  }
  return total;
}

}  // namespace cbf
