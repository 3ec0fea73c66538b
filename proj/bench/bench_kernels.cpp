// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "cbf/combinatorics.hpp"
#include "cbf/construction.hpp"
#include "cbf/reference.hpp"
#include "cbf/verification.hpp"

namespace {

// Random bifix-free set of about k words; conflicts are common, so every
// checker has violations to report.
cbf::WordSet noisy_set(std::size_t n, std::size_t k) {
  const auto pool = cbf::enumerate_bifix_free(n);
  std::mt19937_64 rng(n * 7919 + k);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<cbf::BinaryWord> words;
  for (std::size_t i = 0; i < k; ++i) words.push_back(pool.words()[pick(rng)]);
  return cbf::WordSet(n, std::move(words), cbf::Provenance::User);
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cbf::enumerate_bifix_free(n));
}

void BM_EnumerateSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cbf::reference::enumerate_bifix_free(n));
}

void BM_CheckNaive(benchmark::State& state) {
  const auto s = cbf::cbfs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cbf::check_set(s, cbf::CheckMethod::Naive));
  state.counters["words"] = static_cast<double>(s.size());
}

void BM_CheckTrie(benchmark::State& state) {
  const auto s = cbf::cbfs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cbf::check_set(s, cbf::CheckMethod::Trie));
  state.counters["words"] = static_cast<double>(s.size());
}

void BM_CheckSerial(benchmark::State& state) {
  const auto s = cbf::cbfs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cbf::reference::check_set(s));
  state.counters["words"] = static_cast<double>(s.size());
}

void BM_CheckNoisyNaive(benchmark::State& state) {
  const auto s = noisy_set(static_cast<std::size_t>(state.range(0)), 512);
  for (auto _ : state) benchmark::DoNotOptimize(cbf::check_set(s, cbf::CheckMethod::Naive));
}

void BM_CheckNoisyTrie(benchmark::State& state) {
  const auto s = noisy_set(static_cast<std::size_t>(state.range(0)), 512);
  for (auto _ : state) benchmark::DoNotOptimize(cbf::check_set(s, cbf::CheckMethod::Trie));
}

void BM_NonExpandableParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = cbf::cbfs(n);
  for (auto _ : state) benchmark::DoNotOptimize(cbf::is_non_expandable(s, n));
}

void BM_NonExpandableSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = cbf::cbfs(n);
  for (auto _ : state) benchmark::DoNotOptimize(cbf::reference::is_non_expandable(s, n));
}

}  // namespace

BENCHMARK(BM_EnumerateParallel)->DenseRange(16, 22, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->DenseRange(16, 22, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckNaive)->DenseRange(12, 18, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckTrie)->DenseRange(12, 18, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckSerial)->DenseRange(12, 16, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckNoisyNaive)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckNoisyTrie)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NonExpandableParallel)->DenseRange(12, 16, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NonExpandableSerial)->DenseRange(12, 16, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
