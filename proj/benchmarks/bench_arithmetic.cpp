#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "sobelcs/adder.hpp"
#include "sobelcs/compressor.hpp"

namespace {

using sobelcs::BitWord;

std::vector<BitWord> random_words(std::size_t n, int width) {
  std::mt19937 rng(42);
  std::vector<BitWord> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(BitWord::from_unsigned(rng(), width));
  return out;
}

void BM_Compress42(benchmark::State& state) {
  const auto words = random_words(1024, 11);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sobelcs::compress_4_2(
        words[k & 1023], words[(k + 1) & 1023], words[(k + 2) & 1023],
        words[(k + 3) & 1023]));
    ++k;
  }
}
BENCHMARK(BM_Compress42);

template <sobelcs::AddResult (*Add)(const BitWord&, const BitWord&, bool)>
void BM_Adder(benchmark::State& state) {
  const auto words = random_words(1024, static_cast<int>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Add(words[k & 1023], words[(k + 1) & 1023], false));
    ++k;
  }
}
BENCHMARK_TEMPLATE(BM_Adder, sobelcs::ripple_add)->Arg(8)->Arg(11)->Arg(16);
BENCHMARK_TEMPLATE(BM_Adder, sobelcs::lookahead_add)->Arg(8)->Arg(11)->Arg(16);

}  // namespace
