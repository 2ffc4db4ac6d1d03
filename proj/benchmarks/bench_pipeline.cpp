#include <benchmark/benchmark.h>

#include <random>

#include "sobelcs/golden.hpp"
#include "sobelcs/pipeline.hpp"

namespace {

sobelcs::Image random_image(int w, int h) {
  std::mt19937 rng(7);
  sobelcs::Image img(w, h);
  for (auto& p : img.data()) p = static_cast<std::uint8_t>(rng() & 0xFF);
  return img;
}

void BM_ProcessFrame(benchmark::State& state) {
  const auto variant = sobelcs::kAllVariants[static_cast<std::size_t>(state.range(0))];
  const int side = static_cast<int>(state.range(1));
  const auto img = random_image(side, side);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sobelcs::process_frame(img, variant));
  }
  state.SetItemsProcessed(state.iterations() * side * side);
  state.SetLabel(std::string(sobelcs::to_string(variant)));
}
BENCHMARK(BM_ProcessFrame)
    ->ArgsProduct({{0, 1, 2, 3}, {64, 512}})
    ->Unit(benchmark::kMillisecond);

void BM_Golden(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const auto img = random_image(side, side);
  for (auto _ : state) benchmark::DoNotOptimize(sobelcs::golden::sobel_golden(img));
  state.SetItemsProcessed(state.iterations() * side * side);
}
BENCHMARK(BM_Golden)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
