#include <benchmark/benchmark.h>

#include "roispot/random.hpp"
#include "roispot/saliency.hpp"

namespace {

using namespace roispot;

std::vector<float> noise(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<float> v(n);
  for (auto& x : v) x = static_cast<float>(rng.uniform());
  return v;
}

// Clip of 16 frames, 7x7 grid, 368 channels: the shape of a small backbone's last stage.
void BM_BuildSaliency(benchmark::State& state) {
  const FeatureVolume fv(16, 7, 7, 368, noise(16 * 7 * 7 * 368, 1));
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_saliency(fv, SaliencyConfig{}, threads));
}
BENCHMARK(BM_BuildSaliency)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SmoothSeparable(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const SaliencyVolume sv(16, side, side, SaliencyStage::upsampled, noise(16 * side * side, 2));
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_smooth_st(sv, 2.0, 1.5));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sv.data().size()));
}
BENCHMARK(BM_SmoothSeparable)->Arg(56)->Arg(112)->Unit(benchmark::kMillisecond);

}  // namespace
