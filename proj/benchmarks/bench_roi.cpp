#include <benchmark/benchmark.h>

#include "roispot/random.hpp"
#include "roispot/roi.hpp"
#include "roispot/saliency.hpp"

namespace {

using namespace roispot;

std::vector<float> probability_map(int side, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<float> m(static_cast<std::size_t>(side * side));
  double sum = 0.0;
  for (auto& x : m) sum += (x = static_cast<float>(rng.uniform()));
  for (auto& x : m) x = static_cast<float>(x / sum);
  return m;
}

void BM_MinMassRect(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const auto m = probability_map(side, 3);
  const RectSearch search{state.range(1) / 100.0, side / 4, side / 4, 1.0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(min_mass_rect({m, side, side}, search));
}
BENCHMARK(BM_MinMassRect)->Args({56, 0})->Args({56, 30})->Args({56, 90})->Args({112, 30});

void BM_SelectRois(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  std::vector<float> data;
  for (int l = 0; l < 16; ++l) {
    const auto m = probability_map(56, 10 + static_cast<std::uint64_t>(l));
    data.insert(data.end(), m.begin(), m.end());
  }
  const SaliencyVolume sv(16, 56, 56, SaliencyStage::probability, std::move(data));
  for (auto _ : state) benchmark::DoNotOptimize(select_rois(sv, RoiConfig{}, FrameGeometry{}, threads));
}
BENCHMARK(BM_SelectRois)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CropResize(benchmark::State& state) {
  Image frame(448, 448, 3);
  SplitMix64 rng(4);
  for (auto& x : frame.data) x = static_cast<float>(rng.uniform());
  const Roi roi{0, 100, 80, 200, 200};
  for (auto _ : state) benchmark::DoNotOptimize(crop_resize(frame, roi, 112, 112));
}
BENCHMARK(BM_CropResize);

}  // namespace
