#include <benchmark/benchmark.h>

#include "roispot/eval.hpp"
#include "roispot/random.hpp"
#include "roispot/spotting.hpp"

namespace {

using namespace roispot;

void BM_SoftNms(benchmark::State& state) {
  SplitMix64 rng(5);
  std::vector<float> s(static_cast<std::size_t>(state.range(0)));
  for (auto& x : s) x = static_cast<float>(rng.uniform());
  NmsConfig c;
  c.window = 12;
  for (auto _ : state) benchmark::DoNotOptimize(soft_nms_1d(s, c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SoftNms)->Arg(1000)->Arg(20000);

void BM_Evaluate(benchmark::State& state) {
  SplitMix64 rng(6);
  std::vector<EventSet> gt, det;
  for (int v = 0; v < 20; ++v) {
    EventSet g{"v" + std::to_string(v), {}}, d{g.video, {}};
    for (int i = 0; i < 50; ++i) g.events.push_back({static_cast<int>(rng.between(1, 10)), rng.between(0, 5000), {}});
    for (int i = 0; i < 400; ++i) {
      d.events.push_back({static_cast<int>(rng.between(1, 10)), rng.between(0, 5000), rng.uniform()});
    }
    gt.push_back(std::move(g));
    det.push_back(std::move(d));
  }
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(det, gt, EvalConfig{}));
}
BENCHMARK(BM_Evaluate)->Unit(benchmark::kMillisecond);

}  // namespace
