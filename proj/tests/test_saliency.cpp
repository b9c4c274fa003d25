#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "roispot/error.hpp"
#include "roispot/saliency.hpp"
#include "roispot/synth.hpp"
#include "test_support.hpp"

using namespace roispot;
using doctest::Approx;

namespace {

double frame_sum(const SaliencyVolume& v, std::size_t l) {
  double s = 0.0;
  for (float x : v.frame(l)) s += x;
  return s;
}

double max_abs_diff(std::span<const float> a, std::span<const float> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(double(a[i]) - double(b[i])));
  return worst;
}

}  // namespace

TEST_CASE("channel_average takes the per-cell mean") {
  // frame [[(1,3),(2,4)],[(0,2),(5,5)]]
  const FeatureVolume fv(1, 2, 2, 2, {1, 3, 2, 4, 0, 2, 5, 5});
  const auto s = channel_average(fv);
  CHECK(s.stage() == SaliencyStage::raw);
  CHECK(std::vector<float>(s.data().begin(), s.data().end()) == std::vector<float>{2, 3, 1, 5});
}

TEST_CASE("channel_average with one channel is the identity") {
  SplitMix64 rng(3);
  const auto values = test::random_values(rng, 18, -2, 2);
  const auto s = channel_average(FeatureVolume(2, 3, 3, 1, values));
  CHECK(std::vector<float>(s.data().begin(), s.data().end()) == values);
}

TEST_CASE("channel_average ignores channel order") {
  SplitMix64 rng(5);
  const std::size_t d = 6;
  const auto values = test::random_values(rng, 2 * 3 * 4 * d);
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  for (int trial = 0; trial < 10; ++trial) {
    for (std::size_t i = d - 1; i > 0; --i) std::swap(perm[i], perm[static_cast<std::size_t>(rng.between(0, i))]);
    std::vector<float> shuffled(values.size());
    for (std::size_t cell = 0; cell < values.size() / d; ++cell) {
      // Summation order changes with the permutation, so compare within float rounding.
      for (std::size_t c = 0; c < d; ++c) shuffled[cell * d + c] = values[cell * d + perm[c]];
    }
    const auto a = channel_average(FeatureVolume(2, 3, 4, d, values));
    const auto b = channel_average(FeatureVolume(2, 3, 4, d, shuffled));
    CHECK(max_abs_diff(a.data(), b.data()) <= 1e-7);
  }
}

TEST_CASE("minmax_normalize scales each frame to [0, 1]") {
  const SaliencyVolume raw(2, 2, 2, SaliencyStage::raw, {2, 3, 1, 5, 7, 7, 7, 7});
  const auto n = minmax_normalize(raw);
  CHECK(n.stage() == SaliencyStage::normalized);
  const auto f0 = n.frame(0);
  CHECK(std::vector<float>(f0.begin(), f0.end()) == std::vector<float>{0.25f, 0.5f, 0.f, 1.f});
  const auto f1 = n.frame(1);
  CHECK(std::all_of(f1.begin(), f1.end(), [](float v) { return v == 0.0f; }));
}

TEST_CASE("minmax_normalize is invariant to positive affine maps") {
  SplitMix64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto values = test::random_values(rng, 3 * 5 * 5, -1, 1);
    const double a = rng.uniform(0.5, 4.0), b = rng.uniform(-3, 3);
    std::vector<float> mapped(values.size());
    std::transform(values.begin(), values.end(), mapped.begin(), [&](float v) { return float(a * v + b); });
    const auto x = minmax_normalize(SaliencyVolume(3, 5, 5, SaliencyStage::raw, values));
    const auto y = minmax_normalize(SaliencyVolume(3, 5, 5, SaliencyStage::raw, mapped));
    CHECK(max_abs_diff(x.data(), y.data()) <= 1e-5);
    for (std::size_t l = 0; l < 3; ++l) {
      auto f = x.frame(l);
      CHECK(*std::min_element(f.begin(), f.end()) == 0.0f);
      CHECK(*std::max_element(f.begin(), f.end()) == 1.0f);
    }
  }
}

TEST_CASE("upsample_bilinear uses half-pixel centers") {
  // (u + 0.5) / 2 - 0.5 gives source coordinates -0.25 -> 0, 0.25, 0.75, 1.25 -> 1.
  const SaliencyVolume row(1, 1, 2, SaliencyStage::normalized, {0, 1});
  const auto up = upsample_bilinear(row, 2);
  REQUIRE(up.height() == 2);
  REQUIRE(up.width() == 4);
  for (std::size_t y = 0; y < 2; ++y) {
    CHECK(up.at(0, y, 0) == 0.0f);
    CHECK(up.at(0, y, 1) == 0.25f);
    CHECK(up.at(0, y, 2) == 0.75f);
    CHECK(up.at(0, y, 3) == 1.0f);
  }
}

TEST_CASE("upsample_bilinear with k = 1 is the identity and stays in range") {
  SplitMix64 rng(13);
  const SaliencyVolume v(2, 4, 5, SaliencyStage::normalized, test::random_values(rng, 40));
  const auto same = upsample_bilinear(v, 1);
  CHECK(std::equal(same.data().begin(), same.data().end(), v.data().begin()));

  for (int k : {2, 3, 8}) {
    const auto up = upsample_bilinear(v, k);
    CHECK(up.height() == 4u * k);
    for (std::size_t l = 0; l < 2; ++l) {
      auto src = v.frame(l);
      auto dst = up.frame(l);
      const auto [lo, hi] = std::minmax_element(src.begin(), src.end());
      CHECK(*std::min_element(dst.begin(), dst.end()) >= *lo);
      CHECK(*std::max_element(dst.begin(), dst.end()) <= *hi);
    }
  }
  CHECK_THROWS_AS(upsample_bilinear(v, 0), ValidationError);
}

TEST_CASE("gaussian kernels are normalized and truncated at 3 sigma") {
  for (double sigma : {0.3, 1.0, 1.5, 2.0, 3.7}) {
    const auto g = gaussian_kernel(sigma);
    CHECK(g.size() == 2 * static_cast<std::size_t>(std::ceil(3 * sigma)) + 1);
    CHECK(std::accumulate(g.begin(), g.end(), 0.0) == Approx(1.0).epsilon(1e-7));
    CHECK(g[g.size() / 2] == *std::max_element(g.begin(), g.end()));
  }
  CHECK(gaussian_kernel(0.0) == std::vector<double>{1.0});
}

TEST_CASE("smoothing an interior impulse reproduces the 2-D kernel") {
  const double sigma = 1.0;
  SaliencyVolume v(1, 11, 11, SaliencyStage::upsampled);
  v.at(0, 5, 5) = 1.0f;
  const auto s = gaussian_smooth_st(v, sigma, 0.0);
  const auto g = gaussian_kernel(sigma);
  const int r = static_cast<int>(g.size() / 2);
  for (int y = 0; y < 11; ++y) {
    for (int x = 0; x < 11; ++x) {
      const int dy = y - 5, dx = x - 5;
      const double want = (std::abs(dy) <= r && std::abs(dx) <= r) ? g[dy + r] * g[dx + r] : 0.0;
      CHECK(s.at(0, y, x) == Approx(want).epsilon(1e-6));
    }
  }
}

TEST_CASE("smoothing preserves constants and interior mass") {
  SaliencyVolume c(3, 6, 7, SaliencyStage::upsampled);
  std::fill(c.data().begin(), c.data().end(), 0.4f);
  const auto s = gaussian_smooth_st(c, 2.0, 1.5);
  for (float v : s.data()) CHECK(v == Approx(0.4).epsilon(1e-6));

  // Support at least r = 6 cells from every border: the spread stays inside the grid.
  SplitMix64 rng(17);
  SaliencyVolume v(1, 20, 20, SaliencyStage::upsampled);
  double before = 0.0;
  for (int y = 6; y < 14; ++y) {
    for (int x = 6; x < 14; ++x) {
      v.at(0, y, x) = static_cast<float>(rng.uniform());
      before += v.at(0, y, x);
    }
  }
  const auto sm = gaussian_smooth_st(v, 2.0, 0.0);
  double after = 0.0;
  for (float x : sm.data()) after += x;
  CHECK(std::abs(after - before) <= 1e-5);
}

TEST_CASE("separable smoothing matches the dense 3-D oracle") {
  SplitMix64 rng(19);
  const SaliencyVolume v(3, 6, 6, SaliencyStage::upsampled, test::random_values(rng, 108));
  const auto fast = gaussian_smooth_st(v, 1.2, 0.8);
  const auto slow = oracle_conv3d(v, 1.2, 0.8);
  CHECK(max_abs_diff(fast.data(), slow.data()) <= 1e-6);
}

TEST_CASE("smoothing is independent of thread count") {
  SplitMix64 rng(23);
  const SaliencyVolume v(5, 16, 16, SaliencyStage::upsampled, test::random_values(rng, 5 * 256));
  const auto one = gaussian_smooth_st(v, 2.0, 1.5, 1);
  const auto many = gaussian_smooth_st(v, 2.0, 1.5, 8);
  CHECK(one == many);
}

TEST_CASE("smoothing rejects raw saliency") {
  const SaliencyVolume raw(1, 2, 2, SaliencyStage::raw, {-1, 0, 1, 2});
  CHECK_THROWS_AS(gaussian_smooth_st(raw, 1.0, 0.0), ValidationError);
}

TEST_CASE("probability_normalize divides by the frame sum") {
  const SaliencyVolume v(2, 2, 2, SaliencyStage::smoothed, {0.25f, 0.5f, 0.f, 1.f, 0, 0, 0, 0});
  const auto p = probability_normalize(v);
  CHECK(p.at(0, 0, 0) == Approx(0.25 / 1.75));
  CHECK(p.at(0, 0, 1) == Approx(0.5 / 1.75));
  CHECK(p.at(0, 1, 1) == Approx(1.0 / 1.75));
  CHECK(frame_sum(p, 0) == Approx(1.0).epsilon(1e-6));
  for (float x : p.frame(1)) CHECK(x == 0.25f);

  const auto again = probability_normalize(p);
  CHECK(max_abs_diff(again.data(), p.data()) <= 1e-7);

  const SaliencyVolume neg(1, 1, 2, SaliencyStage::raw, {-0.1f, 1.f});
  CHECK_THROWS_AS(probability_normalize(neg), ValidationError);
}

TEST_CASE("build_saliency yields probability frames") {
  SplitMix64 rng(29);
  const FeatureVolume fv(4, 7, 7, 8, test::random_values(rng, 4 * 49 * 8, -1, 3));
  const auto p = build_saliency(fv, SaliencyConfig{});
  CHECK(p.stage() == SaliencyStage::probability);
  CHECK(p.height() == 56);
  CHECK(p.width() == 56);
  for (std::size_t l = 0; l < p.frames(); ++l) CHECK(frame_sum(p, l) == Approx(1.0).epsilon(1e-5));
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("constant single-channel features give uniform maps") {
  FeatureVolume fv(2, 3, 3, 1);
  std::fill(fv.data().begin(), fv.data().end(), 2.5f);
  const auto p = build_saliency(fv, SaliencyConfig{});
  const float uniform = 1.0f / static_cast<float>(p.frame_size());
  for (float v : p.data()) CHECK(v == Approx(uniform).epsilon(1e-6));
}

TEST_CASE("the probability peak sits on the blob") {
  SynthConfig sc;
  sc.trajectory = Trajectory::stationary;
  sc.grid_w = sc.grid_h = 7;
  sc.start_x = 4;
  sc.start_y = 2;
  sc.frames = 3;
  sc.blob_sigma = 0.8;
  const Scene scene = gen_scene(sc);
  SaliencyConfig cfg;
  const auto p = build_saliency(scene.features, cfg);
  for (std::size_t l = 0; l < p.frames(); ++l) {
    auto f = p.frame(l);
    const auto idx = static_cast<std::size_t>(std::max_element(f.begin(), f.end()) - f.begin());
    const double px = static_cast<double>(idx % p.width()), py = static_cast<double>(idx / p.width());
    // Blob center in upsampled coordinates: (c + 0.5) * k - 0.5.
    const double cx = (sc.initial_x() + 0.5) * cfg.upsample_k - 0.5, cy = (sc.initial_y() + 0.5) * cfg.upsample_k - 0.5;
    CHECK(std::abs(px - cx) <= 1.0);
    CHECK(std::abs(py - cy) <= 1.0);
  }
}

TEST_CASE("saliency config validation") {
  SaliencyConfig c;
  c.upsample_k = 0;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c = {};
  c.sigma_spatial = 0;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c = {};
  c.sigma_temporal = -1;
  CHECK_THROWS_AS(c.validate(), ValidationError);
}
