#include <doctest.h>

#include <cmath>

#include "roispot/error.hpp"
#include "roispot/roi.hpp"
#include "roispot/saliency.hpp"
#include "roispot/synth.hpp"
#include "test_support.hpp"

using namespace roispot;

namespace {

double direct_sum(const std::vector<float>& map, int width, int x, int y, int w, int h) {
  double s = 0.0;
  for (int j = y; j < y + h; ++j) {
    for (int i = x; i < x + w; ++i) s += map[static_cast<std::size_t>(j * width + i)];
  }
  return s;
}

MapView view(const std::vector<float>& map, int h, int w) { return {map, h, w}; }

}  // namespace

TEST_CASE("summed-area table answers rectangle sums") {
  const std::vector<float> m{1, 2, 3, 4};
  const SummedAreaTable sat(m, 2, 2);
  CHECK(sat.mass(0, 0, 2, 2) == 10.0);
  CHECK(sat.mass(1, 0, 1, 2) == 6.0);
  CHECK(sat.mass(1, 1, 0, 0) == 0.0);
  CHECK(sat.total() == 10.0);
}

TEST_CASE("summed-area table matches direct summation on every sub-rectangle") {
  SplitMix64 rng(31);
  const auto m = test::random_values(rng, 36);
  const SummedAreaTable sat(m, 6, 6);
  int count = 0;
  for (int y = 0; y < 6; ++y)
    for (int x = 0; x < 6; ++x)
      for (int h = 1; y + h <= 6; ++h)
        for (int w = 1; x + w <= 6; ++w) {
          CHECK(std::abs(sat.mass(x, y, w, h) - direct_sum(m, 6, x, y, w, h)) <= 1e-6);
          ++count;
        }
  CHECK(count == 441);
}

TEST_CASE("single-cell mass picks the earliest covering window") {
  std::vector<float> m(16, 0.0f);
  m[1 * 4 + 2] = 1.0f;  // x = 2, y = 1
  const RectSearch search{0.5, 2, 2, 1.0, 1};
  const GridRect r = min_mass_rect(view(m, 4, 4), search);
  CHECK(r == GridRect{1, 0, 2, 2});
  CHECK(oracle_min_rect(view(m, 4, 4), search) == r);

  // tau = 1: smallest admissible square containing the cell.
  CHECK(min_mass_rect(view(m, 4, 4), {1.0, 2, 2, 1.0, 1}) == GridRect{1, 0, 2, 2});
  CHECK(min_mass_rect(view(m, 4, 4), {1.0, 1, 1, 1.0, 1}) == GridRect{2, 1, 1, 1});
}

TEST_CASE("tau = 1 on a uniform map needs the full frame") {
  const std::vector<float> m(16, 1.0f / 16);
  CHECK(min_mass_rect(view(m, 4, 4), {1.0, 2, 2, 1.0, 1}) == GridRect{0, 0, 4, 4});
}

TEST_CASE("tau = 0 gives the minimum window at the max-mass position") {
  SplitMix64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = test::random_probability_map(rng, 9, 9);
    const GridRect r = min_mass_rect(view(m, 9, 9), {0.0, 3, 3, 1.0, 1});
    CHECK(r.w == 3);
    CHECK(r.h == 3);
    double best = -1;
    for (int y = 0; y + 3 <= 9; ++y)
      for (int x = 0; x + 3 <= 9; ++x) best = std::max(best, direct_sum(m, 9, x, y, 3, 3));
    CHECK(direct_sum(m, 9, r.x, r.y, 3, 3) >= best - 1e-9);
  }
}

TEST_CASE("rectangle search agrees with exhaustive enumeration") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    const int h = static_cast<int>(rng.between(2, 12)), w = static_cast<int>(rng.between(2, 12));
    const auto m = test::random_probability_map(rng, h, w, trial % 3 == 0 ? 0.6 : 0.0);
    RectSearch s;
    s.min_w = static_cast<int>(rng.between(1, std::min(w, 4)));
    s.min_h = static_cast<int>(rng.between(1, std::min(h, 4)));
    s.aspect = std::array{0.5, 1.0, 4.0 / 3.0, 2.0}[static_cast<std::size_t>(rng.between(0, 3))];
    s.scale_step = static_cast<int>(rng.between(1, 2));
    if (candidate_sizes(s, w, h).empty()) continue;
    for (double tau : {0.0, 0.3, 0.6, 0.9, 1.0}) {
      s.tau = tau;
      CHECK(min_mass_rect(view(m, h, w), s) == oracle_min_rect(view(m, h, w), s));
    }
  }
}

TEST_CASE("area grows with tau and the mass guarantee holds") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.between(4, 12));
    const auto m = test::random_probability_map(rng, n, n, 0.3);
    const SummedAreaTable sat(m, n, n);
    int last_area = 0;
    for (double tau = 0.0; tau <= 1.0 + 1e-12; tau += 0.05) {
      const GridRect r = min_mass_rect(view(m, n, n), {tau, 2, 2, 1.0, 1});
      CHECK(r.area() >= last_area);
      last_area = r.area();
      // Square maps with aspect 1 always admit the full grid, so there is no fallback.
      CHECK(sat.mass(r.x, r.y, r.w, r.h) >= std::min(tau, sat.total() - 1e-9));
    }
  }
}

TEST_CASE("min rect falls back to the centered largest size when the aspect cannot reach tau") {
  // 2 wide x 6 tall map; aspect 1 caps candidates at 2x2, which holds at most 2/6 of the mass.
  const std::vector<float> m(12, 1.0f / 12);
  const GridRect r = min_mass_rect(view(m, 6, 2), {0.9, 1, 1, 1.0, 1});
  CHECK(r == GridRect{0, 2, 2, 2});
  CHECK(oracle_min_rect(view(m, 6, 2), {0.9, 1, 1, 1.0, 1}) == r);
}

TEST_CASE("min rect rejects a minimum larger than the grid") {
  const std::vector<float> m(4, 0.25f);
  CHECK_THROWS_AS(min_mass_rect(view(m, 2, 2), {0.5, 3, 1, 1.0, 1}), ValidationError);
}

TEST_CASE("grid_to_frame scales and clamps") {
  CHECK(grid_to_frame({7, 7, 14, 14}, 56, 56, 448, 448) == Roi{0, 56, 56, 112, 112});
  CHECK(grid_to_frame({42, 42, 14, 14}, 56, 56, 448, 448) == Roi{0, 336, 336, 112, 112});

  // 796 / 56 = 14.2142857...: 10 * 14.214 = 142.14 -> 142, 14 * 14.214 = 199, 20 * 8 = 160.
  CHECK(grid_to_frame({10, 20, 14, 14}, 56, 56, 796, 448) == Roi{0, 142, 160, 199, 112});
  // 7 * 14.214 = 99.5 rounds half up to 100.
  CHECK(grid_to_frame({7, 0, 14, 14}, 56, 56, 796, 448).x == 100);
  // 43 * 14.214 = 611.21 -> 611, 13 * 14.214 = 184.79 -> 185: 611 + 185 = 796 stays flush.
  const Roi edge = grid_to_frame({43, 43, 13, 13}, 56, 56, 796, 448);
  CHECK(edge.x + edge.w <= 796);
  CHECK(edge.y + edge.h <= 448);

  // Rounding overshoot is shifted back, not shrunk: 3 cells of 10/3 px.
  const Roi shifted = grid_to_frame({1, 0, 2, 1}, 3, 1, 10, 1);
  CHECK(shifted.w == 7);
  CHECK(shifted.x == 3);

  CHECK_THROWS_AS(grid_to_frame({50, 0, 14, 14}, 56, 56, 448, 448), ValidationError);
}

TEST_CASE("select_rois gives one in-frame RoI per frame with the minimum size") {
  SplitMix64 rng(47);
  const SaliencyVolume raw(6, 7, 7, SaliencyStage::raw, test::random_values(rng, 6 * 49));
  SaliencyConfig sc;
  const auto p = probability_normalize(
      gaussian_smooth_st(upsample_bilinear(minmax_normalize(raw), sc.upsample_k), sc.sigma_spatial, sc.sigma_temporal));
  for (const FrameGeometry geom : {FrameGeometry{448, 448, 224, 224}, FrameGeometry{796, 448, 398, 224}}) {
    for (double tau : {0.0, 0.3, 0.7, 1.0}) {
      RoiConfig rc;
      rc.tau = tau;
      const RoiTrack track = select_rois(p, rc, geom);
      REQUIRE(track.rois.size() == 6);
      for (std::size_t l = 0; l < track.rois.size(); ++l) {
        const Roi& r = track.rois[l];
        CHECK(r.frame == static_cast<int>(l));
        CHECK(r.w >= rc.min_w);
        CHECK(r.h >= rc.min_h);
        CHECK(r.x >= 0);
        CHECK(r.y >= 0);
        CHECK(r.x + r.w <= geom.high_w);
        CHECK(r.y + r.h <= geom.high_h);
        // Aspect holds to within one grid cell of rounding in each direction.
        const double cell_w = double(geom.high_w) / p.width(), cell_h = double(geom.high_h) / p.height();
        CHECK(std::abs(r.w / rc.aspect - r.h) <= cell_h + cell_w / rc.aspect + 1.0);
      }
    }
  }
}

TEST_CASE("select_rois: stationary blob gives a constant track, tau = 1 gives full frames") {
  SynthConfig sc;
  sc.trajectory = Trajectory::stationary;
  sc.grid_w = sc.grid_h = 7;
  sc.start_x = 2;
  sc.start_y = 4;
  sc.frames = 5;
  const auto p = build_saliency(gen_scene(sc).features, SaliencyConfig{});
  const RoiTrack track = select_rois(p, RoiConfig{}, FrameGeometry{});
  for (const Roi& r : track.rois) {
    CHECK(r.x == track.rois[0].x);
    CHECK(r.y == track.rois[0].y);
    CHECK(r.w == track.rois[0].w);
  }

  RoiConfig full;
  full.tau = 1.0;
  for (const Roi& r : select_rois(p, full, FrameGeometry{}).rois) CHECK(r == Roi{r.frame, 0, 0, 448, 448});
}

TEST_CASE("select_rois follows a moving blob smoothly") {
  SynthConfig sc;
  sc.trajectory = Trajectory::linear;
  sc.grid_w = sc.grid_h = 10;
  sc.start_x = 1.5;
  sc.start_y = 5;
  sc.velocity_x = 1;
  sc.frames = 7;
  sc.blob_sigma = 1.0;
  SaliencyConfig cfg;
  const auto p = build_saliency(gen_scene(sc).features, cfg);
  RoiConfig rc;
  rc.min_w = rc.min_h = 64;
  rc.tau = 0.3;
  const FrameGeometry geom{640, 640, 320, 320};
  const RoiTrack track = select_rois(p, rc, geom);
  const double px_per_cell = double(geom.high_w) / p.width();
  for (std::size_t l = 1; l < track.rois.size(); ++l) {
    const auto& a = track.rois[l - 1];
    const auto& b = track.rois[l];
    const double dx = (b.x + b.w / 2.0) - (a.x + a.w / 2.0);
    const double dy = (b.y + b.h / 2.0) - (a.y + a.h / 2.0);
    // One feature cell per frame is k upsampled cells; the bound allows 2 more for rounding.
    CHECK(std::hypot(dx, dy) / px_per_cell <= cfg.upsample_k + 2.0);
  }
}

TEST_CASE("select_rois is independent of thread count") {
  SplitMix64 rng(53);
  const FeatureVolume fv(9, 7, 7, 4, test::random_values(rng, 9 * 49 * 4));
  const auto p = build_saliency(fv, SaliencyConfig{}, 4);
  CHECK(p == build_saliency(fv, SaliencyConfig{}, 1));
  CHECK(select_rois(p, RoiConfig{}, FrameGeometry{}, 1) == select_rois(p, RoiConfig{}, FrameGeometry{}, 8));
}

TEST_CASE("crop_resize at native size copies the sub-rectangle") {
  SplitMix64 rng(59);
  Image frame(10, 8, 3);
  frame.data = test::random_values(rng, frame.data.size());
  const Roi roi{0, 3, 2, 4, 5};
  const Image patch = crop_resize(frame, roi, 4, 5);
  for (int y = 0; y < 5; ++y)
    for (int x = 0; x < 4; ++x)
      for (int c = 0; c < 3; ++c) CHECK(patch.at(y, x, c) == frame.at(y + 2, x + 3, c));
}

TEST_CASE("crop_resize keeps constant frames constant") {
  Image frame(12, 9, 3);
  for (int y = 0; y < 9; ++y)
    for (int x = 0; x < 12; ++x)
      for (int c = 0; c < 3; ++c) frame.at(y, x, c) = 0.1f * (c + 1);
  const Image patch = crop_resize(frame, {0, 1, 1, 7, 5}, 16, 16);
  for (int y = 0; y < 16; ++y)
    for (int x = 0; x < 16; ++x)
      for (int c = 0; c < 3; ++c) CHECK(patch.at(y, x, c) == doctest::Approx(0.1 * (c + 1)));
}

TEST_CASE("crop_resize upscales a checkerboard by the bilinear formula") {
  Image frame(3, 3, 1);
  frame.at(1, 1, 0) = 1.0f;  // roi covers [[1, 0], [0, 1]] at (1, 1)
  frame.at(2, 2, 0) = 1.0f;
  const Image p = crop_resize(frame, {0, 1, 1, 2, 2}, 4, 4);
  // Taps per axis: 0 -> row 0, 1 -> 0.75/0.25, 2 -> 0.25/0.75, 3 -> row 1.
  const float want[4][4] = {{1.f, 0.75f, 0.25f, 0.f},
                            {0.75f, 0.625f, 0.375f, 0.25f},
                            {0.25f, 0.375f, 0.625f, 0.75f},
                            {0.f, 0.25f, 0.75f, 1.f}};
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x) CHECK(p.at(y, x, 0) == doctest::Approx(want[y][x]).epsilon(1e-7));

  CHECK_THROWS_AS(crop_resize(frame, {0, 2, 2, 2, 2}, 4, 4), ValidationError);
}

TEST_CASE("RoI config validation") {
  RoiConfig c;
  c.tau = 1.5;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c = {};
  c.min_w = 0;
  CHECK_THROWS_AS(c.validate(), ValidationError);
}
