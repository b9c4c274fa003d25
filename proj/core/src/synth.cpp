#include "roispot/synth.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "roispot/error.hpp"
#include "roispot/random.hpp"

namespace roispot {

namespace {

// Reflects an unbounded coordinate into [0, extent].
double reflect(double p, double extent) {
  if (extent <= 0.0) return 0.0;
  const double period = 2.0 * extent;
  double q = std::fmod(p, period);
  if (q < 0.0) q += period;
  return q <= extent ? q : period - q;
}

// Frames at which a bouncing coordinate turns around, for t in (0, frames - 1].
void reversal_frames(double start, double velocity, double extent, int frames, std::set<std::int64_t>& out) {
  if (velocity == 0.0 || extent <= 0.0) return;
  const double horizon = frames - 1;
  const double reach = start + velocity * horizon;
  const auto k_lo = static_cast<std::int64_t>(std::floor(std::min(start, reach) / extent)) - 1;
  const auto k_hi = static_cast<std::int64_t>(std::ceil(std::max(start, reach) / extent)) + 1;
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    const double t = (static_cast<double>(k) * extent - start) / velocity;
    if (t <= 0.0) continue;
    const auto frame = static_cast<std::int64_t>(std::floor(t + 0.5));
    if (frame <= frames - 1) out.insert(frame);
  }
}

}  // namespace

std::pair<double, double> SynthConfig::travel(bool vertical) const {
  const double dim = vertical ? grid_h : grid_w;
  return {2.0 * blob_sigma - 0.5, dim - 0.5 - 2.0 * blob_sigma};
}

double SynthConfig::initial_x() const { return start_x.value_or(travel(false).first); }

double SynthConfig::initial_y() const {
  if (start_y) return *start_y;
  const auto [lo, hi] = travel(true);
  return (lo + hi) / 2.0;
}

void SynthConfig::validate() const {
  constexpr double slack = 1e-9;
  if (frames < 1) throw ValidationError("scene needs at least one frame");
  if (grid_h < 1 || grid_w < 1 || channels < 1) throw ValidationError("scene dims must be >= 1");
  if (!(blob_sigma > 0.0)) throw ValidationError("blob sigma must be > 0");
  if (!(noise >= 0.0)) throw ValidationError("noise amplitude must be >= 0");
  if (!(active_fraction > 0.0 && active_fraction <= 1.0)) throw ValidationError("active fraction must be in (0, 1]");
  const auto [x_lo, x_hi] = travel(false);
  const auto [y_lo, y_hi] = travel(true);
  if (x_hi < x_lo || y_hi < y_lo) throw ValidationError("grid is smaller than the blob's 4 sigma box");
  const auto inside = [&](double x, double y) {
    return x >= x_lo - slack && x <= x_hi + slack && y >= y_lo - slack && y <= y_hi + slack;
  };
  if (!inside(initial_x(), initial_y())) throw ValidationError("blob start leaves no room for the blob");
  if (trajectory == Trajectory::linear &&
      !inside(initial_x() + velocity_x * (frames - 1), initial_y() + velocity_y * (frames - 1))) {
    throw ValidationError("linear trajectory leaves the grid");
  }
}

std::pair<double, double> blob_position(const SynthConfig& config, double t) {
  const double sx = config.initial_x(), sy = config.initial_y();
  switch (config.trajectory) {
    case Trajectory::stationary: return {sx, sy};
    case Trajectory::linear: return {sx + config.velocity_x * t, sy + config.velocity_y * t};
    case Trajectory::bounce: {
      const auto [x_lo, x_hi] = config.travel(false);
      const auto [y_lo, y_hi] = config.travel(true);
      return {x_lo + reflect(sx - x_lo + config.velocity_x * t, x_hi - x_lo),
              y_lo + reflect(sy - y_lo + config.velocity_y * t, y_hi - y_lo)};
    }
  }
  return {sx, sy};
}

Scene gen_scene(const SynthConfig& config, const char* video) {
  config.validate();
  const auto frames = static_cast<std::size_t>(config.frames);
  const auto height = static_cast<std::size_t>(config.grid_h);
  const auto width = static_cast<std::size_t>(config.grid_w);
  const auto channels = static_cast<std::size_t>(config.channels);
  const auto active = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::floor(config.active_fraction * config.channels + 0.5)), 1, channels);

  Scene scene{FeatureVolume(frames, height, width, channels), {}};
  GroundTruth& truth = scene.truth;
  SplitMix64 rng(config.seed);
  const double two_var = 2.0 * config.blob_sigma * config.blob_sigma;
  const double half = 2.0 * config.blob_sigma;

  for (std::size_t l = 0; l < frames; ++l) {
    const auto [cx, cy] = blob_position(config, static_cast<double>(l));
    truth.center_x.push_back(cx);
    truth.center_y.push_back(cy);
    const double x0 = std::max(0.0, cx + 0.5 - half), x1 = std::min<double>(config.grid_w, cx + 0.5 + half);
    const double y0 = std::max(0.0, cy + 0.5 - half), y1 = std::min<double>(config.grid_h, cy + 0.5 + half);
    truth.boxes.push_back({x0, y0, x1 - x0, y1 - y0});

    for (std::size_t y = 0; y < height; ++y) {
      for (std::size_t x = 0; x < width; ++x) {
        const double dx = static_cast<double>(x) - cx, dy = static_cast<double>(y) - cy;
        const auto bump = static_cast<float>(std::exp(-(dx * dx + dy * dy) / two_var));
        for (std::size_t c = 0; c < channels; ++c) {
          scene.features.at(l, y, x, c) = c < active ? bump : static_cast<float>(config.noise * rng.uniform());
        }
      }
    }
  }

  truth.events.video = video;
  if (config.trajectory == Trajectory::bounce) {
    std::set<std::int64_t> frames_set;
    const auto [x_lo, x_hi] = config.travel(false);
    const auto [y_lo, y_hi] = config.travel(true);
    reversal_frames(config.initial_x() - x_lo, config.velocity_x, x_hi - x_lo, config.frames, frames_set);
    reversal_frames(config.initial_y() - y_lo, config.velocity_y, y_hi - y_lo, config.frames, frames_set);
    for (std::int64_t f : frames_set) truth.events.events.push_back({1, f, std::nullopt});
  }
  return scene;
}

ScoreSequence ideal_scores(const EventSet& events, std::int64_t length, int num_classes, double peak, double spread) {
  if (length < 1 || num_classes < 1) throw ValidationError("ideal scores need a positive length and class count");
  if (!(peak > 0.0 && peak <= 1.0) || !(spread > 0.0)) throw ValidationError("invalid peak or spread");
  const auto columns = static_cast<std::size_t>(num_classes) + 1;
  std::vector<double> fg(static_cast<std::size_t>(length) * columns, 0.0);
  for (const Event& e : events.events) {
    if (e.label < 1 || e.label > num_classes) throw ValidationError("event class out of range");
    for (std::int64_t t = 0; t < length; ++t) {
      const double dt = static_cast<double>(t - e.frame);
      double& cell = fg[static_cast<std::size_t>(t) * columns + static_cast<std::size_t>(e.label)];
      cell = std::max(cell, peak * std::exp(-dt * dt / (2.0 * spread * spread)));
    }
  }
  std::vector<float> data(fg.size());
  for (std::size_t t = 0; t < static_cast<std::size_t>(length); ++t) {
    double sum = 0.0;
    for (std::size_t c = 1; c < columns; ++c) sum += fg[t * columns + c];
    const double scale = sum > 1.0 ? 1.0 / sum : 1.0;
    double used = 0.0;
    for (std::size_t c = 1; c < columns; ++c) {
      data[t * columns + c] = static_cast<float>(fg[t * columns + c] * scale);
      used += data[t * columns + c];
    }
    data[t * columns] = static_cast<float>(std::max(0.0, 1.0 - used));
  }
  return ScoreSequence(static_cast<std::size_t>(length), columns, std::move(data), true);
}

RectF to_rect(const GridRect& r) { return {double(r.x), double(r.y), double(r.w), double(r.h)}; }

RectF to_rect(const Roi& r) { return {double(r.x), double(r.y), double(r.w), double(r.h)}; }

double rect_iou(const RectF& a, const RectF& b) {
  const double ix = std::max(0.0, std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x));
  const double iy = std::max(0.0, std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y));
  const double inter = ix * iy;
  const double uni = a.w * a.h + b.w * b.h - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

}  // namespace roispot
