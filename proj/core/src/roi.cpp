#include "roispot/roi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "roispot/error.hpp"
#include "roispot/parallel.hpp"

namespace roispot {

namespace {

// Window masses closer than this are treated as equal so the earliest position wins.
constexpr double kTieTolerance = 1e-12;
constexpr double kMassSlack = 1e-9;

std::int64_t round_half_up_ratio(std::int64_t num, std::int64_t den) { return (2 * num + den) / (2 * den); }

std::int64_t ceil_ratio(std::int64_t num, std::int64_t den) { return (num + den - 1) / den; }

}  // namespace

void RoiConfig::validate() const {
  if (!(tau >= 0.0 && tau <= 1.0)) throw ValidationError("tau must lie in [0, 1]");
  if (min_w < 1 || min_h < 1) throw ValidationError("minimum RoI size must be >= 1");
  if (!(aspect > 0.0) || !std::isfinite(aspect)) throw ValidationError("aspect ratio must be > 0");
  if (scale_step < 1) throw ValidationError("scale step must be >= 1");
}

SummedAreaTable::SummedAreaTable(std::span<const float> map, std::size_t height, std::size_t width)
    : height_(height), width_(width), table_((height + 1) * (width + 1), 0.0) {
  if (map.size() != height * width) throw ValidationError("map size does not match its dims");
  for (std::size_t y = 0; y < height; ++y) {
    double row = 0.0;
    for (std::size_t x = 0; x < width; ++x) {
      row += map[y * width + x];
      table_[(y + 1) * (width + 1) + x + 1] = table_[y * (width + 1) + x + 1] + row;
    }
  }
}

double SummedAreaTable::mass(int x, int y, int w, int h) const {
  if (w <= 0 || h <= 0) return 0.0;
  const auto x0 = static_cast<std::size_t>(x), y0 = static_cast<std::size_t>(y);
  const auto x1 = x0 + static_cast<std::size_t>(w), y1 = y0 + static_cast<std::size_t>(h);
  return at(y1, x1) - at(y0, x1) - at(y1, x0) + at(y0, x0);
}

int round_half_up(double v) { return static_cast<int>(std::floor(v + 0.5)); }

std::vector<std::pair<int, int>> candidate_sizes(const RectSearch& search, int grid_w, int grid_h) {
  std::vector<std::pair<int, int>> sizes;
  for (int w = search.min_w; w <= grid_w; w += search.scale_step) {
    const int h = std::max(search.min_h, round_half_up(w / search.aspect));
    if (h > grid_h) break;
    sizes.emplace_back(w, h);
  }
  return sizes;
}

GridRect min_mass_rect(const MapView& map, const RectSearch& search) {
  if (map.width < 1 || map.height < 1) throw ValidationError("empty saliency map");
  if (search.min_w < 1 || search.min_h < 1 || search.scale_step < 1 || !(search.aspect > 0.0)) {
    throw ValidationError("invalid rectangle search parameters");
  }
  if (search.min_w > map.width || search.min_h > map.height) {
    throw ValidationError("minimum rectangle " + std::to_string(search.min_w) + "x" + std::to_string(search.min_h) +
                          " exceeds grid " + std::to_string(map.width) + "x" + std::to_string(map.height));
  }
  const auto sizes = candidate_sizes(search, map.width, map.height);
  if (sizes.empty()) throw ValidationError("no fixed-aspect rectangle of the minimum size fits the grid");

  const SummedAreaTable sat(map.values, static_cast<std::size_t>(map.height), static_cast<std::size_t>(map.width));
  const double threshold = std::min(search.tau, sat.total() - kMassSlack);

  for (const auto& [w, h] : sizes) {
    GridRect best{0, 0, w, h};
    double best_mass = sat.mass(0, 0, w, h);
    for (int y = 0; y + h <= map.height; ++y) {
      for (int x = 0; x + w <= map.width; ++x) {
        const double m = sat.mass(x, y, w, h);
        if (m > best_mass + kTieTolerance) {
          best_mass = m;
          best.x = x;
          best.y = y;
        }
      }
    }
    if (search.tau <= 0.0 || best_mass >= threshold) return best;
  }
  const auto [w, h] = sizes.back();
  return {(map.width - w) / 2, (map.height - h) / 2, w, h};
}

Roi grid_to_frame(const GridRect& rect, int grid_w, int grid_h, int frame_w, int frame_h, int frame_index) {
  if (rect.x < 0 || rect.y < 0 || rect.w < 1 || rect.h < 1 || rect.x + rect.w > grid_w || rect.y + rect.h > grid_h) {
    throw ValidationError("grid rectangle lies outside its grid");
  }
  Roi roi;
  roi.frame = frame_index;
  roi.x = static_cast<int>(round_half_up_ratio(std::int64_t{rect.x} * frame_w, grid_w));
  roi.y = static_cast<int>(round_half_up_ratio(std::int64_t{rect.y} * frame_h, grid_h));
  roi.w = std::min(frame_w, static_cast<int>(round_half_up_ratio(std::int64_t{rect.w} * frame_w, grid_w)));
  roi.h = std::min(frame_h, static_cast<int>(round_half_up_ratio(std::int64_t{rect.h} * frame_h, grid_h)));
  roi.x = std::clamp(roi.x, 0, frame_w - roi.w);
  roi.y = std::clamp(roi.y, 0, frame_h - roi.h);
  return roi;
}

RoiTrack select_rois(const SaliencyVolume& saliency, const RoiConfig& config, const FrameGeometry& geometry,
                     int threads) {
  config.validate();
  geometry.validate();
  if (saliency.stage() != SaliencyStage::probability) throw ValidationError("RoI selection needs probability saliency");
  if (config.min_w > geometry.high_w || config.min_h > geometry.high_h) {
    throw ValidationError("minimum RoI size exceeds the high-resolution frame");
  }
  const int grid_w = static_cast<int>(saliency.width());
  const int grid_h = static_cast<int>(saliency.height());

  // Smallest grid extent whose scaled pixel extent still reaches the minimum RoI size.
  RectSearch search;
  search.tau = config.tau;
  search.min_w = std::clamp(static_cast<int>(ceil_ratio(std::int64_t{config.min_w} * grid_w, geometry.high_w)), 1, grid_w);
  search.min_h = std::clamp(static_cast<int>(ceil_ratio(std::int64_t{config.min_h} * grid_h, geometry.high_h)), 1, grid_h);
  const double scale_x = static_cast<double>(geometry.high_w) / grid_w;
  const double scale_y = static_cast<double>(geometry.high_h) / grid_h;
  search.aspect = config.aspect * scale_y / scale_x;
  search.scale_step = config.scale_step;

  RoiTrack track;
  track.geometry = geometry;
  track.rois.resize(saliency.frames());
  parallel_for(saliency.frames(), threads, [&](std::size_t l) {
    const MapView view{saliency.frame(l), grid_h, grid_w};
    const GridRect rect = min_mass_rect(view, search);
    track.rois[l] = grid_to_frame(rect, grid_w, grid_h, geometry.high_w, geometry.high_h, static_cast<int>(l));
  });
  return track;
}

Image crop_resize(const Image& frame, const Roi& roi, int out_w, int out_h) {
  if (out_w < 1 || out_h < 1) throw ValidationError("output patch size must be positive");
  if (roi.x < 0 || roi.y < 0 || roi.w < 1 || roi.h < 1 || roi.x + roi.w > frame.width ||
      roi.y + roi.h > frame.height) {
    throw ValidationError("RoI out of frame bounds");
  }
  struct Tap {
    int lo, hi;
    double frac;
  };
  auto taps = [](int origin, int extent, int out) {
    std::vector<Tap> t(static_cast<std::size_t>(out));
    const double scale = static_cast<double>(extent) / out;
    for (int u = 0; u < out; ++u) {
      const double s = std::clamp((u + 0.5) * scale - 0.5, 0.0, static_cast<double>(extent - 1));
      const int lo = static_cast<int>(std::floor(s));
      t[u] = {origin + lo, origin + std::min(lo + 1, extent - 1), s - lo};
    }
    return t;
  };
  const auto xs = taps(roi.x, roi.w, out_w);
  const auto ys = taps(roi.y, roi.h, out_h);

  Image out(out_w, out_h, frame.channels);
  for (int v = 0; v < out_h; ++v) {
    const Tap& ty = ys[v];
    for (int u = 0; u < out_w; ++u) {
      const Tap& tx = xs[u];
      for (int c = 0; c < frame.channels; ++c) {
        const double top = (1.0 - tx.frac) * frame.at(ty.lo, tx.lo, c) + tx.frac * frame.at(ty.lo, tx.hi, c);
        const double bottom = (1.0 - tx.frac) * frame.at(ty.hi, tx.lo, c) + tx.frac * frame.at(ty.hi, tx.hi, c);
        out.at(v, u, c) = static_cast<float>((1.0 - ty.frac) * top + ty.frac * bottom);
      }
    }
  }
  return out;
}

}  // namespace roispot
