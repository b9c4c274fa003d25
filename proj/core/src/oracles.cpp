#include <algorithm>
#include <cmath>
#include <vector>

#include "roispot/error.hpp"
#include "roispot/synth.hpp"

namespace roispot {

namespace {

double direct_mass(const MapView& map, int x0, int y0, int w, int h) {
  double sum = 0.0;
  for (int y = y0; y < y0 + h; ++y) {
    for (int x = x0; x < x0 + w; ++x) sum += map.values[static_cast<std::size_t>(y * map.width + x)];
  }
  return sum;
}

std::vector<double> reference_taps(double sigma) {
  if (sigma == 0.0) return {1.0};
  const int r = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> taps;
  double sum = 0.0;
  for (int i = -r; i <= r; ++i) {
    taps.push_back(std::exp(-(i * i) / (2.0 * sigma * sigma)));
    sum += taps.back();
  }
  for (double& t : taps) t /= sum;
  return taps;
}

}  // namespace

GridRect oracle_min_rect(const MapView& map, const RectSearch& search) {
  if (map.width > 16 || map.height > 16) throw ValidationError("oracle_min_rect is limited to 16x16 maps");
  struct Size {
    int w, h;
  };
  std::vector<Size> sizes;
  for (int w = 1; w <= map.width; ++w) {
    for (int h = 1; h <= map.height; ++h) {
      if (w < search.min_w || (w - search.min_w) % search.scale_step != 0) continue;
      const int want_h = std::max(search.min_h, static_cast<int>(std::floor(w / search.aspect + 0.5)));
      if (h == want_h) sizes.push_back({w, h});
    }
  }
  if (sizes.empty()) throw ValidationError("no admissible rectangle size");
  std::stable_sort(sizes.begin(), sizes.end(), [](Size a, Size b) { return a.w * a.h < b.w * b.h; });

  double total = direct_mass(map, 0, 0, map.width, map.height);
  const double need = std::min(search.tau, total - 1e-9);
  for (const Size& s : sizes) {
    GridRect best{0, 0, s.w, s.h};
    double best_mass = -1.0;
    for (int y = 0; y + s.h <= map.height; ++y) {
      for (int x = 0; x + s.w <= map.width; ++x) {
        const double m = direct_mass(map, x, y, s.w, s.h);
        if (best_mass < 0.0 || m > best_mass + 1e-12) {
          best_mass = m;
          best = {x, y, s.w, s.h};
        }
      }
    }
    if (search.tau == 0.0 || best_mass >= need) return best;
  }
  const Size largest = sizes.back();
  return {(map.width - largest.w) / 2, (map.height - largest.h) / 2, largest.w, largest.h};
}

SaliencyVolume oracle_conv3d(const SaliencyVolume& volume, double sigma_spatial, double sigma_temporal) {
  const auto gs = reference_taps(sigma_spatial);
  const auto gt = reference_taps(sigma_temporal);
  const int rs = static_cast<int>(gs.size() / 2), rt = static_cast<int>(gt.size() / 2);
  const int frames = static_cast<int>(volume.frames());
  const int height = static_cast<int>(volume.height());
  const int width = static_cast<int>(volume.width());

  SaliencyVolume out(volume.frames(), volume.height(), volume.width(), SaliencyStage::smoothed);
  for (int l = 0; l < frames; ++l) {
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        double acc = 0.0;
        for (int dl = -rt; dl <= rt; ++dl) {
          const int sl = std::clamp(l + dl, 0, frames - 1);
          for (int dy = -rs; dy <= rs; ++dy) {
            const int sy = std::clamp(y + dy, 0, height - 1);
            for (int dx = -rs; dx <= rs; ++dx) {
              const int sx = std::clamp(x + dx, 0, width - 1);
              acc += gt[dl + rt] * gs[dy + rs] * gs[dx + rs] * volume.at(sl, sy, sx);
            }
          }
        }
        out.at(l, y, x) = static_cast<float>(acc);
      }
    }
  }
  return out;
}

int oracle_opt_match(std::span<const Event> detections, std::span<const Event> ground_truth, std::int64_t delta) {
  if (ground_truth.size() > 16 || detections.size() > 16) throw ValidationError("oracle_opt_match handles <= 16 events");
  const std::size_t states = std::size_t{1} << ground_truth.size();
  // best[i][mask]: most pairs using detections i.. with ground truth in `mask` already taken.
  std::vector<std::vector<int>> best(detections.size() + 1, std::vector<int>(states, 0));
  for (std::size_t i = detections.size(); i-- > 0;) {
    for (std::size_t mask = 0; mask < states; ++mask) {
      int value = best[i + 1][mask];
      for (std::size_t g = 0; g < ground_truth.size(); ++g) {
        if (mask & (std::size_t{1} << g)) continue;
        if (ground_truth[g].label != detections[i].label) continue;
        if (std::abs(ground_truth[g].frame - detections[i].frame) > delta) continue;
        value = std::max(value, 1 + best[i + 1][mask | (std::size_t{1} << g)]);
      }
      best[i][mask] = value;
    }
  }
  return best[0][0];
}

}  // namespace roispot
