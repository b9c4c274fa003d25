#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "roispot/types.hpp"

namespace roispot {

struct RoiConfig {
  double tau = 0.3;
  int min_w = 112;      // pixels, also the resampled patch width
  int min_h = 112;      // pixels, also the resampled patch height
  double aspect = 1.0;  // width / height
  int scale_step = 1;   // grid cells added to the width per candidate size

  void validate() const;
};

/// Summed-area table over an H x W map, for O(1) rectangle sums.
class SummedAreaTable {
 public:
  SummedAreaTable(std::span<const float> map, std::size_t height, std::size_t width);

  std::size_t height() const noexcept { return height_; }
  std::size_t width() const noexcept { return width_; }

  /// sat[y][x] = sum of map[j][i] for j < y, i < x.
  double at(std::size_t y, std::size_t x) const { return table_[y * (width_ + 1) + x]; }
  double mass(int x, int y, int w, int h) const;
  double total() const { return at(height_, width_); }

 private:
  std::size_t height_, width_;
  std::vector<double> table_;
};

/// Grid-cell view of one probability map.
struct MapView {
  std::span<const float> values;
  int height = 0;
  int width = 0;
};

struct RectSearch {
  double tau = 0.0;
  int min_w = 1;
  int min_h = 1;
  double aspect = 1.0;  // width / height, in grid cells
  int scale_step = 1;
};

/// Round half up, as used for every rectangle coordinate.
int round_half_up(double v);

/// Candidate (w, h) sizes in ascending area: w = min_w + i * scale_step,
/// h = max(min_h, round(w / aspect)), while the size fits the grid.
std::vector<std::pair<int, int>> candidate_sizes(const RectSearch& search, int grid_w, int grid_h);

/// Smallest fixed-aspect rectangle whose mass reaches min(tau, total - 1e-9). Each size is
/// placed at its maximum-mass position, earliest in row-major order on ties. When even the
/// largest size falls short, the largest size is returned centered on the grid.
GridRect min_mass_rect(const MapView& map, const RectSearch& search);

/// Scales a grid rectangle to frame pixels, rounding each coordinate half up, then shifts
/// it back inside the frame if rounding pushed it over an edge.
Roi grid_to_frame(const GridRect& rect, int grid_w, int grid_h, int frame_w, int frame_h, int frame_index = 0);

/// One RoI per frame of a probability-stage saliency volume.
RoiTrack select_rois(const SaliencyVolume& saliency, const RoiConfig& config, const FrameGeometry& geometry,
                     int threads = 1);

/// Interleaved H x W x C image.
struct Image {
  int width = 0;
  int height = 0;
  int channels = 3;
  std::vector<float> data;

  Image() = default;
  Image(int w, int h, int c) : width(w), height(h), channels(c), data(static_cast<std::size_t>(w) * h * c, 0.0f) {}

  float& at(int y, int x, int c) { return data[(static_cast<std::size_t>(y) * width + x) * channels + c]; }
  float at(int y, int x, int c) const { return data[(static_cast<std::size_t>(y) * width + x) * channels + c]; }
};

/// Bilinear resampling of the RoI sub-rectangle to out_w x out_h, with the same
/// half-pixel convention as upsample_bilinear and clamping to the RoI.
Image crop_resize(const Image& frame, const Roi& roi, int out_w, int out_h);

}  // namespace roispot
