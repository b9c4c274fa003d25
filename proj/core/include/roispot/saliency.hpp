#pragma once

#include <vector>

#include "roispot/types.hpp"

namespace roispot {

struct SaliencyConfig {
  int upsample_k = 8;
  double sigma_spatial = 2.0;   // upsampled grid cells
  double sigma_temporal = 1.5;  // frames; 0 disables the temporal pass
  double epsilon = 1e-9;        // min-max range below this marks a frame as constant

  void validate() const;
};

/// Mean over channels: one raw map per frame.
SaliencyVolume channel_average(const FeatureVolume& features);

/// Per-frame (v - min) / (max - min). Frames whose range is below epsilon carry no
/// information and come out as all zeros.
SaliencyVolume minmax_normalize(const SaliencyVolume& raw, double epsilon = 1e-9);

/// Bilinear upsampling by an integer factor with half-pixel centers: output cell u
/// samples source coordinate (u + 0.5) / k - 0.5, clamped to the grid.
SaliencyVolume upsample_bilinear(const SaliencyVolume& saliency, int k);

/// Normalized, truncated Gaussian taps for offsets -r..r with r = ceil(3 sigma).
/// sigma == 0 yields the single tap {1}.
std::vector<double> gaussian_kernel(double sigma);

/// Separable Gaussian smoothing along x, then y (sigma_spatial), then frames
/// (sigma_temporal) with edge replication on every axis.
SaliencyVolume gaussian_smooth_st(const SaliencyVolume& saliency, double sigma_spatial, double sigma_temporal,
                                  int threads = 1);

/// Scales every frame to sum 1. All-zero frames become uniform.
SaliencyVolume probability_normalize(const SaliencyVolume& saliency);

/// channel_average -> minmax_normalize -> upsample_bilinear -> gaussian_smooth_st -> probability_normalize
SaliencyVolume build_saliency(const FeatureVolume& features, const SaliencyConfig& config, int threads = 1);

}  // namespace roispot
