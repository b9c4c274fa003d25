#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "roispot/roi.hpp"
#include "roispot/types.hpp"

namespace roispot {

enum class Trajectory { stationary, linear, bounce };

/// Scene of one Gaussian blob moving over a feature grid. Positions are cell centers in
/// grid coordinates, so cell (i, j) sits at x = i, y = j. The blob's +-2 sigma box always
/// lies inside the grid: centers stay within [2 sigma - 0.5, dim - 0.5 - 2 sigma].
struct SynthConfig {
  std::uint64_t seed = 0;
  int frames = 20;
  int grid_h = 10;
  int grid_w = 10;
  int channels = 8;
  double blob_sigma = 1.0;
  Trajectory trajectory = Trajectory::bounce;
  std::optional<double> start_x;  // default: lowest admissible x
  std::optional<double> start_y;  // default: vertical center
  double velocity_x = 1.0;
  double velocity_y = 0.0;
  double noise = 0.0;             // amplitude of uniform noise on inactive channels
  double active_fraction = 0.5;   // share of channels carrying the blob

  void validate() const;
  /// Admissible center range along x (vertical = false) or y.
  std::pair<double, double> travel(bool vertical) const;
  double initial_x() const;
  double initial_y() const;
};

/// Continuous rectangle, used for ground-truth boxes and overlap scoring.
struct RectF {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double cx() const { return x + w / 2; }
  double cy() const { return y + h / 2; }
};

struct GroundTruth {
  std::vector<double> center_x;  // blob center per frame, grid coordinates
  std::vector<double> center_y;
  std::vector<RectF> boxes;      // center +- 2 sigma in cell-edge coordinates
  EventSet events;               // one "bounce" event (label 1) per reversal frame
};

struct Scene {
  FeatureVolume features;
  GroundTruth truth;
};

/// Blob position at (possibly fractional) time t.
std::pair<double, double> blob_position(const SynthConfig& config, double t);

Scene gen_scene(const SynthConfig& config, const char* video = "synth");

/// Probability scores that peak at each event: peak * exp(-dt^2 / (2 spread^2)) on the
/// event's class, background takes the rest.
ScoreSequence ideal_scores(const EventSet& events, std::int64_t length, int num_classes, double peak = 0.9,
                           double spread = 1.0);

RectF to_rect(const GridRect& r);
RectF to_rect(const Roi& r);
double rect_iou(const RectF& a, const RectF& b);

// Brute-force references. They are slow and exist only to cross-check the fast paths.

/// Enumerates every admissible size and every position with direct summation.
GridRect oracle_min_rect(const MapView& map, const RectSearch& search);

/// Dense 3-D convolution with the outer-product Gaussian kernel and replicate edges.
SaliencyVolume oracle_conv3d(const SaliencyVolume& volume, double sigma_spatial, double sigma_temporal);

/// Maximum number of detection/ground-truth pairs with equal class and |dt| <= delta.
int oracle_opt_match(std::span<const Event> detections, std::span<const Event> ground_truth, std::int64_t delta);

}  // namespace roispot
