#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "roispot/types.hpp"

namespace roispot {

enum class ToleranceUnit { frames, seconds };

struct EvalConfig {
  std::vector<double> tolerances{0, 1, 2};
  ToleranceUnit unit = ToleranceUnit::frames;
  double fps = 25.0;

  void validate() const;
  /// Tolerance i in frames; seconds are rounded at the configured fps.
  std::int64_t tolerance_frames(std::size_t i) const;
};

struct ClassCounts {
  int true_positives = 0;
  int false_positives = 0;
  int ground_truth = 0;

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

struct ApReport {
  double delta = 0.0;             // as configured
  std::int64_t delta_frames = 0;  // as applied
  std::map<int, double> per_class_ap;  // only classes with ground truth
  std::map<int, ClassCounts> counts;
  double mean_ap = 0.0;
};

/// Outcome of greedy matching for one video. `order[i]` indexes the input detections
/// in processing order and `true_positive[i]` is its flag.
struct MatchResult {
  std::vector<std::size_t> order;
  std::vector<bool> true_positive;
};

/// Greedy matching within one video: detections in descending score (earlier frame on
/// ties) each claim the nearest unmatched ground-truth event of the same class within
/// delta frames (earlier event on ties).
MatchResult match_detections(std::span<const Event> detections, std::span<const Event> ground_truth,
                             std::int64_t delta);

/// All-point interpolated AP of a ranked list of TP/FP flags against `ground_truth`
/// events. Returns 0 when there is no ground truth.
double average_precision(const std::vector<bool>& ranked_flags, int ground_truth);

/// One report per tolerance. Detections are pooled per class across videos. Throws
/// MismatchError when a detection video has no ground-truth entry.
std::vector<ApReport> evaluate(std::span<const EventSet> detections, std::span<const EventSet> ground_truth,
                               const EvalConfig& config, int threads = 1);

/// Pixel-proportional compute model: sum of W_i * H_i over the reference W * H.
double cost_ratio(std::span<const std::pair<int, int>> resolutions, std::pair<int, int> reference);

}  // namespace roispot
