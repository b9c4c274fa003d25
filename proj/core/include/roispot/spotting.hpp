#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "roispot/types.hpp"

namespace roispot {

enum class NmsMode { soft, hard };

struct NmsConfig {
  int window = 2;  // frames on each side
  NmsMode mode = NmsMode::soft;
  double score_floor = 1e-4;

  void validate() const;
};

struct LossConfig {
  double foreground_weight = 5.0;
  double lambda_fused = 1.0 / 3.0;
  double lambda_low = 1.0 / 3.0;
  double lambda_high = 1.0 / 3.0;

  void validate() const;
};

struct Detection {
  int label = 1;
  std::int64_t frame = 0;
  double score = 0.0;

  friend bool operator==(const Detection&, const Detection&) = default;
};

/// Elementwise maximum of two branch feature sequences.
FeatureSequence fuse_max(const FeatureSequence& a, const FeatureSequence& b);

struct ClipScores {
  std::int64_t start = 0;
  ScoreSequence scores;
};

/// Clip start frames for a video of `length` frames with clips of `clip_length` frames and
/// 50% overlap. The last clip is aligned to the end of the video.
std::vector<std::int64_t> overlapping_clip_starts(std::int64_t length, std::int64_t clip_length);

/// Per-frame mean over every clip covering the frame. Rows past `length` are ignored.
/// Clips are accumulated in ascending start order whatever order they are passed in.
ScoreSequence aggregate_clips(std::span<const ClipScores> clips, std::int64_t length);

/// Row-wise softmax of logits.
ScoreSequence softmax(const ScoreSequence& logits);

/// 1-D suppression over one class column. Repeatedly emits the highest remaining frame
/// (earliest on ties); neighbours within the window are decayed by |dt| / (window + 1)
/// in soft mode or dropped in hard mode. Stops once the best remaining score is below
/// the floor.
std::vector<Detection> soft_nms_1d(std::span<const float> scores, const NmsConfig& config, int label = 1);
std::vector<Detection> hard_nms_1d(std::span<const float> scores, const NmsConfig& config, int label = 1);
std::vector<Detection> nms_1d(std::span<const float> scores, const NmsConfig& config, int label = 1);

/// Runs the configured suppression on every non-background column.
EventSet extract_detections(const ScoreSequence& probabilities, const NmsConfig& config, const std::string& video,
                            int threads = 1);

/// Mean over frames of -w_l * ln(p[l][label_l]), with w_l = foreground weight for labels >= 1.
double weighted_cross_entropy(const ScoreSequence& probabilities, std::span<const int> labels,
                              double foreground_weight);

double combined_loss(double fused, double low, double high, const LossConfig& config);

}  // namespace roispot
