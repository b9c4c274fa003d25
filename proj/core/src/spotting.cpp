#include "roispot/spotting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "roispot/error.hpp"
#include "roispot/parallel.hpp"

namespace roispot {

namespace {

constexpr double kLogFloor = 1e-12;

struct Candidate {
  double score;
  std::int64_t frame;
  std::uint32_t version;
};

// Max-heap order: higher score first, then earlier frame.
struct CandidateLess {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.score != b.score) return a.score < b.score;
    return a.frame > b.frame;
  }
};

std::vector<Detection> suppress(std::span<const float> scores, const NmsConfig& config, int label) {
  config.validate();
  const auto n = static_cast<std::int64_t>(scores.size());
  std::vector<double> current(scores.begin(), scores.end());
  std::vector<std::uint32_t> version(scores.size(), 0);
  std::vector<bool> consumed(scores.size(), false);

  std::priority_queue<Candidate, std::vector<Candidate>, CandidateLess> heap;
  for (std::int64_t t = 0; t < n; ++t) heap.push({current[t], t, 0});

  std::vector<Detection> out;
  while (!heap.empty()) {
    const Candidate top = heap.top();
    heap.pop();
    if (consumed[top.frame] || top.version != version[top.frame]) continue;
    if (top.score < config.score_floor) break;
    out.push_back({label, top.frame, top.score});
    consumed[top.frame] = true;

    const std::int64_t lo = std::max<std::int64_t>(0, top.frame - config.window);
    const std::int64_t hi = std::min<std::int64_t>(n - 1, top.frame + config.window);
    for (std::int64_t t = lo; t <= hi; ++t) {
      if (consumed[t]) continue;
      if (config.mode == NmsMode::hard) {
        consumed[t] = true;
        continue;
      }
      const double factor = static_cast<double>(std::abs(t - top.frame)) / (config.window + 1);
      current[t] *= factor;
      heap.push({current[t], t, ++version[t]});
    }
  }
  return out;
}

}  // namespace

void NmsConfig::validate() const {
  if (window < 0) throw ValidationError("NMS window must be >= 0");
  if (!(score_floor >= 0.0)) throw ValidationError("score floor must be >= 0");
}

void LossConfig::validate() const {
  if (!(foreground_weight > 0.0)) throw ValidationError("foreground weight must be > 0");
  if (!(lambda_fused >= 0.0 && lambda_low >= 0.0 && lambda_high >= 0.0)) {
    throw ValidationError("loss coefficients must be >= 0");
  }
}

FeatureSequence fuse_max(const FeatureSequence& a, const FeatureSequence& b) {
  if (a.frames() != b.frames() || a.channels() != b.channels()) {
    throw ValidationError("fuse_max needs sequences of identical shape");
  }
  FeatureSequence out(a.frames(), a.channels());
  std::transform(a.data().begin(), a.data().end(), b.data().begin(), out.data().begin(),
                 [](float x, float y) { return std::max(x, y); });
  return out;
}

std::vector<std::int64_t> overlapping_clip_starts(std::int64_t length, std::int64_t clip_length) {
  if (length < 1 || clip_length < 1) throw ValidationError("lengths must be positive");
  if (clip_length >= length) return {0};
  const std::int64_t stride = std::max<std::int64_t>(1, clip_length / 2);
  std::vector<std::int64_t> starts;
  for (std::int64_t s = 0; s + clip_length < length; s += stride) starts.push_back(s);
  starts.push_back(length - clip_length);
  return starts;
}

ScoreSequence aggregate_clips(std::span<const ClipScores> clips, std::int64_t length) {
  if (clips.empty() || length < 1) throw ValidationError("aggregation needs at least one clip and frame");
  const std::size_t columns = clips.front().scores.columns();
  std::vector<const ClipScores*> ordered;
  for (const auto& c : clips) {
    if (c.scores.columns() != columns) throw ValidationError("clips disagree on class count");
    if (c.start < 0) throw ValidationError("clip start must be >= 0");
    ordered.push_back(&c);
  }
  std::stable_sort(ordered.begin(), ordered.end(), [](const ClipScores* a, const ClipScores* b) {
    if (a->start != b->start) return a->start < b->start;
    return std::lexicographical_compare(a->scores.data().begin(), a->scores.data().end(), b->scores.data().begin(),
                                        b->scores.data().end());
  });

  const auto frames = static_cast<std::size_t>(length);
  std::vector<double> sum(frames * columns, 0.0);
  std::vector<int> count(frames, 0);
  for (const ClipScores* clip : ordered) {
    for (std::size_t r = 0; r < clip->scores.length(); ++r) {
      const auto t = static_cast<std::size_t>(clip->start) + r;
      if (t >= frames) break;
      ++count[t];
      for (std::size_t c = 0; c < columns; ++c) sum[t * columns + c] += clip->scores.at(r, c);
    }
  }

  bool probabilities = std::all_of(clips.begin(), clips.end(), [](const auto& c) { return c.scores.probabilities(); });
  ScoreSequence out(frames, columns);
  for (std::size_t t = 0; t < frames; ++t) {
    if (count[t] == 0) throw ValidationError("frame " + std::to_string(t) + " is not covered by any clip");
    for (std::size_t c = 0; c < columns; ++c) out.at(t, c) = static_cast<float>(sum[t * columns + c] / count[t]);
  }
  if (probabilities) out = ScoreSequence(frames, columns, {out.data().begin(), out.data().end()}, true);
  return out;
}

ScoreSequence softmax(const ScoreSequence& logits) {
  std::vector<float> data(logits.data().size());
  const std::size_t cols = logits.columns();
  for (std::size_t t = 0; t < logits.length(); ++t) {
    auto row = logits.row(t);
    const double peak = *std::max_element(row.begin(), row.end());
    double z = 0.0;
    for (float v : row) z += std::exp(v - peak);
    for (std::size_t c = 0; c < cols; ++c) data[t * cols + c] = static_cast<float>(std::exp(row[c] - peak) / z);
  }
  return ScoreSequence(logits.length(), cols, std::move(data), false);
}

std::vector<Detection> soft_nms_1d(std::span<const float> scores, const NmsConfig& config, int label) {
  NmsConfig soft = config;
  soft.mode = NmsMode::soft;
  return suppress(scores, soft, label);
}

std::vector<Detection> hard_nms_1d(std::span<const float> scores, const NmsConfig& config, int label) {
  NmsConfig hard = config;
  hard.mode = NmsMode::hard;
  return suppress(scores, hard, label);
}

std::vector<Detection> nms_1d(std::span<const float> scores, const NmsConfig& config, int label) {
  return suppress(scores, config, label);
}

EventSet extract_detections(const ScoreSequence& probabilities, const NmsConfig& config, const std::string& video,
                            int threads) {
  config.validate();
  const std::size_t classes = probabilities.num_classes();
  std::vector<std::vector<Detection>> per_class(classes);
  parallel_for(classes, threads, [&](std::size_t i) {
    const auto column = probabilities.column(i + 1);
    per_class[i] = nms_1d(column, config, static_cast<int>(i) + 1);
  });
  EventSet out{video, {}};
  for (const auto& dets : per_class) {
    for (const Detection& d : dets) out.events.push_back({d.label, d.frame, std::clamp(d.score, 0.0, 1.0)});
  }
  return out;
}

double weighted_cross_entropy(const ScoreSequence& probabilities, std::span<const int> labels,
                              double foreground_weight) {
  if (labels.size() != probabilities.length()) throw ValidationError("one label per frame is required");
  if (!(foreground_weight > 0.0)) throw ValidationError("foreground weight must be > 0");
  double total = 0.0;
  for (std::size_t l = 0; l < labels.size(); ++l) {
    const int label = labels[l];
    if (label < 0 || static_cast<std::size_t>(label) >= probabilities.columns()) {
      throw ValidationError("label " + std::to_string(label) + " out of range at frame " + std::to_string(l));
    }
    const double weight = label >= 1 ? foreground_weight : 1.0;
    const double p = std::max<double>(probabilities.at(l, static_cast<std::size_t>(label)), kLogFloor);
    total += -weight * std::log(p);
  }
  return total / static_cast<double>(labels.size());
}

double combined_loss(double fused, double low, double high, const LossConfig& config) {
  config.validate();
  if (!std::isfinite(fused) || !std::isfinite(low) || !std::isfinite(high)) {
    throw ValidationError("loss components must be finite");
  }
  return config.lambda_fused * fused + config.lambda_low * low + config.lambda_high * high;
}

}  // namespace roispot
