#include "roispot/types.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "roispot/error.hpp"

namespace roispot {

namespace {

std::size_t checked_product(std::initializer_list<std::size_t> dims) {
  std::size_t n = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw ValidationError("tensor dimension must be >= 1");
    if (n > std::numeric_limits<std::size_t>::max() / d) throw ValidationError("tensor size overflows");
    n *= d;
  }
  return n;
}

void check_size(std::size_t expected, std::size_t actual) {
  if (expected != actual) {
    throw ValidationError("data holds " + std::to_string(actual) + " values, shape needs " +
                          std::to_string(expected));
  }
}

void check_finite(std::span<const float> data) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!std::isfinite(data[i])) throw ValidationError("non-finite value at flat index " + std::to_string(i));
  }
}

}  // namespace

const char* to_string(FormatErrc code) {
  switch (code) {
    case FormatErrc::bad_magic: return "bad magic";
    case FormatErrc::unsupported_dtype: return "unsupported dtype";
    case FormatErrc::bad_rank: return "bad rank";
    case FormatErrc::bad_header: return "bad header";
    case FormatErrc::truncated: return "truncated payload";
    case FormatErrc::dim_overflow: return "dim overflow";
    case FormatErrc::trailing_bytes: return "trailing bytes";
    case FormatErrc::malformed_line: return "malformed line";
  }
  return "format error";
}

const char* to_string(SaliencyStage stage) {
  switch (stage) {
    case SaliencyStage::raw: return "raw";
    case SaliencyStage::normalized: return "normalized";
    case SaliencyStage::upsampled: return "upsampled";
    case SaliencyStage::smoothed: return "smoothed";
    case SaliencyStage::probability: return "probability";
  }
  return "unknown";
}

FeatureVolume::FeatureVolume(std::size_t frames, std::size_t height, std::size_t width, std::size_t channels)
    : frames_(frames), height_(height), width_(width), channels_(channels),
      data_(checked_product({frames, height, width, channels}), 0.0f) {}

FeatureVolume::FeatureVolume(std::size_t frames, std::size_t height, std::size_t width, std::size_t channels,
                             std::vector<float> data)
    : frames_(frames), height_(height), width_(width), channels_(channels), data_(std::move(data)) {
  validate();
}

void FeatureVolume::validate() const {
  check_size(checked_product({frames_, height_, width_, channels_}), data_.size());
  check_finite(data_);
}

SaliencyVolume::SaliencyVolume(std::size_t frames, std::size_t height, std::size_t width, SaliencyStage stage)
    : frames_(frames), height_(height), width_(width), stage_(stage),
      data_(checked_product({frames, height, width}), 0.0f) {}

SaliencyVolume::SaliencyVolume(std::size_t frames, std::size_t height, std::size_t width, SaliencyStage stage,
                               std::vector<float> data)
    : frames_(frames), height_(height), width_(width), stage_(stage), data_(std::move(data)) {
  validate();
}

void SaliencyVolume::validate() const {
  check_size(checked_product({frames_, height_, width_}), data_.size());
  check_finite(data_);
  if (stage_ == SaliencyStage::raw) return;
  const bool unit_range = stage_ != SaliencyStage::probability;
  for (float v : data_) {
    if (v < 0.0f) throw ValidationError(std::string("negative value in ") + to_string(stage_) + " saliency");
    if (unit_range && v > 1.0f) {
      throw ValidationError(std::string("value above 1 in ") + to_string(stage_) + " saliency");
    }
  }
  if (stage_ == SaliencyStage::probability) {
    for (std::size_t l = 0; l < frames_; ++l) {
      double sum = 0.0;
      for (float v : frame(l)) sum += v;
      if (std::abs(sum - 1.0) > 1e-5) {
        throw ValidationError("probability frame " + std::to_string(l) + " sums to " + std::to_string(sum));
      }
    }
  }
}

ScoreSequence::ScoreSequence(std::size_t length, std::size_t columns, bool probabilities)
    : length_(length), columns_(columns), probabilities_(probabilities),
      data_(checked_product({length, columns}), 0.0f) {
  if (columns < 2) throw ValidationError("score sequence needs background plus at least one class");
}

ScoreSequence::ScoreSequence(std::size_t length, std::size_t columns, std::vector<float> data, bool probabilities)
    : length_(length), columns_(columns), probabilities_(probabilities), data_(std::move(data)) {
  validate();
}

std::vector<float> ScoreSequence::column(std::size_t c) const {
  std::vector<float> out(length_);
  for (std::size_t t = 0; t < length_; ++t) out[t] = at(t, c);
  return out;
}

void ScoreSequence::validate() const {
  check_size(checked_product({length_, columns_}), data_.size());
  if (columns_ < 2) throw ValidationError("score sequence needs background plus at least one class");
  check_finite(data_);
  if (!probabilities_) return;
  for (std::size_t t = 0; t < length_; ++t) {
    double sum = 0.0;
    for (float v : row(t)) {
      if (v < 0.0f || v > 1.0f) throw ValidationError("probability outside [0,1] at frame " + std::to_string(t));
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-5) throw ValidationError("probability row " + std::to_string(t) + " does not sum to 1");
  }
}

FeatureSequence::FeatureSequence(std::size_t frames, std::size_t channels)
    : frames_(frames), channels_(channels), data_(checked_product({frames, channels}), 0.0f) {}

FeatureSequence::FeatureSequence(std::size_t frames, std::size_t channels, std::vector<float> data)
    : frames_(frames), channels_(channels), data_(std::move(data)) {
  validate();
}

void FeatureSequence::validate() const {
  check_size(checked_product({frames_, channels_}), data_.size());
  check_finite(data_);
}

void FrameGeometry::validate() const {
  if (low_w < 1 || low_h < 1) throw ValidationError("low-resolution size must be positive");
  if (high_w < low_w || high_h < low_h) throw ValidationError("high-resolution size must be >= low-resolution size");
}

void EventSet::validate(int num_classes, std::optional<std::int64_t> length) const {
  for (std::size_t i = 0; i < events.size(); ++i) {
    const Event& e = events[i];
    const std::string where = "video '" + video + "' event " + std::to_string(i);
    if (e.label < 1 || e.label > num_classes) throw ValidationError(where + ": class index out of range");
    if (e.frame < 0) throw ValidationError(where + ": negative frame");
    if (length && e.frame >= *length) throw ValidationError(where + ": frame beyond video length");
    if (e.score && !(*e.score >= 0.0 && *e.score <= 1.0)) throw ValidationError(where + ": score outside [0,1]");
  }
}

}  // namespace roispot
