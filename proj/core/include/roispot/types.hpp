#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace roispot {

/// Spatial feature maps of one clip, row-major [frame][y][x][channel].
class FeatureVolume {
 public:
  FeatureVolume() = default;
  FeatureVolume(std::size_t frames, std::size_t height, std::size_t width, std::size_t channels);
  FeatureVolume(std::size_t frames, std::size_t height, std::size_t width, std::size_t channels,
                std::vector<float> data);

  std::size_t frames() const noexcept { return frames_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t channels() const noexcept { return channels_; }

  float& at(std::size_t l, std::size_t y, std::size_t x, std::size_t c) {
    return data_[((l * height_ + y) * width_ + x) * channels_ + c];
  }
  float at(std::size_t l, std::size_t y, std::size_t x, std::size_t c) const {
    return data_[((l * height_ + y) * width_ + x) * channels_ + c];
  }
  std::span<const float> cell(std::size_t l, std::size_t y, std::size_t x) const {
    return {data_.data() + ((l * height_ + y) * width_ + x) * channels_, channels_};
  }
  std::span<const float> data() const noexcept { return data_; }
  std::span<float> data() noexcept { return data_; }

  /// Throws ValidationError on empty dims or non-finite values.
  void validate() const;

  friend bool operator==(const FeatureVolume&, const FeatureVolume&) = default;

 private:
  std::size_t frames_ = 0, height_ = 0, width_ = 0, channels_ = 0;
  std::vector<float> data_;
};

enum class SaliencyStage { raw, normalized, upsampled, smoothed, probability };

const char* to_string(SaliencyStage stage);

/// Per-frame scalar maps [frame][y][x] tagged with the pipeline stage that produced them.
class SaliencyVolume {
 public:
  SaliencyVolume() = default;
  SaliencyVolume(std::size_t frames, std::size_t height, std::size_t width, SaliencyStage stage);
  SaliencyVolume(std::size_t frames, std::size_t height, std::size_t width, SaliencyStage stage,
                 std::vector<float> data);

  std::size_t frames() const noexcept { return frames_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t frame_size() const noexcept { return height_ * width_; }
  SaliencyStage stage() const noexcept { return stage_; }

  float& at(std::size_t l, std::size_t y, std::size_t x) { return data_[(l * height_ + y) * width_ + x]; }
  float at(std::size_t l, std::size_t y, std::size_t x) const {
    return data_[(l * height_ + y) * width_ + x];
  }
  std::span<float> frame(std::size_t l) { return {data_.data() + l * frame_size(), frame_size()}; }
  std::span<const float> frame(std::size_t l) const {
    return {data_.data() + l * frame_size(), frame_size()};
  }
  std::span<const float> data() const noexcept { return data_; }
  std::span<float> data() noexcept { return data_; }

  /// Checks the value constraints implied by the stage tag.
  void validate() const;

  friend bool operator==(const SaliencyVolume&, const SaliencyVolume&) = default;

 private:
  std::size_t frames_ = 0, height_ = 0, width_ = 0;
  SaliencyStage stage_ = SaliencyStage::raw;
  std::vector<float> data_;
};

/// Per-frame class scores [frame][class]; column 0 is background.
class ScoreSequence {
 public:
  ScoreSequence() = default;
  ScoreSequence(std::size_t length, std::size_t columns, bool probabilities = false);
  ScoreSequence(std::size_t length, std::size_t columns, std::vector<float> data,
                bool probabilities = false);

  std::size_t length() const noexcept { return length_; }
  /// Number of columns, C + 1.
  std::size_t columns() const noexcept { return columns_; }
  std::size_t num_classes() const noexcept { return columns_ - 1; }
  bool probabilities() const noexcept { return probabilities_; }

  float& at(std::size_t t, std::size_t c) { return data_[t * columns_ + c]; }
  float at(std::size_t t, std::size_t c) const { return data_[t * columns_ + c]; }
  std::span<const float> row(std::size_t t) const { return {data_.data() + t * columns_, columns_}; }
  std::span<float> row(std::size_t t) { return {data_.data() + t * columns_, columns_}; }
  std::span<const float> data() const noexcept { return data_; }
  std::span<float> data() noexcept { return data_; }

  std::vector<float> column(std::size_t c) const;

  void validate() const;

  friend bool operator==(const ScoreSequence&, const ScoreSequence&) = default;

 private:
  std::size_t length_ = 0, columns_ = 0;
  bool probabilities_ = false;
  std::vector<float> data_;
};

/// Pooled per-frame features [frame][channel].
class FeatureSequence {
 public:
  FeatureSequence() = default;
  FeatureSequence(std::size_t frames, std::size_t channels);
  FeatureSequence(std::size_t frames, std::size_t channels, std::vector<float> data);

  std::size_t frames() const noexcept { return frames_; }
  std::size_t channels() const noexcept { return channels_; }
  float& at(std::size_t l, std::size_t c) { return data_[l * channels_ + c]; }
  float at(std::size_t l, std::size_t c) const { return data_[l * channels_ + c]; }
  std::span<const float> data() const noexcept { return data_; }
  std::span<float> data() noexcept { return data_; }

  void validate() const;

  friend bool operator==(const FeatureSequence&, const FeatureSequence&) = default;

 private:
  std::size_t frames_ = 0, channels_ = 0;
  std::vector<float> data_;
};

/// High- and low-resolution frame sizes in pixels.
struct FrameGeometry {
  int high_w = 448;
  int high_h = 448;
  int low_w = 224;
  int low_h = 224;

  void validate() const;
  friend bool operator==(const FrameGeometry&, const FrameGeometry&) = default;
};

/// A ground-truth or detected event. Labels are 1..C; 0 is reserved for background.
struct Event {
  int label = 1;
  std::int64_t frame = 0;
  std::optional<double> score;

  friend bool operator==(const Event&, const Event&) = default;
};

struct EventSet {
  std::string video;
  std::vector<Event> events;

  /// Checks label range, frame sign, score range and, when given, the video length.
  void validate(int num_classes, std::optional<std::int64_t> length = std::nullopt) const;

  friend bool operator==(const EventSet&, const EventSet&) = default;
};

/// Axis-aligned rectangle on a saliency grid, in cells.
struct GridRect {
  int x = 0;
  int y = 0;
  int w = 1;
  int h = 1;

  int area() const noexcept { return w * h; }
  friend bool operator==(const GridRect&, const GridRect&) = default;
};

/// Per-frame region in high-resolution pixel coordinates.
struct Roi {
  int frame = 0;
  int x = 0;
  int y = 0;
  int w = 1;
  int h = 1;

  friend bool operator==(const Roi&, const Roi&) = default;
};

struct RoiTrack {
  FrameGeometry geometry;
  std::vector<Roi> rois;  // one per frame, ordered by frame

  friend bool operator==(const RoiTrack&, const RoiTrack&) = default;
};

}  // namespace roispot
