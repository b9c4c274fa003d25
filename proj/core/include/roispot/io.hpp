#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "roispot/types.hpp"

namespace roispot {

// ASV1 tensor file layout (little-endian):
//   bytes 0-3  magic "ASV1"
//   byte  4    dtype, 0 = float32
//   byte  5    rank, 1..4
//   bytes 6-7  zero
//   rank x u64 dims, then the row-major payload.

/// Untyped tensor as stored on disk.
struct Tensor {
  std::vector<std::uint64_t> dims;
  std::vector<float> values;

  friend bool operator==(const Tensor&, const Tensor&) = default;
};

std::vector<std::byte> encode_tensor(const Tensor& tensor);
Tensor decode_tensor(std::span<const std::byte> bytes);

Tensor read_tensor(const std::filesystem::path& path);
void write_tensor(const Tensor& tensor, const std::filesystem::path& path);

Tensor to_tensor(const FeatureVolume& v);
Tensor to_tensor(const SaliencyVolume& v);
Tensor to_tensor(const ScoreSequence& v);
Tensor to_tensor(const FeatureSequence& v);

FeatureVolume to_feature_volume(Tensor t);
SaliencyVolume to_saliency_volume(Tensor t, SaliencyStage stage);
ScoreSequence to_score_sequence(Tensor t, bool probabilities);
FeatureSequence to_feature_sequence(Tensor t);

/// How a rank-2 file should be interpreted; the format does not record it.
enum class RankTwoAs { scores, features };

using AnyVolume = std::variant<FeatureVolume, SaliencyVolume, ScoreSequence, FeatureSequence>;

/// Reads a file and picks the domain type from its rank (4, 3, or 2).
/// Rank-3 files come back as raw-stage saliency.
AnyVolume read_volume(const std::filesystem::path& path, RankTwoAs rank_two = RankTwoAs::scores);

template <typename T>
void write_volume(const T& value, const std::filesystem::path& path) {
  write_tensor(to_tensor(value), path);
}

// Events: JSON Lines, {"video": str, "frame": int, "class": str, "score": float?}.
// Class names map to labels 1..C through a vocabulary array stored as a JSON sidecar.

using ClassList = std::vector<std::string>;

ClassList read_class_list(const std::filesystem::path& path);
void write_class_list(const ClassList& classes, const std::filesystem::path& path);

/// Groups events by video id in first-appearance order; events keep file order.
std::vector<EventSet> parse_events(std::istream& in, const ClassList& classes);
void format_events(std::ostream& out, std::span<const EventSet> sets, const ClassList& classes);

std::vector<EventSet> read_events(const std::filesystem::path& path, const ClassList& classes);
void write_events(std::span<const EventSet> sets, const ClassList& classes, const std::filesystem::path& path);

// RoI tracks: JSON Lines, {"frame": int, "x": int, "y": int, "w": int, "h": int}.

std::vector<Roi> parse_rois(std::istream& in);
void format_rois(std::ostream& out, std::span<const Roi> rois);
std::vector<Roi> read_rois(const std::filesystem::path& path);
void write_rois(std::span<const Roi> rois, const std::filesystem::path& path);

/// Reads an entire file; throws IoError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace roispot
