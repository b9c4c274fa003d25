#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

#include "roispot/error.hpp"
#include "roispot/io.hpp"

namespace roispot {

namespace {

constexpr std::array<char, 4> kMagic = {'A', 'S', 'V', '1'};
constexpr std::uint8_t kDtypeFloat32 = 0;
constexpr std::size_t kHeaderBytes = 8;

void put_u64(std::vector<std::byte>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::byte>((v >> (8 * i)) & 0xFF));
}

void put_u32(std::vector<std::byte>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::byte>((v >> (8 * i)) & 0xFF));
}

std::uint64_t get_u64(std::span<const std::byte> b) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | std::to_integer<std::uint64_t>(b[i]);
  return v;
}

std::uint32_t get_u32(std::span<const std::byte> b) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | std::to_integer<std::uint32_t>(b[i]);
  return v;
}

std::size_t element_count(std::span<const std::uint64_t> dims) {
  std::uint64_t n = 1;
  for (std::uint64_t d : dims) {
    if (d != 0 && n > std::numeric_limits<std::uint64_t>::max() / d) {
      throw FormatError(FormatErrc::dim_overflow, "element count exceeds 64 bits");
    }
    n *= d;
  }
  if (n > std::numeric_limits<std::size_t>::max() / sizeof(float)) {
    throw FormatError(FormatErrc::dim_overflow, "payload size exceeds addressable memory");
  }
  return static_cast<std::size_t>(n);
}

void require_rank(const Tensor& t, std::size_t rank, const char* what) {
  if (t.dims.size() != rank) {
    throw ValidationError(std::string(what) + " needs a rank-" + std::to_string(rank) + " tensor, got rank " +
                          std::to_string(t.dims.size()));
  }
}

}  // namespace

std::vector<std::byte> encode_tensor(const Tensor& tensor) {
  if (tensor.dims.empty() || tensor.dims.size() > 4) throw ValidationError("tensor rank must be 1..4");
  for (std::uint64_t d : tensor.dims) {
    if (d == 0) throw ValidationError("tensor dims must be >= 1");
  }
  if (element_count(tensor.dims) != tensor.values.size()) throw ValidationError("tensor dims do not match value count");
  for (float v : tensor.values) {
    if (!std::isfinite(v)) throw ValidationError("cannot write non-finite value");
  }

  std::vector<std::byte> out;
  out.reserve(kHeaderBytes + 8 * tensor.dims.size() + 4 * tensor.values.size());
  for (char c : kMagic) out.push_back(static_cast<std::byte>(c));
  out.push_back(static_cast<std::byte>(kDtypeFloat32));
  out.push_back(static_cast<std::byte>(tensor.dims.size()));
  out.push_back(std::byte{0});
  out.push_back(std::byte{0});
  for (std::uint64_t d : tensor.dims) put_u64(out, d);
  for (float v : tensor.values) put_u32(out, std::bit_cast<std::uint32_t>(v));
  return out;
}

Tensor decode_tensor(std::span<const std::byte> bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic.data(), 4) != 0) {
    throw FormatError(FormatErrc::bad_magic, "expected \"ASV1\"");
  }
  if (bytes.size() < kHeaderBytes) throw FormatError(FormatErrc::truncated, "header shorter than 8 bytes");
  const auto dtype = std::to_integer<unsigned>(bytes[4]);
  if (dtype != kDtypeFloat32) throw FormatError(FormatErrc::unsupported_dtype, "dtype " + std::to_string(dtype));
  const auto rank = std::to_integer<std::size_t>(bytes[5]);
  if (rank < 1 || rank > 4) throw FormatError(FormatErrc::bad_rank, "rank " + std::to_string(rank));
  if (bytes[6] != std::byte{0} || bytes[7] != std::byte{0}) {
    throw FormatError(FormatErrc::bad_header, "reserved header bytes are not zero");
  }
  if (bytes.size() < kHeaderBytes + 8 * rank) throw FormatError(FormatErrc::truncated, "dims cut short");

  Tensor t;
  t.dims.resize(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    t.dims[i] = get_u64(bytes.subspan(kHeaderBytes + 8 * i, 8));
    if (t.dims[i] == 0) throw FormatError(FormatErrc::bad_header, "zero dimension");
  }
  const std::size_t n = element_count(t.dims);
  const std::size_t payload_at = kHeaderBytes + 8 * rank;
  const std::size_t available = (bytes.size() - payload_at) / 4;
  if (available < n || bytes.size() - payload_at < 4 * n) {
    throw FormatError(FormatErrc::truncated,
                      "payload has " + std::to_string(bytes.size() - payload_at) + " bytes, needs " +
                          std::to_string(4 * n));
  }
  if (bytes.size() - payload_at > 4 * n) throw FormatError(FormatErrc::trailing_bytes, "data after payload");

  t.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.values[i] = std::bit_cast<float>(get_u32(bytes.subspan(payload_at + 4 * i, 4)));
    if (!std::isfinite(t.values[i])) throw ValidationError("non-finite value at flat index " + std::to_string(i));
  }
  return t;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed for '" + path.string() + "'");
  return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

Tensor read_tensor(const std::filesystem::path& path) {
  const std::string raw = read_file(path);
  return decode_tensor(std::as_bytes(std::span(raw.data(), raw.size())));
}

void write_tensor(const Tensor& tensor, const std::filesystem::path& path) {
  const auto bytes = encode_tensor(tensor);
  write_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

Tensor to_tensor(const FeatureVolume& v) {
  return {{v.frames(), v.height(), v.width(), v.channels()}, {v.data().begin(), v.data().end()}};
}

Tensor to_tensor(const SaliencyVolume& v) {
  return {{v.frames(), v.height(), v.width()}, {v.data().begin(), v.data().end()}};
}

Tensor to_tensor(const ScoreSequence& v) {
  return {{v.length(), v.columns()}, {v.data().begin(), v.data().end()}};
}

Tensor to_tensor(const FeatureSequence& v) {
  return {{v.frames(), v.channels()}, {v.data().begin(), v.data().end()}};
}

FeatureVolume to_feature_volume(Tensor t) {
  require_rank(t, 4, "feature volume");
  return FeatureVolume(t.dims[0], t.dims[1], t.dims[2], t.dims[3], std::move(t.values));
}

SaliencyVolume to_saliency_volume(Tensor t, SaliencyStage stage) {
  require_rank(t, 3, "saliency volume");
  return SaliencyVolume(t.dims[0], t.dims[1], t.dims[2], stage, std::move(t.values));
}

ScoreSequence to_score_sequence(Tensor t, bool probabilities) {
  require_rank(t, 2, "score sequence");
  return ScoreSequence(t.dims[0], t.dims[1], std::move(t.values), probabilities);
}

FeatureSequence to_feature_sequence(Tensor t) {
  require_rank(t, 2, "feature sequence");
  return FeatureSequence(t.dims[0], t.dims[1], std::move(t.values));
}

AnyVolume read_volume(const std::filesystem::path& path, RankTwoAs rank_two) {
  Tensor t = read_tensor(path);
  switch (t.dims.size()) {
    case 4: return to_feature_volume(std::move(t));
    case 3: return to_saliency_volume(std::move(t), SaliencyStage::raw);
    case 2:
      if (rank_two == RankTwoAs::scores) return to_score_sequence(std::move(t), false);
      return to_feature_sequence(std::move(t));
    default: throw ValidationError("rank-1 tensors have no domain type");
  }
}

}  // namespace roispot
