#include "roispot/saliency.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "roispot/error.hpp"
#include "roispot/parallel.hpp"

namespace roispot {

namespace {

std::ptrdiff_t clamp_index(std::ptrdiff_t i, std::ptrdiff_t n) { return std::clamp<std::ptrdiff_t>(i, 0, n - 1); }

// Convolves `n` samples spaced `stride` apart, reading `src` and writing `dst`.
void convolve_line(const double* src, double* dst, std::ptrdiff_t n, std::ptrdiff_t stride,
                   const std::vector<double>& kernel) {
  const auto r = static_cast<std::ptrdiff_t>(kernel.size() / 2);
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::ptrdiff_t j = -r; j <= r; ++j) acc += kernel[j + r] * src[clamp_index(i + j, n) * stride];
    dst[i * stride] = acc;
  }
}

struct SourceSample {
  std::size_t lo;
  std::size_t hi;
  double frac;
};

std::vector<SourceSample> bilinear_taps(std::size_t source, int k) {
  std::vector<SourceSample> taps(source * static_cast<std::size_t>(k));
  const double last = static_cast<double>(source - 1);
  for (std::size_t u = 0; u < taps.size(); ++u) {
    const double x = std::clamp((static_cast<double>(u) + 0.5) / k - 0.5, 0.0, last);
    const auto lo = static_cast<std::size_t>(std::floor(x));
    taps[u] = {lo, std::min(lo + 1, source - 1), x - static_cast<double>(lo)};
  }
  return taps;
}

}  // namespace

void SaliencyConfig::validate() const {
  if (upsample_k < 1) throw ValidationError("upsample factor k must be >= 1");
  if (!(sigma_spatial > 0.0)) throw ValidationError("spatial sigma must be > 0");
  if (!(sigma_temporal >= 0.0)) throw ValidationError("temporal sigma must be >= 0");
  if (!(epsilon > 0.0)) throw ValidationError("epsilon must be > 0");
}

SaliencyVolume channel_average(const FeatureVolume& features) {
  SaliencyVolume out(features.frames(), features.height(), features.width(), SaliencyStage::raw);
  const double inv = 1.0 / static_cast<double>(features.channels());
  for (std::size_t l = 0; l < features.frames(); ++l) {
    for (std::size_t y = 0; y < features.height(); ++y) {
      for (std::size_t x = 0; x < features.width(); ++x) {
        double sum = 0.0;
        for (float v : features.cell(l, y, x)) sum += v;
        out.at(l, y, x) = static_cast<float>(sum * inv);
      }
    }
  }
  return out;
}

SaliencyVolume minmax_normalize(const SaliencyVolume& raw, double epsilon) {
  if (raw.stage() != SaliencyStage::raw) throw ValidationError("minmax_normalize expects raw saliency");
  SaliencyVolume out(raw.frames(), raw.height(), raw.width(), SaliencyStage::normalized);
  for (std::size_t l = 0; l < raw.frames(); ++l) {
    auto src = raw.frame(l);
    auto [lo_it, hi_it] = std::minmax_element(src.begin(), src.end());
    const double lo = *lo_it;
    const double range = static_cast<double>(*hi_it) - lo;
    if (range < epsilon) continue;
    auto dst = out.frame(l);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = static_cast<float>((src[i] - lo) / range);
  }
  return out;
}

SaliencyVolume upsample_bilinear(const SaliencyVolume& saliency, int k) {
  if (k < 1) throw ValidationError("upsample factor must be >= 1");
  const std::size_t h = saliency.height() * static_cast<std::size_t>(k);
  const std::size_t w = saliency.width() * static_cast<std::size_t>(k);
  SaliencyVolume out(saliency.frames(), h, w, SaliencyStage::upsampled);
  if (k == 1) {
    std::copy(saliency.data().begin(), saliency.data().end(), out.data().begin());
    return out;
  }
  const auto xs = bilinear_taps(saliency.width(), k);
  const auto ys = bilinear_taps(saliency.height(), k);
  for (std::size_t l = 0; l < saliency.frames(); ++l) {
    for (std::size_t v = 0; v < h; ++v) {
      const auto& ty = ys[v];
      for (std::size_t u = 0; u < w; ++u) {
        const auto& tx = xs[u];
        const double top = (1.0 - tx.frac) * saliency.at(l, ty.lo, tx.lo) + tx.frac * saliency.at(l, ty.lo, tx.hi);
        const double bottom =
            (1.0 - tx.frac) * saliency.at(l, ty.hi, tx.lo) + tx.frac * saliency.at(l, ty.hi, tx.hi);
        out.at(l, v, u) = static_cast<float>((1.0 - ty.frac) * top + ty.frac * bottom);
      }
    }
  }
  return out;
}

std::vector<double> gaussian_kernel(double sigma) {
  if (sigma < 0.0 || !std::isfinite(sigma)) throw ValidationError("sigma must be finite and >= 0");
  if (sigma == 0.0) return {1.0};
  const auto r = static_cast<std::ptrdiff_t>(std::ceil(3.0 * sigma));
  std::vector<double> taps(static_cast<std::size_t>(2 * r + 1));
  double sum = 0.0;
  for (std::ptrdiff_t i = -r; i <= r; ++i) {
    const double g = std::exp(-static_cast<double>(i * i) / (2.0 * sigma * sigma));
    taps[i + r] = g;
    sum += g;
  }
  for (double& g : taps) g /= sum;
  return taps;
}

SaliencyVolume gaussian_smooth_st(const SaliencyVolume& saliency, double sigma_spatial, double sigma_temporal,
                                  int threads) {
  if (saliency.stage() != SaliencyStage::upsampled && saliency.stage() != SaliencyStage::normalized) {
    throw ValidationError(std::string("smoothing expects normalized or upsampled saliency, got ") +
                          to_string(saliency.stage()));
  }
  if (!(sigma_spatial > 0.0)) throw ValidationError("spatial sigma must be > 0");
  const auto spatial = gaussian_kernel(sigma_spatial);
  const auto temporal = gaussian_kernel(sigma_temporal);

  const auto frames = static_cast<std::ptrdiff_t>(saliency.frames());
  const auto height = static_cast<std::ptrdiff_t>(saliency.height());
  const auto width = static_cast<std::ptrdiff_t>(saliency.width());
  const std::size_t plane = saliency.frame_size();

  std::vector<double> a(saliency.data().begin(), saliency.data().end());
  std::vector<double> b(a.size());

  parallel_for(saliency.frames(), threads, [&](std::size_t l) {
    double* src = a.data() + l * plane;
    double* tmp = b.data() + l * plane;
    for (std::ptrdiff_t y = 0; y < height; ++y) convolve_line(src + y * width, tmp + y * width, width, 1, spatial);
    for (std::ptrdiff_t x = 0; x < width; ++x) convolve_line(tmp + x, src + x, height, width, spatial);
  });

  if (sigma_temporal > 0.0) {
    const auto stride = static_cast<std::ptrdiff_t>(plane);
    parallel_for(saliency.height(), threads, [&](std::size_t y) {
      for (std::ptrdiff_t x = 0; x < width; ++x) {
        const std::size_t offset = y * static_cast<std::size_t>(width) + static_cast<std::size_t>(x);
        convolve_line(a.data() + offset, b.data() + offset, frames, stride, temporal);
      }
    });
    a.swap(b);
  }

  SaliencyVolume out(saliency.frames(), saliency.height(), saliency.width(), SaliencyStage::smoothed);
  std::transform(a.begin(), a.end(), out.data().begin(), [](double v) { return static_cast<float>(v); });
  return out;
}

SaliencyVolume probability_normalize(const SaliencyVolume& saliency) {
  for (float v : saliency.data()) {
    if (v < 0.0f) throw ValidationError("probability_normalize needs non-negative saliency");
  }
  SaliencyVolume out(saliency.frames(), saliency.height(), saliency.width(), SaliencyStage::probability);
  const double uniform = 1.0 / static_cast<double>(saliency.frame_size());
  for (std::size_t l = 0; l < saliency.frames(); ++l) {
    auto src = saliency.frame(l);
    auto dst = out.frame(l);
    double sum = 0.0;
    for (float v : src) sum += v;
    if (sum <= 0.0) {
      std::fill(dst.begin(), dst.end(), static_cast<float>(uniform));
      continue;
    }
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = static_cast<float>(src[i] / sum);
  }
  return out;
}

SaliencyVolume build_saliency(const FeatureVolume& features, const SaliencyConfig& config, int threads) {
  config.validate();
  features.validate();
  auto raw = channel_average(features);
  auto normalized = minmax_normalize(raw, config.epsilon);
  auto upsampled = upsample_bilinear(normalized, config.upsample_k);
  auto smoothed = gaussian_smooth_st(upsampled, config.sigma_spatial, config.sigma_temporal, threads);
  return probability_normalize(smoothed);
}

}  // namespace roispot
