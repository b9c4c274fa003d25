#pragma once

#include <filesystem>
#include <string>

#include "roispot/eval.hpp"
#include "roispot/roi.hpp"
#include "roispot/saliency.hpp"
#include "roispot/spotting.hpp"
#include "roispot/types.hpp"

namespace roispot {

/// Every tunable of the pipeline. Defaults follow the reference setup: k = 8,
/// 112 x 112 RoIs on 448 x 448 frames, a 2-frame soft-NMS window, w = 5, lambda = 1/3.
struct PipelineConfig {
  SaliencyConfig saliency;
  RoiConfig roi;
  NmsConfig nms;
  LossConfig loss;
  EvalConfig eval;
  FrameGeometry geometry;

  void validate() const;
};

/// Parses a JSON document; missing keys keep their defaults, unknown keys are rejected.
PipelineConfig parse_pipeline_config(const std::string& json_text);
PipelineConfig load_pipeline_config(const std::filesystem::path& path);
std::string dump_pipeline_config(const PipelineConfig& config);

NmsMode parse_nms_mode(const std::string& text);
ToleranceUnit parse_tolerance_unit(const std::string& text);
const char* to_string(NmsMode mode);
const char* to_string(ToleranceUnit unit);

}  // namespace roispot
