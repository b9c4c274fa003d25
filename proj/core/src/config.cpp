#include "roispot/config.hpp"

#include <algorithm>

#include <json.hpp>

#include "roispot/error.hpp"
#include "roispot/io.hpp"

namespace roispot {

namespace {

using nlohmann::json;

class Section {
 public:
  Section(const json& doc, const char* name) : name_(name) {
    if (auto it = doc.find(name); it != doc.end()) {
      if (!it->is_object()) throw ValidationError(std::string("config section '") + name + "' must be an object");
      obj_ = &*it;
    }
  }

  template <typename T>
  void read(const char* key, T& out) {
    if (!obj_) return;
    seen_.push_back(key);
    auto it = obj_->find(key);
    if (it == obj_->end()) return;
    try {
      out = it->get<T>();
    } catch (const json::exception&) {
      throw ValidationError(std::string("config key '") + name_ + "." + key + "' has the wrong type");
    }
  }

  void reject_unknown() const {
    if (!obj_) return;
    for (const auto& [key, _] : obj_->items()) {
      if (std::find(seen_.begin(), seen_.end(), key) == seen_.end()) {
        throw ValidationError("unknown config key '" + std::string(name_) + "." + key + "'");
      }
    }
  }

 private:
  const char* name_;
  const json* obj_ = nullptr;
  std::vector<std::string> seen_;
};

}  // namespace

NmsMode parse_nms_mode(const std::string& text) {
  if (text == "soft") return NmsMode::soft;
  if (text == "hard") return NmsMode::hard;
  throw ValidationError("NMS mode must be 'soft' or 'hard', got '" + text + "'");
}

ToleranceUnit parse_tolerance_unit(const std::string& text) {
  if (text == "frames") return ToleranceUnit::frames;
  if (text == "seconds") return ToleranceUnit::seconds;
  throw ValidationError("tolerance unit must be 'frames' or 'seconds', got '" + text + "'");
}

const char* to_string(NmsMode mode) { return mode == NmsMode::soft ? "soft" : "hard"; }

const char* to_string(ToleranceUnit unit) { return unit == ToleranceUnit::frames ? "frames" : "seconds"; }

void PipelineConfig::validate() const {
  saliency.validate();
  roi.validate();
  nms.validate();
  loss.validate();
  eval.validate();
  geometry.validate();
  if (roi.min_w > geometry.high_w || roi.min_h > geometry.high_h) {
    throw ValidationError("minimum RoI size exceeds the high-resolution frame");
  }
}

PipelineConfig parse_pipeline_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FormatError(FormatErrc::malformed_line, std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("config must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    static const char* kSections[] = {"saliency", "roi", "nms", "loss", "eval", "geometry"};
    if (std::find_if(std::begin(kSections), std::end(kSections), [&](const char* s) { return key == s; }) ==
        std::end(kSections)) {
      throw ValidationError("unknown config section '" + key + "'");
    }
  }

  PipelineConfig cfg;
  Section s(doc, "saliency");
  s.read("k", cfg.saliency.upsample_k);
  s.read("sigma_s", cfg.saliency.sigma_spatial);
  s.read("sigma_t", cfg.saliency.sigma_temporal);
  s.read("epsilon", cfg.saliency.epsilon);
  s.reject_unknown();

  Section r(doc, "roi");
  r.read("tau", cfg.roi.tau);
  r.read("min_w", cfg.roi.min_w);
  r.read("min_h", cfg.roi.min_h);
  bool has_aspect = false;
  if (auto it = doc.find("roi"); it != doc.end() && it->contains("aspect")) has_aspect = true;
  r.read("aspect", cfg.roi.aspect);
  r.read("scale_step", cfg.roi.scale_step);
  r.reject_unknown();
  if (!has_aspect) cfg.roi.aspect = static_cast<double>(cfg.roi.min_w) / cfg.roi.min_h;

  Section n(doc, "nms");
  std::string mode = to_string(cfg.nms.mode);
  n.read("window", cfg.nms.window);
  n.read("mode", mode);
  n.read("score_floor", cfg.nms.score_floor);
  n.reject_unknown();
  cfg.nms.mode = parse_nms_mode(mode);

  Section l(doc, "loss");
  l.read("w", cfg.loss.foreground_weight);
  l.read("lambda_f", cfg.loss.lambda_fused);
  l.read("lambda_l", cfg.loss.lambda_low);
  l.read("lambda_h", cfg.loss.lambda_high);
  l.reject_unknown();

  Section e(doc, "eval");
  std::string unit = to_string(cfg.eval.unit);
  e.read("tolerances", cfg.eval.tolerances);
  e.read("unit", unit);
  e.read("fps", cfg.eval.fps);
  e.reject_unknown();
  cfg.eval.unit = parse_tolerance_unit(unit);

  Section g(doc, "geometry");
  g.read("high_w", cfg.geometry.high_w);
  g.read("high_h", cfg.geometry.high_h);
  g.read("low_w", cfg.geometry.low_w);
  g.read("low_h", cfg.geometry.low_h);
  g.reject_unknown();

  cfg.validate();
  return cfg;
}

PipelineConfig load_pipeline_config(const std::filesystem::path& path) { return parse_pipeline_config(read_file(path)); }

std::string dump_pipeline_config(const PipelineConfig& c) {
  json doc = {
      {"saliency",
       {{"k", c.saliency.upsample_k},
        {"sigma_s", c.saliency.sigma_spatial},
        {"sigma_t", c.saliency.sigma_temporal},
        {"epsilon", c.saliency.epsilon}}},
      {"roi",
       {{"tau", c.roi.tau},
        {"min_w", c.roi.min_w},
        {"min_h", c.roi.min_h},
        {"aspect", c.roi.aspect},
        {"scale_step", c.roi.scale_step}}},
      {"nms", {{"window", c.nms.window}, {"mode", to_string(c.nms.mode)}, {"score_floor", c.nms.score_floor}}},
      {"loss",
       {{"w", c.loss.foreground_weight},
        {"lambda_f", c.loss.lambda_fused},
        {"lambda_l", c.loss.lambda_low},
        {"lambda_h", c.loss.lambda_high}}},
      {"eval", {{"tolerances", c.eval.tolerances}, {"unit", to_string(c.eval.unit)}, {"fps", c.eval.fps}}},
      {"geometry",
       {{"high_w", c.geometry.high_w},
        {"high_h", c.geometry.high_h},
        {"low_w", c.geometry.low_w},
        {"low_h", c.geometry.low_h}}},
  };
  return doc.dump(2) + "\n";
}

}  // namespace roispot
