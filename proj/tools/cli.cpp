#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "roispot/config.hpp"
#include "roispot/error.hpp"
#include "roispot/eval.hpp"
#include "roispot/io.hpp"
#include "roispot/parallel.hpp"
#include "roispot/roi.hpp"
#include "roispot/saliency.hpp"
#include "roispot/spotting.hpp"
#include "roispot/synth.hpp"

namespace roispot::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// Malformed flag values; reported as usage errors.
struct UsageError : Error {
  using Error::Error;
};

std::pair<int, int> parse_size(const std::string& text) {
  const auto sep = text.find_first_of("xX");
  if (sep == std::string::npos) throw UsageError("expected WxH, got '" + text + "'");
  try {
    std::size_t used_w = 0, used_h = 0;
    const int w = std::stoi(text.substr(0, sep), &used_w);
    const int h = std::stoi(text.substr(sep + 1), &used_h);
    if (used_w != sep || used_h != text.size() - sep - 1 || w < 1 || h < 1) throw std::invalid_argument(text);
    return {w, h};
  } catch (const std::exception&) {
    throw UsageError("expected WxH with positive integers, got '" + text + "'");
  }
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

/// Flags shared by the commands that touch the pipeline configuration.
struct Settings {
  std::string config_path;
  int threads = 1;
  bool json_output = false;

  double tau = 0;
  int k = 0;
  double sigma_s = 0, sigma_t = 0;
  std::string min_roi, frame_size, low_size;
  double aspect = 0;
  int scale_step = 0;
  int window = 0;
  std::string mode;
  double score_floor = 0;
  std::vector<double> deltas;
  std::string unit;
  double fps = 0;

  // Every subcommand registers its own option objects under the same names.
  std::multimap<std::string, CLI::Option*> given;

  bool has(const std::string& name) const {
    const auto [lo, hi] = given.equal_range(name);
    return std::any_of(lo, hi, [](const auto& entry) { return entry.second->count() > 0; });
  }

  PipelineConfig resolve() const {
    PipelineConfig cfg = config_path.empty() ? PipelineConfig{} : load_pipeline_config(config_path);
    if (has("tau")) cfg.roi.tau = tau;
    if (has("k")) cfg.saliency.upsample_k = k;
    if (has("sigma-s")) cfg.saliency.sigma_spatial = sigma_s;
    if (has("sigma-t")) cfg.saliency.sigma_temporal = sigma_t;
    if (has("min-roi")) {
      std::tie(cfg.roi.min_w, cfg.roi.min_h) = parse_size(min_roi);
      if (!has("aspect")) cfg.roi.aspect = static_cast<double>(cfg.roi.min_w) / cfg.roi.min_h;
    }
    if (has("aspect")) cfg.roi.aspect = aspect;
    if (has("scale-step")) cfg.roi.scale_step = scale_step;
    if (has("frame-size")) std::tie(cfg.geometry.high_w, cfg.geometry.high_h) = parse_size(frame_size);
    if (has("low-size")) std::tie(cfg.geometry.low_w, cfg.geometry.low_h) = parse_size(low_size);
    if (has("window")) cfg.nms.window = window;
    if (has("mode")) cfg.nms.mode = parse_nms_mode(mode);
    if (has("score-floor")) cfg.nms.score_floor = score_floor;
    if (has("delta")) cfg.eval.tolerances = deltas;
    if (has("unit")) cfg.eval.unit = parse_tolerance_unit(unit);
    if (has("fps")) cfg.eval.fps = fps;
    cfg.validate();
    return cfg;
  }
};

void add_common(CLI::App* cmd, Settings& s) {
  cmd->add_option("--config", s.config_path, "Pipeline configuration JSON");
  cmd->add_option("--threads", s.threads, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--json", s.json_output, "Machine-readable output");
}

void add_saliency_flags(CLI::App* cmd, Settings& s) {
  s.given.emplace("k", cmd->add_option("--k", s.k, "Saliency upsampling factor"));
  s.given.emplace("sigma-s", cmd->add_option("--sigma-s", s.sigma_s, "Spatial smoothing sigma, upsampled cells"));
  s.given.emplace("sigma-t", cmd->add_option("--sigma-t", s.sigma_t, "Temporal smoothing sigma, frames"));
}

void add_roi_flags(CLI::App* cmd, Settings& s) {
  s.given.emplace("tau", cmd->add_option("--tau", s.tau, "Cumulative saliency threshold"));
  s.given.emplace("min-roi", cmd->add_option("--min-roi", s.min_roi, "Minimum RoI and patch size, WxH"));
  s.given.emplace("aspect", cmd->add_option("--aspect", s.aspect, "RoI aspect ratio, width/height"));
  s.given.emplace("scale-step", cmd->add_option("--scale-step", s.scale_step, "Width increment between candidate sizes"));
  s.given.emplace("frame-size", cmd->add_option("--frame-size", s.frame_size, "High-resolution frame size, WxH"));
  s.given.emplace("low-size", cmd->add_option("--low-size", s.low_size, "Low-resolution frame size, WxH"));
}

void add_nms_flags(CLI::App* cmd, Settings& s) {
  s.given.emplace("window", cmd->add_option("--window", s.window, "Suppression window, frames"));
  s.given.emplace("mode", cmd->add_option("--mode", s.mode, "soft or hard"));
  s.given.emplace("score-floor", cmd->add_option("--score-floor", s.score_floor, "Stop below this score"));
}

void add_eval_flags(CLI::App* cmd, Settings& s) {
  s.given.emplace("delta", cmd->add_option("--delta", s.deltas, "Tolerance (repeatable)"));
  s.given.emplace("unit", cmd->add_option("--unit", s.unit, "frames or seconds"));
  s.given.emplace("fps", cmd->add_option("--fps", s.fps, "Frame rate for second tolerances"));
}

SaliencyVolume read_probability_saliency(const fs::path& path) {
  return to_saliency_volume(read_tensor(path), SaliencyStage::probability);
}

std::vector<Roi> roi_list(const RoiTrack& track) { return track.rois; }

json report_json(const ApReport& r, const ClassList& classes) {
  json per_class = json::object();
  json counts = json::object();
  for (const auto& [label, ap] : r.per_class_ap) per_class[classes.at(label - 1)] = ap;
  for (const auto& [label, c] : r.counts) {
    counts[classes.at(label - 1)] = {{"tp", c.true_positives}, {"fp", c.false_positives}, {"gt", c.ground_truth}};
  }
  return {{"delta", r.delta}, {"delta_frames", r.delta_frames}, {"per_class", per_class}, {"counts", counts},
          {"mAP", r.mean_ap}};
}

void print_report_table(std::ostream& out, const std::vector<ApReport>& reports, const ClassList& classes,
                        ToleranceUnit unit) {
  out << std::left << std::setw(16) << "class";
  for (const auto& r : reports) {
    out << std::right << std::setw(12) << ("d=" + format_number(r.delta) + (unit == ToleranceUnit::frames ? "f" : "s"));
  }
  out << '\n';
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const int label = static_cast<int>(c) + 1;
    if (reports.empty() || reports.front().per_class_ap.count(label) == 0) continue;
    out << std::left << std::setw(16) << classes[c];
    for (const auto& r : reports) {
      out << std::right << std::setw(12) << std::fixed << std::setprecision(4) << r.per_class_ap.at(label);
    }
    out << '\n';
  }
  out << std::left << std::setw(16) << "mAP";
  for (const auto& r : reports) out << std::right << std::setw(12) << std::fixed << std::setprecision(4) << r.mean_ap;
  out << '\n';
  out.unsetf(std::ios::floatfield);
}

void write_report_csv(const fs::path& path, const std::vector<ApReport>& reports, const ClassList& classes) {
  std::ostringstream csv;
  csv << "delta,delta_frames,class,ap,tp,fp,gt\n";
  for (const auto& r : reports) {
    for (const auto& [label, ap] : r.per_class_ap) {
      const auto& c = r.counts.at(label);
      csv << format_number(r.delta) << ',' << r.delta_frames << ',' << classes.at(label - 1) << ',' << ap << ','
          << c.true_positives << ',' << c.false_positives << ',' << c.ground_truth << '\n';
    }
    csv << format_number(r.delta) << ',' << r.delta_frames << ",mAP," << r.mean_ap << ",,,\n";
  }
  write_file(path, csv.str());
}

Image frame_image(const FeatureVolume& frames, std::size_t l) {
  Image img(static_cast<int>(frames.width()), static_cast<int>(frames.height()), static_cast<int>(frames.channels()));
  const auto plane = img.data.size();
  std::copy_n(frames.data().begin() + static_cast<std::ptrdiff_t>(l * plane), plane, img.data.begin());
  return img;
}

FeatureVolume crop_all(const FeatureVolume& frames, const std::vector<Roi>& rois, int out_w, int out_h, int threads) {
  if (rois.size() != frames.frames()) {
    throw ValidationError("RoI track has " + std::to_string(rois.size()) + " entries for " +
                          std::to_string(frames.frames()) + " frames");
  }
  FeatureVolume patches(frames.frames(), static_cast<std::size_t>(out_h), static_cast<std::size_t>(out_w),
                        frames.channels());
  const std::size_t plane = static_cast<std::size_t>(out_w) * out_h * frames.channels();
  parallel_for(frames.frames(), threads, [&](std::size_t l) {
    const Image patch = crop_resize(frame_image(frames, l), rois[l], out_w, out_h);
    std::copy(patch.data.begin(), patch.data.end(), patches.data().begin() + static_cast<std::ptrdiff_t>(l * plane));
  });
  return patches;
}

json truth_json(const GroundTruth& truth) {
  json boxes = json::array();
  for (std::size_t l = 0; l < truth.boxes.size(); ++l) {
    const RectF& b = truth.boxes[l];
    boxes.push_back({{"frame", l},
                     {"cx", truth.center_x[l]},
                     {"cy", truth.center_y[l]},
                     {"x", b.x},
                     {"y", b.y},
                     {"w", b.w},
                     {"h", b.h}});
  }
  json events = json::array();
  for (const Event& e : truth.events.events) events.push_back(e.frame);
  return {{"video", truth.events.video}, {"boxes", boxes}, {"event_frames", events}};
}

Trajectory parse_trajectory(const std::string& text) {
  if (text == "static") return Trajectory::stationary;
  if (text == "linear") return Trajectory::linear;
  if (text == "bounce") return Trajectory::bounce;
  throw ValidationError("trajectory must be static, linear, or bounce");
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kFormat;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const MismatchError& e) {
    err << "error: " << e.what() << '\n';
    return kVideoMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Saliency-guided RoI selection and event-spotting evaluation"};
  app.name(args.empty() ? "roispot" : args.front());
  app.require_subcommand(1);
  Settings s;
  std::function<int()> action;

  // saliency
  std::string input, output, output_dir;
  auto* saliency = app.add_subcommand("saliency", "Features (rank 4) to probability saliency (rank 3)");
  saliency->add_option("--input", input, "Feature volume (ASV1)")->required();
  saliency->add_option("--output", output, "Saliency volume (ASV1)")->required();
  add_common(saliency, s);
  add_saliency_flags(saliency, s);
  saliency->callback([&] {
    action = [&] {
      const PipelineConfig cfg = s.resolve();
      const auto features = to_feature_volume(read_tensor(input));
      const auto sal = build_saliency(features, cfg.saliency, s.threads);
      write_volume(sal, output);
      if (s.json_output) {
        out << json{{"frames", sal.frames()}, {"height", sal.height()}, {"width", sal.width()},
                    {"stage", to_string(sal.stage())}}
                   .dump()
            << '\n';
      } else {
        out << "wrote " << sal.frames() << "x" << sal.height() << "x" << sal.width() << " probability saliency to "
            << output << '\n';
      }
      return int{kOk};
    };
  });

  // select-roi
  auto* select = app.add_subcommand("select-roi", "Probability saliency to one RoI per frame (JSON Lines)");
  select->add_option("--input", input, "Probability saliency (ASV1)")->required();
  select->add_option("--output", output, "RoI track (JSON Lines)")->required();
  add_common(select, s);
  add_roi_flags(select, s);
  select->callback([&] {
    action = [&] {
      const PipelineConfig cfg = s.resolve();
      const auto track = select_rois(read_probability_saliency(input), cfg.roi, cfg.geometry, s.threads);
      write_rois(track.rois, output);
      if (s.json_output) {
        out << json{{"frames", track.rois.size()}, {"frame_w", cfg.geometry.high_w}, {"frame_h", cfg.geometry.high_h}}
                   .dump()
            << '\n';
      } else {
        out << "wrote " << track.rois.size() << " RoIs to " << output << '\n';
      }
      return int{kOk};
    };
  });

  // crop
  std::string rois_path;
  auto* crop = app.add_subcommand("crop", "Crop and resample RoIs from high-resolution frames");
  crop->add_option("--input", input, "Frames [L][H][W][C] (ASV1)")->required();
  crop->add_option("--rois", rois_path, "RoI track (JSON Lines)")->required();
  crop->add_option("--output", output, "Patches [L][H_r][W_r][C] (ASV1)")->required();
  add_common(crop, s);
  add_roi_flags(crop, s);
  crop->callback([&] {
    action = [&] {
      const PipelineConfig cfg = s.resolve();
      const auto frames = to_feature_volume(read_tensor(input));
      const auto patches = crop_all(frames, read_rois(rois_path), cfg.roi.min_w, cfg.roi.min_h, s.threads);
      write_volume(patches, output);
      out << (s.json_output ? json{{"frames", patches.frames()}, {"w", cfg.roi.min_w}, {"h", cfg.roi.min_h}}.dump()
                            : "wrote " + std::to_string(patches.frames()) + " patches to " + output)
          << '\n';
      return int{kOk};
    };
  });

  // softnms
  std::string classes_path, video = "video";
  auto* softnms = app.add_subcommand("softnms", "Per-class temporal suppression of a score sequence");
  softnms->add_option("--input", input, "Scores [T][C+1] probabilities (ASV1)")->required();
  softnms->add_option("--output", output, "Detections (JSON Lines)")->required();
  softnms->add_option("--classes", classes_path, "Class vocabulary (JSON array)")->required();
  softnms->add_option("--video", video, "Video id written with each detection");
  add_common(softnms, s);
  add_nms_flags(softnms, s);
  softnms->callback([&] {
    action = [&] {
      const PipelineConfig cfg = s.resolve();
      const ClassList classes = read_class_list(classes_path);
      const auto scores = to_score_sequence(read_tensor(input), true);
      if (scores.num_classes() != classes.size()) throw ValidationError("score columns do not match the class list");
      const std::vector<EventSet> dets{extract_detections(scores, cfg.nms, video, s.threads)};
      write_events(dets, classes, output);
      out << (s.json_output ? json{{"detections", dets.front().events.size()}}.dump()
                            : "wrote " + std::to_string(dets.front().events.size()) + " detections to " + output)
          << '\n';
      return int{kOk};
    };
  });

  // eval
  std::string gt_path, csv_path;
  auto* evalc = app.add_subcommand("eval", "mAP at each tolerance");
  evalc->add_option("--input", input, "Detections (JSON Lines)")->required();
  evalc->add_option("--gt", gt_path, "Ground-truth events (JSON Lines)")->required();
  evalc->add_option("--classes", classes_path, "Class vocabulary (JSON array)")->required();
  evalc->add_option("--csv", csv_path, "Also write the per-class table as CSV");
  add_common(evalc, s);
  add_eval_flags(evalc, s);
  evalc->callback([&] {
    action = [&] {
      const PipelineConfig cfg = s.resolve();
      const ClassList classes = read_class_list(classes_path);
      const auto dets = read_events(input, classes);
      const auto gt = read_events(gt_path, classes);
      const auto reports = evaluate(dets, gt, cfg.eval, s.threads);
      if (!csv_path.empty()) write_report_csv(csv_path, reports, classes);
      if (s.json_output) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_json(r, classes));
        out << arr.dump() << '\n';
      } else {
        print_report_table(out, reports, classes, cfg.eval.unit);
      }
      return int{kOk};
    };
  });

  // synth
  SynthConfig synth_cfg;
  std::string grid = "10x10", trajectory = "bounce";
  std::vector<double> velocity, start;
  bool write_scores = false;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic blob scene with ground truth");
  synth->add_option("--output-dir", output_dir, "Directory for the scene files")->required();
  synth->add_option("--seed", synth_cfg.seed, "Generator seed");
  synth->add_option("--frames", synth_cfg.frames, "Clip length");
  synth->add_option("--grid", grid, "Feature grid size, WxH");
  synth->add_option("--channels", synth_cfg.channels, "Feature channels");
  synth->add_option("--blob-sigma", synth_cfg.blob_sigma, "Blob sigma, grid cells");
  synth->add_option("--trajectory", trajectory, "static, linear, or bounce");
  synth->add_option("--start", start, "Blob start x,y")->expected(2)->delimiter(',');
  synth->add_option("--velocity", velocity, "Blob velocity vx,vy in cells/frame")->expected(2)->delimiter(',');
  synth->add_option("--noise", synth_cfg.noise, "Uniform noise amplitude on inactive channels");
  synth->add_option("--active-fraction", synth_cfg.active_fraction, "Share of channels carrying the blob");
  synth->add_flag("--ideal-scores", write_scores, "Also write scores that peak at every ground-truth event");
  add_common(synth, s);
  synth->callback([&] {
    action = [&] {
      std::tie(synth_cfg.grid_w, synth_cfg.grid_h) = parse_size(grid);
      synth_cfg.trajectory = parse_trajectory(trajectory);
      if (!start.empty()) {
        synth_cfg.start_x = start[0];
        synth_cfg.start_y = start[1];
      }
      if (!velocity.empty()) std::tie(synth_cfg.velocity_x, synth_cfg.velocity_y) = std::pair{velocity[0], velocity[1]};
      const fs::path dir(output_dir);
      std::error_code ec;
      fs::create_directories(dir, ec);
      if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
      const Scene scene = gen_scene(synth_cfg, "synth");
      const ClassList classes{"bounce"};
      write_volume(scene.features, dir / "features.asv");
      write_class_list(classes, dir / "classes.json");
      write_events(std::vector<EventSet>{scene.truth.events}, classes, dir / "gt.jsonl");
      write_file(dir / "truth.json", truth_json(scene.truth).dump(2) + "\n");
      if (write_scores) {
        write_volume(ideal_scores(scene.truth.events, synth_cfg.frames, 1), dir / "scores.asv");
      }
      if (s.json_output) {
        out << json{{"frames", synth_cfg.frames}, {"events", scene.truth.events.events.size()},
                    {"dir", dir.string()}}
                   .dump()
            << '\n';
      } else {
        out << "wrote scene with " << scene.truth.events.events.size() << " events to " << dir.string() << '\n';
      }
      return int{kOk};
    };
  });

  // cost
  std::vector<std::string> resolutions;
  std::string reference;
  double ref_gflops = 0.0;
  auto* cost = app.add_subcommand("cost", "Pixel-proportional compute estimate");
  cost->add_option("--res", resolutions, "Processed resolution WxH (repeatable)")->required();
  cost->add_option("--ref", reference, "Reference resolution WxH")->required();
  auto* gflops_opt = cost->add_option("--ref-gflops", ref_gflops, "GFLOPs of the reference configuration");
  add_common(cost, s);
  cost->callback([&] {
    action = [&] {
      std::vector<std::pair<int, int>> res;
      for (const auto& r : resolutions) res.push_back(parse_size(r));
      const double ratio = cost_ratio(res, parse_size(reference));
      const bool with_gflops = gflops_opt->count() > 0;
      if (s.json_output) {
        json j = {{"ratio", ratio}};
        if (with_gflops) j["gflops"] = ratio * ref_gflops;
        out << j.dump() << '\n';
      } else {
        out << "ratio " << format_number(ratio) << '\n';
        if (with_gflops) out << "gflops " << format_number(ratio * ref_gflops) << '\n';
      }
      return int{kOk};
    };
  });

  // pipeline
  std::string frames_path, scores_path;
  auto* pipeline = app.add_subcommand("pipeline", "saliency -> select-roi -> [crop] -> [softnms -> eval]");
  pipeline->add_option("--input", input, "Feature volume (ASV1)")->required();
  pipeline->add_option("--output-dir", output_dir, "Directory for every stage's output")->required();
  pipeline->add_option("--frames", frames_path, "High-resolution frames to crop (ASV1)");
  pipeline->add_option("--scores", scores_path, "Per-frame class probabilities (ASV1)");
  pipeline->add_option("--classes", classes_path, "Class vocabulary (JSON array)");
  pipeline->add_option("--gt", gt_path, "Ground-truth events (JSON Lines)");
  pipeline->add_option("--video", video, "Video id for detections");
  add_common(pipeline, s);
  add_saliency_flags(pipeline, s);
  add_roi_flags(pipeline, s);
  add_nms_flags(pipeline, s);
  add_eval_flags(pipeline, s);
  pipeline->callback([&] {
    action = [&] {
      const PipelineConfig cfg = s.resolve();
      const fs::path dir(output_dir);
      std::error_code ec;
      fs::create_directories(dir, ec);
      if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());

      json summary;
      const auto features = to_feature_volume(read_tensor(input));
      const auto sal = build_saliency(features, cfg.saliency, s.threads);
      write_volume(sal, dir / "saliency.asv");
      const auto track = select_rois(sal, cfg.roi, cfg.geometry, s.threads);
      write_rois(track.rois, dir / "rois.jsonl");
      summary["frames"] = sal.frames();
      summary["rois"] = track.rois.size();

      if (!frames_path.empty()) {
        const auto frames = to_feature_volume(read_tensor(frames_path));
        write_volume(crop_all(frames, roi_list(track), cfg.roi.min_w, cfg.roi.min_h, s.threads), dir / "patches.asv");
        summary["patches"] = frames.frames();
      }
      if (!scores_path.empty()) {
        if (classes_path.empty()) throw ValidationError("--scores needs --classes");
        const ClassList classes = read_class_list(classes_path);
        const auto scores = to_score_sequence(read_tensor(scores_path), true);
        if (scores.num_classes() != classes.size()) throw ValidationError("score columns do not match the class list");
        const std::vector<EventSet> dets{extract_detections(scores, cfg.nms, video, s.threads)};
        write_events(dets, classes, dir / "detections.jsonl");
        summary["detections"] = dets.front().events.size();
        if (!gt_path.empty()) {
          const auto reports = evaluate(dets, read_events(gt_path, classes), cfg.eval, s.threads);
          json arr = json::array();
          for (const auto& r : reports) arr.push_back(report_json(r, classes));
          write_file(dir / "report.json", arr.dump(2) + "\n");
          summary["reports"] = arr;
          if (!s.json_output) print_report_table(out, reports, classes, cfg.eval.unit);
        }
      }
      if (s.json_output) out << summary.dump() << '\n';
      return int{kOk};
    };
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("roispot");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  return action ? guarded(err, action) : kUsage;
}

}  // namespace roispot::cli
