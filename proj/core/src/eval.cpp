#include "roispot/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "roispot/error.hpp"
#include "roispot/parallel.hpp"

namespace roispot {

void EvalConfig::validate() const {
  if (tolerances.empty()) throw ValidationError("at least one tolerance is required");
  for (std::size_t i = 0; i < tolerances.size(); ++i) {
    if (!(tolerances[i] >= 0.0) || !std::isfinite(tolerances[i])) throw ValidationError("tolerances must be >= 0");
    if (i > 0 && tolerances[i] < tolerances[i - 1]) throw ValidationError("tolerances must be sorted ascending");
    if (unit == ToleranceUnit::frames && tolerances[i] != std::floor(tolerances[i])) {
      throw ValidationError("frame tolerances must be integers");
    }
  }
  if (unit == ToleranceUnit::seconds && !(fps > 0.0)) throw ValidationError("fps must be > 0 for second tolerances");
}

std::int64_t EvalConfig::tolerance_frames(std::size_t i) const {
  const double d = tolerances.at(i);
  if (unit == ToleranceUnit::frames) return static_cast<std::int64_t>(d);
  return static_cast<std::int64_t>(std::floor(d * fps + 0.5));
}

MatchResult match_detections(std::span<const Event> detections, std::span<const Event> ground_truth,
                             std::int64_t delta) {
  MatchResult result;
  result.order.resize(detections.size());
  std::iota(result.order.begin(), result.order.end(), std::size_t{0});
  std::stable_sort(result.order.begin(), result.order.end(), [&](std::size_t a, std::size_t b) {
    const double sa = detections[a].score.value_or(0.0), sb = detections[b].score.value_or(0.0);
    if (sa != sb) return sa > sb;
    return detections[a].frame < detections[b].frame;
  });

  std::vector<bool> claimed(ground_truth.size(), false);
  result.true_positive.reserve(detections.size());
  for (std::size_t idx : result.order) {
    const Event& det = detections[idx];
    std::size_t best = ground_truth.size();
    std::int64_t best_gap = 0;
    for (std::size_t g = 0; g < ground_truth.size(); ++g) {
      const Event& gt = ground_truth[g];
      if (claimed[g] || gt.label != det.label) continue;
      const std::int64_t gap = std::abs(det.frame - gt.frame);
      if (gap > delta) continue;
      if (best == ground_truth.size() || gap < best_gap ||
          (gap == best_gap && gt.frame < ground_truth[best].frame)) {
        best = g;
        best_gap = gap;
      }
    }
    if (best != ground_truth.size()) claimed[best] = true;
    result.true_positive.push_back(best != ground_truth.size());
  }
  return result;
}

double average_precision(const std::vector<bool>& ranked_flags, int ground_truth) {
  if (ground_truth <= 0) return 0.0;
  const std::size_t n = ranked_flags.size();
  std::vector<double> precision(n);
  int tp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    tp += ranked_flags[i] ? 1 : 0;
    precision[i] = static_cast<double>(tp) / static_cast<double>(i + 1);
  }
  for (std::size_t i = n; i-- > 1;) precision[i - 1] = std::max(precision[i - 1], precision[i]);
  double ap = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (ranked_flags[i]) ap += precision[i] / ground_truth;
  }
  return std::min(ap, 1.0);
}

namespace {

struct ScoredFlag {
  double score;
  std::size_t video;
  std::int64_t frame;
  bool true_positive;
};

ApReport evaluate_at(std::span<const EventSet> detections, std::span<const EventSet> ground_truth,
                     const std::vector<std::size_t>& gt_slot_of_det, std::int64_t delta) {
  ApReport report;
  std::map<int, std::vector<ScoredFlag>> ranked;
  for (const EventSet& set : ground_truth) {
    for (const Event& e : set.events) ++report.counts[e.label].ground_truth;
  }
  for (std::size_t v = 0; v < detections.size(); ++v) {
    const auto& dets = detections[v].events;
    const std::size_t slot = gt_slot_of_det[v];
    const auto gt = slot < ground_truth.size() ? std::span<const Event>(ground_truth[slot].events)
                                               : std::span<const Event>();
    const MatchResult match = match_detections(dets, gt, delta);
    for (std::size_t i = 0; i < match.order.size(); ++i) {
      const Event& d = dets[match.order[i]];
      ranked[d.label].push_back({d.score.value_or(0.0), slot, d.frame, match.true_positive[i]});
    }
  }

  double sum = 0.0;
  int classes = 0;
  for (auto& [label, counts] : report.counts) {
    auto& flags = ranked[label];
    std::sort(flags.begin(), flags.end(), [](const ScoredFlag& a, const ScoredFlag& b) {
      return std::tie(b.score, a.video, a.frame, b.true_positive) < std::tie(a.score, b.video, b.frame, a.true_positive);
    });
    std::vector<bool> tp(flags.size());
    for (std::size_t i = 0; i < flags.size(); ++i) {
      tp[i] = flags[i].true_positive;
      (flags[i].true_positive ? counts.true_positives : counts.false_positives)++;
    }
    const double ap = average_precision(tp, counts.ground_truth);
    report.per_class_ap[label] = ap;
    sum += ap;
    ++classes;
  }
  for (auto& [label, flags] : ranked) {
    if (report.counts.count(label) == 0) report.counts[label].false_positives = static_cast<int>(flags.size());
  }
  report.mean_ap = classes > 0 ? sum / classes : 0.0;
  return report;
}

}  // namespace

std::vector<ApReport> evaluate(std::span<const EventSet> detections, std::span<const EventSet> ground_truth,
                               const EvalConfig& config, int threads) {
  config.validate();
  std::map<std::string, std::size_t> gt_slot;
  for (std::size_t i = 0; i < ground_truth.size(); ++i) {
    if (!gt_slot.emplace(ground_truth[i].video, i).second) {
      throw ValidationError("duplicate ground-truth video '" + ground_truth[i].video + "'");
    }
  }
  std::vector<std::size_t> slot_of_det;
  std::set<std::string> seen;
  for (const EventSet& set : detections) {
    auto it = gt_slot.find(set.video);
    if (it == gt_slot.end()) throw MismatchError("detections for unknown video '" + set.video + "'");
    if (!seen.insert(set.video).second) throw ValidationError("duplicate detection video '" + set.video + "'");
    slot_of_det.push_back(it->second);
  }

  std::vector<ApReport> reports(config.tolerances.size());
  parallel_for(reports.size(), threads, [&](std::size_t i) {
    reports[i] = evaluate_at(detections, ground_truth, slot_of_det, config.tolerance_frames(i));
    reports[i].delta = config.tolerances[i];
    reports[i].delta_frames = config.tolerance_frames(i);
  });
  return reports;
}

double cost_ratio(std::span<const std::pair<int, int>> resolutions, std::pair<int, int> reference) {
  if (reference.first < 1 || reference.second < 1) throw ValidationError("reference resolution must be positive");
  double pixels = 0.0;
  for (const auto& [w, h] : resolutions) {
    if (w < 1 || h < 1) throw ValidationError("resolutions must be positive");
    pixels += static_cast<double>(w) * h;
  }
  return pixels / (static_cast<double>(reference.first) * reference.second);
}

}  // namespace roispot
