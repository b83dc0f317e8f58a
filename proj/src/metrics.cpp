// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "jointassoc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "jointassoc/error.hpp"

namespace jointassoc {

std::size_t GroundTruthPerson::labeled_count() const {
  return static_cast<std::size_t>(
      std::count_if(keypoints.begin(), keypoints.end(), [](const LabeledJoint& j) { return j.labeled(); }));
}

void SceneAnnotation::validate() const {
  std::set<int> ids;
  for (const auto& p : persons) {
    if (!ids.insert(p.person_id).second) {
      throw IntegrityError(fmt::format("image {}: duplicate person id {}", image_id, p.person_id));
    }
    if (!(p.bbox.area() > 0.0)) {
      throw std::invalid_argument(fmt::format("image {}: person {} has an empty box", image_id, p.person_id));
    }
  }
}

double compute_oks(const Pose& pred, const GroundTruthPerson& gt, const JointTable& sigmas) {
  const double area = gt.bbox.area();
  double sum = 0.0;
  std::size_t labeled = 0;
  for (std::size_t k = 0; k < kJointCount; ++k) {
    if (!gt.keypoints[k].labeled()) continue;
    ++labeled;
    const auto& kp = pred.keypoints[k];
    if (!kp) continue;
    const double kappa = 2.0 * sigmas[k];
    const double d2 = squared_distance(kp->location, gt.keypoints[k].location);
    sum += std::exp(-d2 / (2.0 * area * kappa * kappa));
  }
  if (labeled == 0) {
    throw UndefinedError(fmt::format("OKS undefined: person {} has no labeled joints", gt.person_id));
  }
  return sum / static_cast<double>(labeled);
}

double crowd_index(const SceneAnnotation& scene) {
  double ratio_sum = 0.0;
  std::size_t counted = 0;
  for (std::size_t i = 0; i < scene.persons.size(); ++i) {
    const GroundTruthPerson& self = scene.persons[i];
    std::size_t own = 0;
    std::size_t foreign = 0;
    for (std::size_t p = 0; p < scene.persons.size(); ++p) {
      for (const LabeledJoint& j : scene.persons[p].keypoints) {
        if (!j.labeled() || !self.bbox.contains(j.location)) continue;
        (p == i ? own : foreign) += 1;
      }
    }
    if (own == 0) continue;
    ratio_sum += static_cast<double>(foreign) / static_cast<double>(own);
    ++counted;
  }
  if (counted == 0) {
    throw UndefinedError(fmt::format("crowd index undefined for image {}: no person has labeled joints in its box",
                                     scene.image_id));
  }
  return ratio_sum / static_cast<double>(counted);
}

std::string_view to_string(CrowdLevel level) {
  switch (level) {
    case CrowdLevel::kEasy:
      return "easy";
    case CrowdLevel::kMedium:
      return "medium";
    case CrowdLevel::kHard:
      return "hard";
  }
  return "unknown";
}

CrowdLevel crowding_level(double index) {
  if (!(index >= 0.0)) {
    throw std::invalid_argument(fmt::format("crowd index must be >= 0, got {}", index));
  }
  if (index <= 0.1) return CrowdLevel::kEasy;
  if (index <= 0.8) return CrowdLevel::kMedium;
  return CrowdLevel::kHard;
}

double average_bbox_iou(std::span<const SceneAnnotation> scenes) {
  double image_sum = 0.0;
  std::size_t images = 0;
  for (const auto& scene : scenes) {
    const auto& ps = scene.persons;
    if (ps.size() < 2) continue;
    double pair_sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < ps.size(); ++a) {
      for (std::size_t b = a + 1; b < ps.size(); ++b) {
        pair_sum += iou(ps[a].bbox, ps[b].bbox);
        ++pairs;
      }
    }
    image_sum += pair_sum / static_cast<double>(pairs);
    ++images;
  }
  if (images == 0) {
    throw UndefinedError("average bbox IoU undefined: no image has two or more persons");
  }
  return image_sum / static_cast<double>(images);
}

std::vector<double> default_oks_thresholds() {
  std::vector<double> t;
  for (int i = 0; i < 10; ++i) t.push_back(0.5 + 0.05 * i);
  return t;
}

namespace {

struct ImageEval {
  int image_id = 0;
  std::optional<CrowdLevel> level;
  std::size_t gt_count = 0;
  std::vector<double> scores;
  /// matched[t][d]: detection d is a true positive at threshold t.
  std::vector<std::vector<char>> matched;
};

ImageEval evaluate_image(const SceneAnnotation& scene, std::vector<Pose> dets, const EvalOptions& options) {
  ImageEval ev;
  ev.image_id = scene.image_id;
  try {
    ev.level = crowding_level(crowd_index(scene));
  } catch (const UndefinedError&) {
    ev.level.reset();
  }

  std::vector<const GroundTruthPerson*> gts;
  for (const auto& p : scene.persons) {
    if (p.labeled_count() > 0) gts.push_back(&p);
  }
  ev.gt_count = gts.size();

  std::stable_sort(dets.begin(), dets.end(), [](const Pose& a, const Pose& b) { return a.score > b.score; });
  if (dets.size() > options.max_detections) dets.resize(options.max_detections);
  for (const auto& d : dets) ev.scores.push_back(d.score);

  std::vector<std::vector<double>> oks(dets.size(), std::vector<double>(gts.size(), 0.0));
  for (std::size_t d = 0; d < dets.size(); ++d) {
    for (std::size_t g = 0; g < gts.size(); ++g) oks[d][g] = compute_oks(dets[d], *gts[g], options.sigmas);
  }

  for (double t : options.thresholds) {
    std::vector<char> gt_taken(gts.size(), 0);
    std::vector<char> tp(dets.size(), 0);
    for (std::size_t d = 0; d < dets.size(); ++d) {
      double best = std::min(t, 1.0 - 1e-10);
      std::size_t match = gts.size();
      for (std::size_t g = 0; g < gts.size(); ++g) {
        if (gt_taken[g] || oks[d][g] < best) continue;
        if (match == gts.size() || oks[d][g] > best) {
          best = oks[d][g];
          match = g;
        }
      }
      if (match != gts.size()) {
        gt_taken[match] = 1;
        tp[d] = 1;
      }
    }
    ev.matched.push_back(std::move(tp));
  }
  return ev;
}

struct ApAr {
  double ap = 0.0;
  double ar = 0.0;
};

// 101-point interpolated precision over the detections pooled from `images`.
ApAr accumulate(const std::vector<const ImageEval*>& images, std::size_t threshold_index) {
  std::size_t gt_total = 0;
  std::vector<std::pair<double, char>> dets;
  for (const ImageEval* ev : images) {
    gt_total += ev->gt_count;
    for (std::size_t d = 0; d < ev->scores.size(); ++d) {
      dets.emplace_back(ev->scores[d], ev->matched[threshold_index][d]);
    }
  }
  if (gt_total == 0) return {};
  std::stable_sort(dets.begin(), dets.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

  std::vector<double> recall(dets.size());
  std::vector<double> precision(dets.size());
  double tp = 0.0;
  double fp = 0.0;
  for (std::size_t i = 0; i < dets.size(); ++i) {
    (dets[i].second ? tp : fp) += 1.0;
    recall[i] = tp / static_cast<double>(gt_total);
    precision[i] = tp / (tp + fp);
  }
  for (std::size_t i = precision.size(); i-- > 1;) {
    precision[i - 1] = std::max(precision[i - 1], precision[i]);
  }
  double sum = 0.0;
  for (int r = 0; r <= 100; ++r) {
    const double level = r / 100.0;
    auto it = std::lower_bound(recall.begin(), recall.end(), level);
    if (it != recall.end()) sum += precision[static_cast<std::size_t>(it - recall.begin())];
  }
  return {sum / 101.0, recall.empty() ? 0.0 : recall.back()};
}

}  // namespace

EvalReport evaluate(std::span<const ImagePoses> predictions, std::span<const SceneAnnotation> annotations,
                    const EvalOptions& options_in) {
  EvalOptions options = options_in;
  if (options.thresholds.empty()) options.thresholds = default_oks_thresholds();

  std::map<int, const SceneAnnotation*> scenes;
  for (const auto& a : annotations) {
    a.validate();
    if (!scenes.emplace(a.image_id, &a).second) {
      throw IntegrityError(fmt::format("image {} annotated twice", a.image_id));
    }
  }
  std::map<int, std::vector<Pose>> dets;
  for (const auto& p : predictions) {
    if (!scenes.contains(p.image_id)) {
      throw IntegrityError(fmt::format("predictions reference unknown image {}", p.image_id));
    }
    auto& bucket = dets[p.image_id];
    bucket.insert(bucket.end(), p.poses.begin(), p.poses.end());
  }

  std::vector<ImageEval> evals;
  evals.reserve(scenes.size());
  EvalReport report;
  for (const auto& [id, scene] : scenes) {
    auto it = dets.find(id);
    evals.push_back(evaluate_image(*scene, it == dets.end() ? std::vector<Pose>{} : it->second, options));
    report.ground_truths += evals.back().gt_count;
    report.detections += evals.back().scores.size();
  }
  report.images = evals.size();

  auto mean_over_thresholds = [&](const std::vector<const ImageEval*>& subset) {
    std::vector<ApAr> per;
    for (std::size_t t = 0; t < options.thresholds.size(); ++t) per.push_back(accumulate(subset, t));
    return per;
  };

  std::vector<const ImageEval*> all;
  for (const auto& ev : evals) all.push_back(&ev);
  const std::vector<ApAr> per = mean_over_thresholds(all);
  double ap_sum = 0.0;
  double ar_sum = 0.0;
  for (const auto& x : per) {
    ap_sum += x.ap;
    ar_sum += x.ar;
  }
  const auto n = static_cast<double>(per.size());
  report.map_50_95 = ap_sum / n;
  report.mar_50_95 = ar_sum / n;
  auto at = [&](double t) -> std::optional<ApAr> {
    for (std::size_t i = 0; i < options.thresholds.size(); ++i) {
      if (std::abs(options.thresholds[i] - t) < 1e-9) return per[i];
    }
    return std::nullopt;
  };
  if (auto x = at(0.5)) {
    report.map_50 = x->ap;
    report.mar_50 = x->ar;
  }
  if (auto x = at(0.75)) {
    report.map_75 = x->ap;
    report.mar_75 = x->ar;
  }

  for (CrowdLevel level : {CrowdLevel::kEasy, CrowdLevel::kMedium, CrowdLevel::kHard}) {
    std::vector<const ImageEval*> subset;
    std::size_t gt = 0;
    for (const auto& ev : evals) {
      if (ev.level == level) {
        subset.push_back(&ev);
        gt += ev.gt_count;
      }
    }
    std::optional<double> ap;
    if (gt > 0) {
      double s = 0.0;
      for (const auto& x : mean_over_thresholds(subset)) s += x.ap;
      ap = s / n;
    }
    switch (level) {
      case CrowdLevel::kEasy:
        report.ap_easy = ap;
        break;
      case CrowdLevel::kMedium:
        report.ap_medium = ap;
        break;
      case CrowdLevel::kHard:
        report.ap_hard = ap;
        break;
    }
  }
  return report;
}

}  // namespace jointassoc
