// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "jointassoc/geometry.hpp"
#include "jointassoc/joints.hpp"
#include "jointassoc/pose.hpp"

namespace jointassoc {

/// Visibility flags of the annotation format.
enum class Visibility : int { kUnlabeled = 0, kOccluded = 1, kVisible = 2 };

struct LabeledJoint {
  Point location;
  Visibility visibility = Visibility::kVisible;

  bool labeled() const { return visibility != Visibility::kUnlabeled; }

  friend bool operator==(const LabeledJoint&, const LabeledJoint&) = default;
};

struct GroundTruthPerson {
  int person_id = 0;
  BBox bbox;
  std::array<LabeledJoint, kJointCount> keypoints{};

  std::size_t labeled_count() const;

  friend bool operator==(const GroundTruthPerson&, const GroundTruthPerson&) = default;
};

struct SceneAnnotation {
  int image_id = 0;
  int width = 0;
  int height = 0;
  std::vector<GroundTruthPerson> persons;

  /// Throws IntegrityError on repeated person ids, std::invalid_argument on empty boxes.
  void validate() const;

  friend bool operator==(const SceneAnnotation&, const SceneAnnotation&) = default;
};

/// Object keypoint similarity with s^2 = gt box area and kappa = 2 * sigma.
/// Absent predicted joints score 0 against labeled gt joints.
/// Throws UndefinedError when the gt has no labeled joint.
double compute_oks(const Pose& pred, const GroundTruthPerson& gt, const JointTable& sigmas = kKeypointSigmas);

/// Crowd Index: mean over persons of (foreign labeled joints in own box) /
/// (own labeled joints in own box). Persons with no own joint in their box are
/// skipped. Throws UndefinedError when every person is skipped.
double crowd_index(const SceneAnnotation& scene);

enum class CrowdLevel { kEasy, kMedium, kHard };

std::string_view to_string(CrowdLevel level);

/// Easy for [0, 0.1], Medium for (0.1, 0.8], Hard above 0.8.
CrowdLevel crowding_level(double index);

/// Mean pairwise box IoU per image, averaged over images with at least two
/// persons. Throws UndefinedError when no such image exists.
double average_bbox_iou(std::span<const SceneAnnotation> scenes);

struct ImagePoses {
  int image_id = 0;
  std::vector<Pose> poses;

  friend bool operator==(const ImagePoses&, const ImagePoses&) = default;
};

struct EvalOptions {
  /// OKS thresholds; defaults to 0.50:0.05:0.95.
  std::vector<double> thresholds;
  std::size_t max_detections = 20;
  JointTable sigmas = kKeypointSigmas;
};

struct EvalReport {
  double map_50_95 = 0.0;
  double map_50 = 0.0;
  double map_75 = 0.0;
  double mar_50_95 = 0.0;
  double mar_50 = 0.0;
  double mar_75 = 0.0;
  /// Mean AP over thresholds restricted to images of each crowding level;
  /// empty when the level holds no evaluable ground truth.
  std::optional<double> ap_easy;
  std::optional<double> ap_medium;
  std::optional<double> ap_hard;
  std::size_t images = 0;
  std::size_t ground_truths = 0;
  std::size_t detections = 0;
};

std::vector<double> default_oks_thresholds();

/// COCO-style keypoint AP/AR. Throws IntegrityError when a prediction names an
/// image without annotation.
EvalReport evaluate(std::span<const ImagePoses> predictions, std::span<const SceneAnnotation> annotations,
                    const EvalOptions& options = {});

}  // namespace jointassoc
