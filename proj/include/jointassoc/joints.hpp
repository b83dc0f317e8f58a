// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace jointassoc {

inline constexpr std::size_t kJointCount = 14;

/// Keypoint order used by every data structure and file format.
enum class Joint : std::size_t {
  kLeftShoulder = 0,
  kRightShoulder,
  kLeftElbow,
  kRightElbow,
  kLeftWrist,
  kRightWrist,
  kLeftHip,
  kRightHip,
  kLeftKnee,
  kRightKnee,
  kLeftAnkle,
  kRightAnkle,
  kHeadTop,
  kNeck,
};

inline constexpr std::array<std::string_view, kJointCount> kJointNames = {
    "left_shoulder", "right_shoulder", "left_elbow", "right_elbow", "left_wrist",
    "right_wrist",   "left_hip",       "right_hip",  "left_knee",  "right_knee",
    "left_ankle",    "right_ankle",    "head_top",   "neck"};

/// Per-keypoint constants shared by the grouping radius and OKS. Shoulders,
/// elbows, wrists, hips, knees and ankles use the MSCOCO keypoint values; the
/// head top and neck borrow the shoulder value.
inline constexpr std::array<double, kJointCount> kKeypointSigmas = {
    0.079, 0.079, 0.072, 0.072, 0.062, 0.062, 0.107, 0.107, 0.087, 0.087, 0.089, 0.089, 0.079, 0.079};

using JointTable = std::array<double, kJointCount>;

struct JointSpec {
  std::array<std::string_view, kJointCount> names = kJointNames;
  /// Control deviation per joint type, dimensionless.
  JointTable delta = kKeypointSigmas;

  /// Throws std::invalid_argument unless every delta is positive and finite.
  void validate() const;
};

}  // namespace jointassoc
