// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>

#include "jointassoc/geometry.hpp"
#include "jointassoc/joints.hpp"

namespace jointassoc {

struct Keypoint {
  Point location;
  double score = 0.0;

  friend bool operator==(const Keypoint&, const Keypoint&) = default;
};

struct Pose {
  int proposal_id = 0;
  std::array<std::optional<Keypoint>, kJointCount> keypoints{};
  double score = 0.0;

  std::size_t present_count() const {
    std::size_t n = 0;
    for (const auto& kp : keypoints) n += kp.has_value() ? 1 : 0;
    return n;
  }

  /// Mean of present keypoint scores; 0 for an empty pose.
  double mean_keypoint_score() const {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& kp : keypoints) {
      if (kp) {
        sum += kp->score;
        ++n;
      }
    }
    return n == 0 ? 0.0 : sum / static_cast<double>(n);
  }

  friend bool operator==(const Pose&, const Pose&) = default;
};

}  // namespace jointassoc
