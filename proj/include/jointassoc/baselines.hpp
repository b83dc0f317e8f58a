// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "jointassoc/graph.hpp"
#include "jointassoc/joints.hpp"
#include "jointassoc/pose.hpp"
#include "jointassoc/solver.hpp"

namespace jointassoc {

struct GreedyResult {
  std::vector<Pose> poses;
  /// Top edge chosen by each person per joint type; nodes may repeat across persons.
  std::vector<Selection> claims;
  /// Weight of the claims with every node counted once, at its strongest
  /// claim. This is the feasible matching the greedy choice induces.
  double total_weight = 0.0;
};

/// Each person independently keeps its highest-weight edge per joint type,
/// ignoring node exclusivity. Ties go to the lower node index.
GreedyResult greedy_baseline(const PersonJointGraph& graph);

/// Greedy box NMS by descending detection score (ties keep input order).
/// A proposal is dropped when its IoU with a kept one exceeds iou_threshold.
/// Throws std::invalid_argument unless 0 < iou_threshold < 1.
std::vector<PersonProposal> bbox_nms_baseline(std::span<const PersonProposal> proposals, double iou_threshold);

/// OKS between two poses, taking `reference` as ground truth with its
/// keypoint extent as the object box. 0 when either pose is empty.
double pose_similarity(const Pose& candidate, const Pose& reference, const JointTable& sigmas = kKeypointSigmas);

/// Greedy pose suppression by descending pose score with pose_similarity.
/// Throws std::invalid_argument unless 0 < oks_threshold < 1.
std::vector<Pose> pose_dedup_baseline(std::span<const Pose> poses, double oks_threshold,
                                      const JointTable& sigmas = kKeypointSigmas);

}  // namespace jointassoc
