// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "jointassoc/graph.hpp"
#include "jointassoc/grouping.hpp"
#include "jointassoc/joints.hpp"
#include "jointassoc/pose.hpp"
#include "jointassoc/simulator.hpp"
#include "jointassoc/solver.hpp"

namespace jointassoc {

enum class Method {
  kGlobal,   ///< per-type maximum-weight matching
  kGreedy,   ///< each proposal takes its top candidate per type
  kBboxNms,  ///< box NMS over proposals, then greedy
  kPoseNms,  ///< greedy, then OKS pose suppression
};

std::string_view to_string(Method method);
/// Accepts "global", "greedy", "bbox-nms", "pose-nms"; throws std::invalid_argument otherwise.
Method parse_method(std::string_view name);

struct PipelineOptions {
  Method method = Method::kGlobal;
  JointSpec joints;
  /// Pixels per unit of delta; <= 0 derives it per image from the proposals.
  double delta_scale = 0.0;
  /// Box growth the proposals carry, undone when deriving delta_scale.
  double box_extension = 0.3;
  double bbox_nms_iou = 0.5;
  double oks_dedup = 0.7;
  JointTable oks_sigmas = kKeypointSigmas;
};

struct AssociationResult {
  PersonJointGraph graph;
  /// Position in the caller's candidate list of each grouped candidate.
  std::vector<std::size_t> input_index;
  /// Edges the method kept. For greedy methods nodes may repeat.
  std::vector<Selection> selections;
  std::vector<Pose> poses;
  /// Matching weight; for greedy methods each node counts once at its strongest claim.
  double total_weight = 0.0;
};

/// sqrt of the median proposal area with the box extension removed.
double auto_delta_scale(std::span<const PersonProposal> proposals, double box_extension);

/// group_candidates -> build_graph -> method -> poses.
AssociationResult associate(std::span<const PersonProposal> proposals, std::span<const CandidateJoint> candidates,
                            const PipelineOptions& options = {});

struct AccuracyStats {
  std::size_t assigned = 0;
  std::size_t correct = 0;

  double accuracy() const { return assigned == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(assigned); }
  AccuracyStats& operator+=(const AccuracyStats& o) {
    assigned += o.assigned;
    correct += o.correct;
    return *this;
  }
};

/// Counts kept edges whose node is dominated (by summed response) by candidates
/// of the ground-truth person the proposal was simulated from. `result` must
/// come from associate() on scene.proposals and scene.candidates.
AccuracyStats association_accuracy(const AssociationResult& result, const SyntheticScene& scene);

}  // namespace jointassoc
