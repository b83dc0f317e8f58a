// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jointassoc/geometry.hpp"
#include "jointassoc/joints.hpp"

namespace jointassoc {

/// One scored keypoint hypothesis emitted for a proposal.
struct CandidateJoint {
  Point location;
  double response = 0.0;
  std::size_t joint_type = 0;
  int source_proposal = 0;
  /// Gaussian response size u in pixels.
  double response_size = 2.0;

  friend bool operator==(const CandidateJoint&, const CandidateJoint&) = default;
};

/// Cluster of same-type candidates standing for one physical joint.
struct JointNode {
  std::size_t node_id = 0;
  std::size_t joint_type = 0;
  std::vector<CandidateJoint> members;
  /// Position of each member in the grouped input list, ascending.
  std::vector<std::size_t> member_indices;
};

/// Candidates a and b share a node when |a - b| <= min(u_a, u_b) * delta_k.
/// Throws std::invalid_argument on mismatched joint types or non-positive delta_k.
bool same_group(const CandidateJoint& a, const CandidateJoint& b, double delta_k);

struct GroupingOptions {
  /// Pixels per unit of delta. The control radius of a pair is
  /// min(u_a, u_b) * delta[k] * delta_scale.
  double delta_scale = 1.0;
};

/// Connected components of same_group per joint type. Node ids ascend by
/// (joint_type, smallest member index); members keep input order.
std::vector<JointNode> group_candidates(std::span<const CandidateJoint> candidates, const JointSpec& spec,
                                        const GroupingOptions& options = {});

struct WeightedCenter {
  Point location;
  double score = 0.0;
};

/// Response-weighted mean location of the members; score is the best member response.
WeightedCenter weighted_center(const JointNode& node);

}  // namespace jointassoc
