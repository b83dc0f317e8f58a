// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "jointassoc/baselines.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "jointassoc/metrics.hpp"

namespace jointassoc {

GreedyResult greedy_baseline(const PersonJointGraph& graph) {
  graph.validate();
  GreedyResult result;
  // Edges are sorted by (type, person, node): one pass finds each person's best.
  const auto& edges = graph.edges;
  for (std::size_t e = 0; e < edges.size();) {
    std::size_t best = e;
    std::size_t f = e + 1;
    for (; f < edges.size() && edges[f].joint_type == edges[e].joint_type && edges[f].person == edges[e].person; ++f) {
      if (edges[f].weight > edges[best].weight) best = f;
    }
    result.claims.push_back({edges[best].joint_type, edges[best].person, edges[best].node, edges[best].weight});
    e = f;
  }

  // The induced matching keeps each node at its strongest claim (first claim
  // wins ties). Sum it like solve_graph does: by person within a type, then
  // type subtotals in ascending order.
  std::vector<std::size_t> owner(graph.nodes.size(), SIZE_MAX);
  for (std::size_t c = 0; c < result.claims.size(); ++c) {
    const Selection& s = result.claims[c];
    if (owner[s.node] == SIZE_MAX || s.weight > result.claims[owner[s.node]].weight) owner[s.node] = c;
  }
  for (std::size_t k = 0; k < kJointCount; ++k) {
    double subtotal = 0.0;
    for (std::size_t c = 0; c < result.claims.size(); ++c) {
      const Selection& s = result.claims[c];
      if (s.joint_type == k && owner[s.node] == c) subtotal += s.weight;
    }
    result.total_weight += subtotal;
  }

  Assignment as_assignment{result.claims, 0.0};
  result.poses = build_poses(as_assignment, graph);
  return result;
}

std::vector<PersonProposal> bbox_nms_baseline(std::span<const PersonProposal> proposals, double iou_threshold) {
  if (!(iou_threshold > 0.0 && iou_threshold < 1.0)) {
    throw std::invalid_argument(fmt::format("IoU threshold must lie in (0, 1), got {}", iou_threshold));
  }
  std::vector<std::size_t> order(proposals.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return proposals[a].detection_score > proposals[b].detection_score;
  });
  std::vector<PersonProposal> kept;
  for (std::size_t idx : order) {
    const bool suppressed = std::any_of(kept.begin(), kept.end(), [&](const PersonProposal& k) {
      return iou(k.bbox, proposals[idx].bbox) > iou_threshold;
    });
    if (!suppressed) kept.push_back(proposals[idx]);
  }
  return kept;
}

double pose_similarity(const Pose& candidate, const Pose& reference, const JointTable& sigmas) {
  GroundTruthPerson gt;
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
  bool any = false;
  for (std::size_t k = 0; k < kJointCount; ++k) {
    const auto& kp = reference.keypoints[k];
    if (!kp) {
      gt.keypoints[k].visibility = Visibility::kUnlabeled;
      continue;
    }
    gt.keypoints[k] = {kp->location, Visibility::kVisible};
    if (!any) {
      x0 = x1 = kp->location.x;
      y0 = y1 = kp->location.y;
      any = true;
    }
    x0 = std::min(x0, kp->location.x);
    x1 = std::max(x1, kp->location.x);
    y0 = std::min(y0, kp->location.y);
    y1 = std::max(y1, kp->location.y);
  }
  if (!any || candidate.present_count() == 0) return 0.0;
  // A degenerate extent (single joint, collinear joints) gets a 1 px floor.
  gt.bbox = {x0, y0, std::max(x1 - x0, 1.0), std::max(y1 - y0, 1.0)};
  return compute_oks(candidate, gt, sigmas);
}

std::vector<Pose> pose_dedup_baseline(std::span<const Pose> poses, double oks_threshold, const JointTable& sigmas) {
  if (!(oks_threshold > 0.0 && oks_threshold < 1.0)) {
    throw std::invalid_argument(fmt::format("OKS threshold must lie in (0, 1), got {}", oks_threshold));
  }
  std::vector<std::size_t> order(poses.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return poses[a].score > poses[b].score; });
  std::vector<Pose> kept;
  for (std::size_t idx : order) {
    const bool suppressed = std::any_of(kept.begin(), kept.end(), [&](const Pose& k) {
      return pose_similarity(poses[idx], k, sigmas) > oks_threshold;
    });
    if (!suppressed) kept.push_back(poses[idx]);
  }
  return kept;
}

}  // namespace jointassoc
