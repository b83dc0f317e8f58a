// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "jointassoc/grouping.hpp"

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace jointassoc {

void JointSpec::validate() const {
  for (std::size_t k = 0; k < kJointCount; ++k) {
    if (!(delta[k] > 0.0) || !std::isfinite(delta[k])) {
      throw std::invalid_argument(fmt::format("delta for {} must be positive, got {}", names[k], delta[k]));
    }
  }
}

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t size) : parent_(size), rank_(size, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> rank_;
};

}  // namespace

bool same_group(const CandidateJoint& a, const CandidateJoint& b, double delta_k) {
  if (a.joint_type != b.joint_type) {
    throw std::invalid_argument(
        fmt::format("same_group: joint types differ ({} vs {})", a.joint_type, b.joint_type));
  }
  if (!(delta_k > 0.0)) {
    throw std::invalid_argument(fmt::format("same_group: delta must be positive, got {}", delta_k));
  }
  return distance(a.location, b.location) <= std::min(a.response_size, b.response_size) * delta_k;
}

std::vector<JointNode> group_candidates(std::span<const CandidateJoint> candidates, const JointSpec& spec,
                                        const GroupingOptions& options) {
  spec.validate();
  if (!(options.delta_scale > 0.0)) {
    throw std::invalid_argument("group_candidates: delta_scale must be positive");
  }
  for (const auto& c : candidates) {
    if (c.joint_type >= kJointCount) {
      throw std::invalid_argument(fmt::format("candidate joint_type {} out of range", c.joint_type));
    }
  }

  DisjointSet sets(candidates.size());
  std::array<std::vector<std::size_t>, kJointCount> by_type;
  for (std::size_t i = 0; i < candidates.size(); ++i) by_type[candidates[i].joint_type].push_back(i);

  for (std::size_t k = 0; k < kJointCount; ++k) {
    const auto& ids = by_type[k];
    const double delta = spec.delta[k] * options.delta_scale;
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        if (same_group(candidates[ids[a]], candidates[ids[b]], delta)) sets.unite(ids[a], ids[b]);
      }
    }
  }

  // Visiting types in order and candidates by ascending index yields the
  // required (joint_type, smallest member index) node numbering directly.
  std::vector<JointNode> nodes;
  std::vector<std::size_t> node_of_root(candidates.size(), SIZE_MAX);
  for (std::size_t k = 0; k < kJointCount; ++k) {
    for (std::size_t i : by_type[k]) {
      const std::size_t root = sets.find(i);
      if (node_of_root[root] == SIZE_MAX) {
        node_of_root[root] = nodes.size();
        JointNode node;
        node.node_id = nodes.size();
        node.joint_type = k;
        nodes.push_back(std::move(node));
      }
      JointNode& node = nodes[node_of_root[root]];
      node.members.push_back(candidates[i]);
      node.member_indices.push_back(i);
    }
  }
  return nodes;
}

WeightedCenter weighted_center(const JointNode& node) {
  if (node.members.empty()) {
    throw std::invalid_argument("weighted_center: empty joint node");
  }
  if (node.members.size() == 1) {
    return {node.members.front().location, node.members.front().response};
  }
  double sx = 0.0;
  double sy = 0.0;
  double sw = 0.0;
  double best = 0.0;
  for (const auto& m : node.members) {
    sx += m.response * m.location.x;
    sy += m.response * m.location.y;
    sw += m.response;
    best = std::max(best, m.response);
  }
  Point loc{sx / sw, sy / sw};
  // Rounding can push the mean an ulp outside the member hull; clamp it back.
  auto [min_x, max_x] = std::minmax_element(node.members.begin(), node.members.end(),
                                            [](const auto& a, const auto& b) { return a.location.x < b.location.x; });
  auto [min_y, max_y] = std::minmax_element(node.members.begin(), node.members.end(),
                                            [](const auto& a, const auto& b) { return a.location.y < b.location.y; });
  loc.x = std::clamp(loc.x, min_x->location.x, max_x->location.x);
  loc.y = std::clamp(loc.y, min_y->location.y, max_y->location.y);
  return {loc, best};
}

}  // namespace jointassoc
