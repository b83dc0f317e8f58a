// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "jointassoc/graph.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include <fmt/format.h>

#include "jointassoc/error.hpp"

namespace jointassoc {

namespace {

bool edge_order(const Edge& a, const Edge& b) {
  return std::tie(a.joint_type, a.person, a.node) < std::tie(b.joint_type, b.person, b.node);
}

}  // namespace

void PersonJointGraph::validate() const {
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& edge = edges[e];
    if (edge.person >= persons.size() || edge.node >= nodes.size()) {
      throw IntegrityError(fmt::format("edge {} references a missing person or node", e));
    }
    if (nodes[edge.node].joint_type != edge.joint_type) {
      throw IntegrityError(fmt::format("edge {} joint type {} does not match node {}", e, edge.joint_type, edge.node));
    }
    if (e > 0) {
      const Edge& prev = edges[e - 1];
      if (!edge_order(prev, edge)) {
        throw IntegrityError(fmt::format("edge {} is duplicated or out of order", e));
      }
    }
  }
}

std::span<const Edge> PersonJointGraph::edges_of_type(std::size_t joint_type) const {
  auto lo = std::lower_bound(edges.begin(), edges.end(), joint_type,
                             [](const Edge& e, std::size_t k) { return e.joint_type < k; });
  auto hi = std::upper_bound(lo, edges.end(), joint_type,
                             [](std::size_t k, const Edge& e) { return k < e.joint_type; });
  return {lo, hi};
}

PersonJointGraph build_graph(std::span<const PersonProposal> proposals, std::vector<JointNode> nodes) {
  PersonJointGraph graph;
  graph.persons.assign(proposals.begin(), proposals.end());

  std::unordered_map<int, std::size_t> person_index;
  for (std::size_t p = 0; p < graph.persons.size(); ++p) {
    if (!(graph.persons[p].bbox.width > 0.0 && graph.persons[p].bbox.height > 0.0)) {
      throw std::invalid_argument(fmt::format("proposal {} has an empty box", graph.persons[p].proposal_id));
    }
    if (!person_index.emplace(graph.persons[p].proposal_id, p).second) {
      throw IntegrityError(fmt::format("duplicate proposal id {}", graph.persons[p].proposal_id));
    }
  }

  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const JointNode& node = nodes[j];
    std::vector<Edge> local;
    for (std::size_t m = 0; m < node.members.size(); ++m) {
      const CandidateJoint& c = node.members[m];
      auto it = person_index.find(c.source_proposal);
      if (it == person_index.end()) {
        const std::size_t idx = m < node.member_indices.size() ? node.member_indices[m] : m;
        throw IntegrityError(fmt::format("candidate {} ({} at {:.1f},{:.1f}) references unknown proposal {}", idx,
                                         kJointNames[c.joint_type], c.location.x, c.location.y,
                                         c.source_proposal));
      }
      auto existing = std::find_if(local.begin(), local.end(), [&](const Edge& e) { return e.person == it->second; });
      if (existing == local.end()) {
        local.push_back({it->second, j, node.joint_type, c.response});
      } else {
        existing->weight = std::max(existing->weight, c.response);
      }
    }
    graph.edges.insert(graph.edges.end(), local.begin(), local.end());
  }
  std::sort(graph.edges.begin(), graph.edges.end(), edge_order);
  graph.nodes = std::move(nodes);
  return graph;
}

std::map<std::size_t, std::size_t> degree_stats(const PersonJointGraph& graph) {
  std::vector<std::size_t> degree(graph.nodes.size(), 0);
  for (const Edge& e : graph.edges) ++degree[e.node];
  std::map<std::size_t, std::size_t> histogram;
  for (std::size_t d : degree) ++histogram[d];
  return histogram;
}

}  // namespace jointassoc
