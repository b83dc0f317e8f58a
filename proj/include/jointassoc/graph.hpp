// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "jointassoc/geometry.hpp"
#include "jointassoc/grouping.hpp"

namespace jointassoc {

struct PersonProposal {
  int proposal_id = 0;
  BBox bbox;
  double detection_score = 1.0;

  friend bool operator==(const PersonProposal&, const PersonProposal&) = default;
};

/// Edge between persons[person] and nodes[node]; indices refer to the owning graph.
struct Edge {
  std::size_t person = 0;
  std::size_t node = 0;
  std::size_t joint_type = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Bipartite person/joint-node graph. Edges are sorted by (joint_type, person, node).
struct PersonJointGraph {
  std::vector<PersonProposal> persons;
  std::vector<JointNode> nodes;
  std::vector<Edge> edges;

  /// Throws IntegrityError if an edge references a missing person or node,
  /// mismatches the node's joint type, or duplicates a (person, node) pair.
  void validate() const;

  /// Edges of the type-k subgraph, a contiguous slice of `edges`.
  std::span<const Edge> edges_of_type(std::size_t joint_type) const;
};

/// One edge per (proposal, node) pair where the node holds a candidate from
/// that proposal, weighted by the strongest such candidate. Proposals without
/// edges stay in the graph as isolated persons.
/// Throws IntegrityError when a candidate names an unknown proposal, or when
/// proposal ids repeat.
PersonJointGraph build_graph(std::span<const PersonProposal> proposals, std::vector<JointNode> nodes);

/// In-degree histogram of joint nodes: degree -> number of nodes.
std::map<std::size_t, std::size_t> degree_stats(const PersonJointGraph& graph);

}  // namespace jointassoc
