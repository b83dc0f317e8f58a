// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "jointassoc/solver.hpp"

namespace jointassoc {

Subgraph extract_subgraph(const PersonJointGraph& graph, std::size_t joint_type) {
  Subgraph sub;
  sub.weights.rows = graph.persons.size();
  std::vector<std::size_t> col_of_node(graph.nodes.size(), 0);
  for (std::size_t j = 0; j < graph.nodes.size(); ++j) {
    if (graph.nodes[j].joint_type != joint_type) continue;
    col_of_node[j] = sub.node_of_col.size();
    sub.node_of_col.push_back(j);
  }
  sub.weights.cols = sub.node_of_col.size();
  for (const Edge& e : graph.edges_of_type(joint_type)) {
    sub.weights.entries.push_back({e.person, col_of_node[e.node], e.weight});
  }
  return sub;
}

Assignment solve_graph(const PersonJointGraph& graph) {
  graph.validate();
  Assignment out;
  for (std::size_t k = 0; k < kJointCount; ++k) {
    const Subgraph sub = extract_subgraph(graph, k);
    const Matching m = solve_subgraph(sub.weights);
    for (const MatchedPair& p : m.pairs) out.selected.push_back({k, p.row, sub.node_of_col[p.col], p.weight});
    out.total_weight += m.total_weight;
  }
  return out;
}

std::vector<Pose> build_poses(const Assignment& assignment, const PersonJointGraph& graph) {
  std::vector<Pose> by_person(graph.persons.size());
  for (std::size_t i = 0; i < graph.persons.size(); ++i) by_person[i].proposal_id = graph.persons[i].proposal_id;
  for (const Selection& s : assignment.selected) {
    const WeightedCenter wc = weighted_center(graph.nodes.at(s.node));
    by_person.at(s.person).keypoints.at(s.joint_type) = Keypoint{wc.location, wc.score};
  }
  std::vector<Pose> poses;
  for (Pose& pose : by_person) {
    if (pose.present_count() == 0) continue;
    pose.score = pose.mean_keypoint_score();
    poses.push_back(std::move(pose));
  }
  return poses;
}

}  // namespace jointassoc
