// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "jointassoc/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <fmt/format.h>

#include "jointassoc/baselines.hpp"

namespace jointassoc {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kGlobal:
      return "global";
    case Method::kGreedy:
      return "greedy";
    case Method::kBboxNms:
      return "bbox-nms";
    case Method::kPoseNms:
      return "pose-nms";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::kGlobal, Method::kGreedy, Method::kBboxNms, Method::kPoseNms}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument(fmt::format("unknown method '{}'", name));
}

double auto_delta_scale(std::span<const PersonProposal> proposals, double box_extension) {
  if (proposals.empty()) return 1.0;
  std::vector<double> areas;
  for (const auto& p : proposals) areas.push_back(p.bbox.area());
  std::sort(areas.begin(), areas.end());
  const std::size_t n = areas.size();
  const double median = n % 2 == 1 ? areas[n / 2] : 0.5 * (areas[n / 2 - 1] + areas[n / 2]);
  return std::max(1e-6, std::sqrt(median) / (1.0 + box_extension));
}

AssociationResult associate(std::span<const PersonProposal> proposals, std::span<const CandidateJoint> candidates,
                            const PipelineOptions& options) {
  std::vector<PersonProposal> kept(proposals.begin(), proposals.end());
  AssociationResult result;
  std::vector<CandidateJoint> cands;
  if (options.method == Method::kBboxNms) {
    std::set<int> all_ids;
    for (const auto& p : proposals) all_ids.insert(p.proposal_id);
    kept = bbox_nms_baseline(proposals, options.bbox_nms_iou);
    std::set<int> survivors;
    for (const auto& p : kept) survivors.insert(p.proposal_id);
    // Unknown proposal ids stay so build_graph reports them.
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const int src = candidates[c].source_proposal;
      if (all_ids.contains(src) && !survivors.contains(src)) continue;
      cands.push_back(candidates[c]);
      result.input_index.push_back(c);
    }
  } else {
    cands.assign(candidates.begin(), candidates.end());
    for (std::size_t c = 0; c < candidates.size(); ++c) result.input_index.push_back(c);
  }

  GroupingOptions grouping;
  grouping.delta_scale =
      options.delta_scale > 0.0 ? options.delta_scale : auto_delta_scale(proposals, options.box_extension);

  result.graph = build_graph(kept, group_candidates(cands, options.joints, grouping));

  if (options.method == Method::kGlobal) {
    Assignment assignment = solve_graph(result.graph);
    result.poses = build_poses(assignment, result.graph);
    result.selections = std::move(assignment.selected);
    result.total_weight = assignment.total_weight;
    return result;
  }

  GreedyResult greedy = greedy_baseline(result.graph);
  result.selections = std::move(greedy.claims);
  result.total_weight = greedy.total_weight;
  result.poses = options.method == Method::kPoseNms
                     ? pose_dedup_baseline(greedy.poses, options.oks_dedup, options.oks_sigmas)
                     : std::move(greedy.poses);
  return result;
}

AccuracyStats association_accuracy(const AssociationResult& result, const SyntheticScene& scene) {
  std::unordered_map<int, int> origin_of_proposal;
  for (std::size_t p = 0; p < scene.proposals.size() && p < scene.proposal_origin.size(); ++p) {
    origin_of_proposal[scene.proposals[p].proposal_id] = scene.proposal_origin[p];
  }

  std::vector<std::optional<int>> dominant(result.graph.nodes.size());
  for (std::size_t j = 0; j < result.graph.nodes.size(); ++j) {
    const JointNode& node = result.graph.nodes[j];
    std::map<int, double> mass;
    for (std::size_t m = 0; m < node.members.size(); ++m) {
      const std::size_t input = result.input_index.at(node.member_indices.at(m));
      const auto& origin = scene.provenance.at(input).person_id;
      if (origin) mass[*origin] += node.members[m].response;
    }
    double best = 0.0;
    for (const auto& [person, w] : mass) {
      if (w > best) {
        best = w;
        dominant[j] = person;
      }
    }
  }

  AccuracyStats stats;
  for (const Selection& s : result.selections) {
    ++stats.assigned;
    const int proposal_id = result.graph.persons[s.person].proposal_id;
    auto it = origin_of_proposal.find(proposal_id);
    if (it != origin_of_proposal.end() && dominant[s.node] == it->second) ++stats.correct;
  }
  return stats;
}

}  // namespace jointassoc
