// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jointassoc/graph.hpp"
#include "jointassoc/grouping.hpp"
#include "jointassoc/metrics.hpp"

namespace jointassoc {

struct SceneSpec {
  int image_id = 0;
  int person_min = 3;
  int person_max = 8;
  double target_crowd_index = 0.5;
  /// Placement stops once |achieved - target| <= tolerance.
  double tolerance = 0.05;
  int max_attempts = 300;
  int width = 800;
  int height = 600;
  /// Std-dev of joint and box-center jitter, pixels.
  double noise_sigma = 1.5;
  /// Uniform box size jitter, fraction of each side.
  double box_scale_jitter = 0.1;
  /// Std-dev of candidate responses around their design levels.
  double response_noise = 0.05;
  double false_positive_rate = 0.05;
  double missing_joint_rate = 0.15;
  /// Design response level of interference candidates.
  double mu = 0.5;
  /// Heatmap Gaussian sigma; becomes each candidate's response size.
  double heatmap_sigma = 2.0;
  /// Proposal boxes grow by this fraction in width and height.
  double box_extension = 0.3;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

struct GeneratedScene {
  SceneAnnotation annotation;
  double achieved_index = 0.0;
  /// |achieved - target| <= 0.1.
  bool target_reached = false;
};

/// Where a simulated candidate came from; person_id is empty for false positives.
struct CandidateOrigin {
  std::optional<int> person_id;
  std::size_t joint_type = 0;

  friend bool operator==(const CandidateOrigin&, const CandidateOrigin&) = default;
};

struct SyntheticScene {
  SceneAnnotation annotation;
  std::vector<PersonProposal> proposals;
  /// Ground-truth person each proposal was derived from, aligned with `proposals`.
  std::vector<int> proposal_origin;
  std::vector<CandidateJoint> candidates;
  /// Aligned with `candidates`.
  std::vector<CandidateOrigin> provenance;
  double achieved_index = 0.0;
  bool target_reached = false;

  friend bool operator==(const SyntheticScene&, const SyntheticScene&) = default;
};

/// Places template skeletons (random scale, rotation, limb articulation) and
/// searches positions until the Crowd Index is near the target. Deterministic per seed.
GeneratedScene generate_scene(const SceneSpec& spec);

struct SimulatedProposals {
  std::vector<PersonProposal> proposals;
  std::vector<int> origin;
};

/// One jittered, extended box per person plus shifted/truncated duplicates
/// drawn at the false-positive rate.
SimulatedProposals simulate_proposals(const SceneAnnotation& scene, const SceneSpec& spec);

struct SimulatedCandidates {
  std::vector<CandidateJoint> candidates;
  std::vector<CandidateOrigin> provenance;
};

/// Per proposal and joint type: the own joint near 1.0, every foreign joint in
/// the box near mu, and false positives in [0.1, 0.4].
SimulatedCandidates simulate_candidates(const SceneAnnotation& scene, const SimulatedProposals& proposals,
                                        const SceneSpec& spec);

/// generate_scene + simulate_proposals + simulate_candidates.
SyntheticScene simulate_scene(const SceneSpec& spec);

}  // namespace jointassoc
