// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "jointassoc/pipeline.hpp"

#include <gtest/gtest.h>

#include "jointassoc/error.hpp"
#include "jointassoc/metrics.hpp"

namespace jointassoc {
namespace {

SceneSpec clean(std::uint64_t seed) {
  SceneSpec spec;
  spec.seed = seed;
  spec.target_crowd_index = 0.0;
  spec.tolerance = 0.0;
  spec.noise_sigma = 0.0;
  spec.box_scale_jitter = 0.0;
  spec.response_noise = 0.0;
  spec.false_positive_rate = 0.0;
  spec.missing_joint_rate = 0.0;
  return spec;
}

TEST(ParseMethod, Names) {
  EXPECT_EQ(parse_method("global"), Method::kGlobal);
  EXPECT_EQ(parse_method("greedy"), Method::kGreedy);
  EXPECT_EQ(parse_method("bbox-nms"), Method::kBboxNms);
  EXPECT_EQ(parse_method("pose-nms"), Method::kPoseNms);
  EXPECT_THROW(parse_method("hungarian"), std::invalid_argument);
}

TEST(Associate, CleanScenesReconstructGroundTruth) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SyntheticScene s = simulate_scene(clean(seed));
    if (s.achieved_index != 0.0) continue;
    const AssociationResult r = associate(s.proposals, s.candidates);
    const AccuracyStats acc = association_accuracy(r, s);
    EXPECT_EQ(acc.correct, acc.assigned);
    ASSERT_EQ(r.poses.size(), s.annotation.persons.size());
    for (std::size_t p = 0; p < r.poses.size(); ++p) {
      for (std::size_t k = 0; k < kJointCount; ++k) {
        ASSERT_TRUE(r.poses[p].keypoints[k].has_value());
        EXPECT_EQ(r.poses[p].keypoints[k]->location, s.annotation.persons[p].keypoints[k].location);
      }
    }
  }
}

TEST(Associate, GlobalAtLeastGreedyWeight) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    SceneSpec spec;
    spec.seed = seed;
    spec.target_crowd_index = 0.9;
    const SyntheticScene s = simulate_scene(spec);
    PipelineOptions g;
    PipelineOptions gr;
    gr.method = Method::kGreedy;
    EXPECT_GE(associate(s.proposals, s.candidates, g).total_weight,
              associate(s.proposals, s.candidates, gr).total_weight);
  }
}

TEST(Associate, BaselinesRun) {
  SceneSpec spec;
  spec.seed = 12;
  spec.target_crowd_index = 0.6;
  spec.false_positive_rate = 0.5;
  const SyntheticScene s = simulate_scene(spec);
  for (Method m : {Method::kBboxNms, Method::kPoseNms}) {
    PipelineOptions o;
    o.method = m;
    const AssociationResult r = associate(s.proposals, s.candidates, o);
    EXPECT_LE(r.poses.size(), s.proposals.size());
    const AccuracyStats acc = association_accuracy(r, s);
    EXPECT_LE(acc.correct, acc.assigned);
  }
}

TEST(Associate, DanglingProposalReference) {
  const PersonProposal p[] = {{0, {0, 0, 50, 100}, 1.0}};
  const CandidateJoint c[] = {{{10, 10}, 0.9, 0, 3, 2.0}};
  EXPECT_THROW(associate(p, c), IntegrityError);
  PipelineOptions o;
  o.method = Method::kBboxNms;
  EXPECT_THROW(associate(p, c, o), IntegrityError);
}

TEST(AutoDeltaScale, MedianSide) {
  const PersonProposal p[] = {{0, {0, 0, 13, 13}, 1}, {1, {0, 0, 26, 26}, 1}, {2, {0, 0, 130, 130}, 1}};
  EXPECT_DOUBLE_EQ(auto_delta_scale(p, 0.3), 20.0);
  EXPECT_EQ(auto_delta_scale({}, 0.3), 1.0);
}

}  // namespace
}  // namespace jointassoc
