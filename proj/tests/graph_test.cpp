// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "jointassoc/graph.hpp"

#include <vector>

#include <gtest/gtest.h>

#include "jointassoc/error.hpp"
#include "jointassoc/pipeline.hpp"
#include "jointassoc/simulator.hpp"

namespace jointassoc {
namespace {

PersonProposal proposal(int id, double x = 0.0) { return {id, {x, 0, 50, 100}, 0.9}; }

JointNode node(std::size_t id, std::size_t k, std::vector<std::pair<int, double>> members) {
  JointNode n;
  n.node_id = id;
  n.joint_type = k;
  for (std::size_t m = 0; m < members.size(); ++m) {
    n.members.push_back({{10, 10}, members[m].second, k, members[m].first, 2.0});
    n.member_indices.push_back(m);
  }
  return n;
}

TEST(BuildGraph, SingleEdge) {
  const PersonProposal p[] = {proposal(0)};
  const auto g = build_graph(p, {node(0, 0, {{0, 0.8}})});
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.edges[0], (Edge{0, 0, 0, 0.8}));
}

TEST(BuildGraph, MaxMemberResponsePerProposal) {
  const PersonProposal p[] = {proposal(1)};
  const auto g = build_graph(p, {node(0, 0, {{1, 0.6}, {1, 0.9}})});
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.edges[0].weight, 0.9);
}

TEST(BuildGraph, SharedKneeGetsTwoEdges) {
  const PersonProposal p[] = {proposal(1), proposal(2, 10)};
  const auto g = build_graph(p, {node(0, 9, {{1, 0.9}, {2, 0.8}})});
  ASSERT_EQ(g.edges.size(), 2u);
  EXPECT_EQ(g.edges[0].person, 0u);
  EXPECT_EQ(g.edges[1].person, 1u);
  EXPECT_EQ(g.edges[0].node, g.edges[1].node);
}

TEST(BuildGraph, UnknownProposalIsIntegrityError) {
  const PersonProposal p[] = {proposal(0)};
  EXPECT_THROW(build_graph(p, {node(0, 0, {{7, 0.5}})}), IntegrityError);
}

TEST(BuildGraph, DuplicateProposalIdIsIntegrityError) {
  const PersonProposal p[] = {proposal(0), proposal(0, 5)};
  EXPECT_THROW(build_graph(p, {}), IntegrityError);
}

TEST(BuildGraph, EmptyBoxRejected) {
  const PersonProposal p[] = {{0, {0, 0, 0, 10}, 1.0}};
  EXPECT_THROW(build_graph(p, {}), std::invalid_argument);
}

TEST(BuildGraph, EdgesSortedByTypeThenPerson) {
  const PersonProposal p[] = {proposal(0), proposal(1, 10)};
  const auto g = build_graph(p, {node(0, 3, {{1, 0.5}}), node(1, 1, {{1, 0.4}, {0, 0.3}}), node(2, 3, {{0, 0.2}})});
  g.validate();
  ASSERT_EQ(g.edges.size(), 4u);
  EXPECT_EQ(g.edges_of_type(1).size(), 2u);
  EXPECT_EQ(g.edges_of_type(3).size(), 2u);
  EXPECT_EQ(g.edges_of_type(0).size(), 0u);
  EXPECT_EQ(g.edges_of_type(1)[0].person, 0u);
}

TEST(DegreeStats, SingleEdge) {
  const PersonProposal p[] = {proposal(0)};
  const auto g = build_graph(p, {node(0, 0, {{0, 0.8}})});
  EXPECT_EQ(degree_stats(g), (std::map<std::size_t, std::size_t>{{1, 1}}));
}

TEST(DegreeStats, EmptyGraph) { EXPECT_TRUE(degree_stats(PersonJointGraph{}).empty()); }

TEST(DegreeStats, SimulatedCrowdsAreSparse) {
  std::size_t low = 0;
  std::size_t total = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SceneSpec spec;
    spec.seed = seed;
    spec.image_id = static_cast<int>(seed);
    const SyntheticScene scene = simulate_scene(spec);
    const auto r = associate(scene.proposals, scene.candidates);
    for (const auto& [degree, count] : degree_stats(r.graph)) {
      total += count;
      if (degree <= 4) low += count;
    }
  }
  ASSERT_GT(total, 0u);
  EXPECT_GE(static_cast<double>(low) / static_cast<double>(total), 0.95);
}

TEST(Validate, DetectsBrokenEdges) {
  PersonJointGraph g;
  g.persons.push_back(proposal(0));
  g.nodes.push_back(node(0, 2, {{0, 0.5}}));
  g.edges.push_back({0, 0, 1, 0.5});
  EXPECT_THROW(g.validate(), IntegrityError);
  g.edges = {{0, 0, 2, 0.5}, {0, 0, 2, 0.5}};
  EXPECT_THROW(g.validate(), IntegrityError);
  g.edges = {{1, 0, 2, 0.5}};
  EXPECT_THROW(g.validate(), IntegrityError);
}

}  // namespace
}  // namespace jointassoc
