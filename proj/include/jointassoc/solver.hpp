// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "jointassoc/graph.hpp"
#include "jointassoc/pose.hpp"

namespace jointassoc {

struct WeightEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  double weight = 0.0;

  friend bool operator==(const WeightEntry&, const WeightEntry&) = default;
};

/// Sparse rows x cols profit matrix. Pairs without an entry cannot be matched.
struct SparseWeights {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<WeightEntry> entries;

  /// Row-major dense form; std::nullopt marks an absent pair.
  static SparseWeights from_dense(const std::vector<std::vector<std::optional<double>>>& dense);
};

struct MatchedPair {
  std::size_t row = 0;
  std::size_t col = 0;
  double weight = 0.0;

  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

struct Matching {
  /// Ascending by (row, col).
  std::vector<MatchedPair> pairs;
  /// Sum of pair weights accumulated in `pairs` order.
  double total_weight = 0.0;
};

/// Maximum-weight partial matching: every row and column is used at most once
/// and may stay unmatched. Among optima with equal weight the lexicographically
/// smallest (row, col) pair sequence wins. Zero weights are treated as absent.
/// Throws std::invalid_argument on negative or non-finite weights, out-of-range
/// indices, or duplicate pairs.
Matching solve_subgraph(const SparseWeights& weights);

inline constexpr std::size_t kOracleMaxDim = 8;

/// Exhaustive enumeration of every feasible matching. Same tie rule and
/// summation order as solve_subgraph. Throws SizeError beyond max_dim rows or columns.
Matching brute_force_oracle(const SparseWeights& weights, std::size_t max_dim = kOracleMaxDim);

/// One kept edge: persons[person] takes nodes[node] as its joint_type joint.
struct Selection {
  std::size_t joint_type = 0;
  std::size_t person = 0;
  std::size_t node = 0;
  double weight = 0.0;

  friend bool operator==(const Selection&, const Selection&) = default;
};

struct Assignment {
  /// Ascending by (joint_type, person, node).
  std::vector<Selection> selected;
  double total_weight = 0.0;
};

struct Subgraph {
  SparseWeights weights;
  /// Column c of `weights` is graph.nodes[node_of_col[c]].
  std::vector<std::size_t> node_of_col;
};

/// Type-k slice of the graph: rows are all persons, columns the type-k nodes.
Subgraph extract_subgraph(const PersonJointGraph& graph, std::size_t joint_type);

/// Solves every joint-type subgraph independently; the total is summed in ascending joint type.
Assignment solve_graph(const PersonJointGraph& graph);

/// Each selected edge gives its person the weighted center of the node.
/// Persons without any selected joint produce no pose.
std::vector<Pose> build_poses(const Assignment& assignment, const PersonJointGraph& graph);

}  // namespace jointassoc
