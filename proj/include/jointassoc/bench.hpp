// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jointassoc/graph.hpp"

namespace jointassoc {

/// Sparse graph with `persons` proposals and `persons` nodes per joint type.
/// Node j links to persons j .. j + 3 (clipped), so every node has at most
/// `max_degree` edges. Weights are uniform in [0.05, 1).
PersonJointGraph banded_graph(std::size_t persons, std::uint64_t seed, std::size_t max_degree = 4);

struct BenchRow {
  std::size_t persons = 0;
  double median_ms = 0.0;
  /// time(n) / time(previous size); empty on the first row.
  std::optional<double> ratio;
};

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::size_t repeats, std::uint64_t seed);

std::string format_bench(const std::vector<BenchRow>& rows);

}  // namespace jointassoc
