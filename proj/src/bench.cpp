// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "jointassoc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

#include "jointassoc/solver.hpp"

namespace jointassoc {

PersonJointGraph banded_graph(std::size_t persons, std::uint64_t seed, std::size_t max_degree) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  PersonJointGraph g;
  for (std::size_t p = 0; p < persons; ++p) {
    const double x = 10.0 * static_cast<double>(p);
    g.persons.push_back({static_cast<int>(p), {x, 0.0, 40.0, 100.0}, 1.0});
  }
  for (std::size_t k = 0; k < kJointCount; ++k) {
    const std::size_t first = g.nodes.size();
    for (std::size_t j = 0; j < persons; ++j) {
      JointNode node;
      node.node_id = g.nodes.size();
      node.joint_type = k;
      node.members.push_back({{10.0 * static_cast<double>(j), 50.0}, 1.0, k, static_cast<int>(j), 2.0});
      node.member_indices.push_back(node.node_id);
      g.nodes.push_back(std::move(node));
    }
    // Edges in (person, node) order: person p sees nodes p - max_degree + 1 .. p.
    for (std::size_t p = 0; p < persons; ++p) {
      const std::size_t lo = p + 1 >= max_degree ? p + 1 - max_degree : 0;
      for (std::size_t j = lo; j <= p; ++j) g.edges.push_back({p, first + j, k, weight(rng)});
    }
  }
  return g;
}

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::size_t repeats, std::uint64_t seed) {
  if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  std::vector<BenchRow> rows;
  for (std::size_t n : sizes) {
    const PersonJointGraph g = banded_graph(n, seed + n);
    std::vector<double> ms;
    for (std::size_t r = 0; r < repeats; ++r) {
      const auto start = std::chrono::steady_clock::now();
      const Assignment a = solve_graph(g);
      const auto stop = std::chrono::steady_clock::now();
      if (a.selected.size() > n * kJointCount) throw std::logic_error("bench: impossible assignment size");
      ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    std::sort(ms.begin(), ms.end());
    BenchRow row;
    row.persons = n;
    row.median_ms = ms[ms.size() / 2];
    if (!rows.empty() && rows.back().median_ms > 0.0) row.ratio = row.median_ms / rows.back().median_ms;
    rows.push_back(row);
  }
  return rows;
}

std::string format_bench(const std::vector<BenchRow>& rows) {
  std::string out = fmt::format("{:>8}  {:>10}  {:>6}\n", "persons", "median_ms", "ratio");
  for (const auto& r : rows) {
    const std::string ms = r.median_ms < 1.0 ? std::string("<1ms") : fmt::format("{:.3f}", r.median_ms);
    const std::string ratio = r.ratio ? fmt::format("{:.2f}", *r.ratio) : std::string("-");
    out += fmt::format("{:>8}  {:>10}  {:>6}\n", r.persons, ms, ratio);
  }
  return out;
}

}  // namespace jointassoc
