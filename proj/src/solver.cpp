// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "jointassoc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>

#include "jointassoc/error.hpp"

namespace jointassoc {

SparseWeights SparseWeights::from_dense(const std::vector<std::vector<std::optional<double>>>& dense) {
  SparseWeights w;
  w.rows = dense.size();
  for (std::size_t i = 0; i < dense.size(); ++i) {
    w.cols = std::max(w.cols, dense[i].size());
    for (std::size_t j = 0; j < dense[i].size(); ++j) {
      if (dense[i][j]) w.entries.push_back({i, j, *dense[i][j]});
    }
  }
  return w;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr double kInf = std::numeric_limits<double>::infinity();

/// Validated positive entries sorted by (row, col).
std::vector<WeightEntry> checked_entries(const SparseWeights& weights) {
  std::vector<WeightEntry> out;
  out.reserve(weights.entries.size());
  for (const auto& e : weights.entries) {
    if (e.row >= weights.rows || e.col >= weights.cols) {
      throw std::invalid_argument(
          fmt::format("weight entry ({}, {}) outside {}x{} matrix", e.row, e.col, weights.rows, weights.cols));
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw std::invalid_argument(fmt::format("weight ({}, {}) = {} must be finite and >= 0", e.row, e.col, e.weight));
    }
    if (e.weight > 0.0) out.push_back(e);
  }
  std::sort(out.begin(), out.end(),
            [](const WeightEntry& a, const WeightEntry& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].row == out[i - 1].row && out[i].col == out[i - 1].col) {
      throw std::invalid_argument(fmt::format("duplicate weight entry ({}, {})", out[i].row, out[i].col));
    }
  }
  return out;
}

Matching finish(std::vector<MatchedPair> pairs) {
  Matching m;
  m.pairs = std::move(pairs);
  for (const auto& p : m.pairs) m.total_weight += p.weight;
  return m;
}

// Max-weight partial matching on an M x N profit matrix reduces to a perfect
// min-cost assignment on (M + N) x (N + M):
//   real row i    -> real col j   cost -w(i, j)
//   real row i    -> dummy col i  cost 0        (row i unmatched)
//   dummy row j   -> real col j   cost 0        (col j unmatched)
//   dummy row j   -> dummy col i  cost 0        for every entry (i, j)
// The last group lets dummy rows absorb the dummy columns freed by matched
// real pairs while keeping the reduced graph as sparse as the input.
class SparseAssignment {
 public:
  SparseAssignment(std::size_t m, std::size_t n, const std::vector<WeightEntry>& entries)
      : m_(m), n_(n), size_(m + n), adj_(size_) {
    for (const auto& e : entries) adj_[e.row].push_back({e.col, -e.weight});
    for (std::size_t i = 0; i < m_; ++i) adj_[i].push_back({n_ + i, 0.0});
    for (std::size_t j = 0; j < n_; ++j) adj_[m_ + j].push_back({j, 0.0});
    for (const auto& e : entries) adj_[m_ + e.col].push_back({n_ + e.row, 0.0});
    for (const auto& e : entries) max_weight_ = std::max(max_weight_, e.weight);
  }

  void solve() {
    u_.assign(size_, 0.0);
    v_.assign(size_, kInf);
    for (std::size_t r = 0; r < size_; ++r) {
      for (const Arc& a : adj_[r]) v_[a.col] = std::min(v_[a.col], a.cost);
    }
    col_of_row_.assign(size_, kNone);
    row_of_col_.assign(size_, kNone);
    dist_.assign(size_, kInf);
    pred_.assign(size_, kNone);
    done_.assign(size_, 0);
    for (std::size_t r = 0; r < size_; ++r) augment(r);
    make_lexicographic();
  }

  std::vector<MatchedPair> pairs(const std::vector<WeightEntry>& entries) const {
    std::vector<MatchedPair> out;
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t c = col_of_row_[i];
      if (c >= n_) continue;
      auto it = std::lower_bound(entries.begin(), entries.end(), std::make_pair(i, c),
                                 [](const WeightEntry& e, const std::pair<std::size_t, std::size_t>& key) {
                                   return std::tie(e.row, e.col) < std::tie(key.first, key.second);
                                 });
      out.push_back({i, c, it->weight});
    }
    return out;
  }

 private:
  struct Arc {
    std::size_t col;
    double cost;
  };

  double reduced(std::size_t r, const Arc& a) const { return a.cost - u_[r] - v_[a.col]; }

  bool tight(std::size_t r, const Arc& a) const {
    return std::abs(reduced(r, a)) <= 1e-9 * std::max(1.0, max_weight_);
  }

  // Shortest augmenting path from `start` over reduced costs (Dijkstra), then
  // the dual update that keeps every reduced cost >= 0 and matched arcs tight.
  void augment(std::size_t start) {
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    std::vector<std::size_t> touched;
    std::vector<std::size_t> scanned_rows{start};
    std::vector<std::size_t> scanned_cols;

    auto relax = [&](std::size_t r, double base) {
      for (const Arc& a : adj_[r]) {
        if (done_[a.col]) continue;
        const double nd = base + std::max(0.0, reduced(r, a));
        if (nd < dist_[a.col]) {
          if (dist_[a.col] == kInf) touched.push_back(a.col);
          dist_[a.col] = nd;
          pred_[a.col] = r;
          heap.push({nd, a.col});
        }
      }
    };

    relax(start, 0.0);
    std::size_t sink = kNone;
    double min_val = 0.0;
    while (!heap.empty()) {
      auto [d, c] = heap.top();
      heap.pop();
      if (done_[c] || d > dist_[c]) continue;
      done_[c] = 1;
      scanned_cols.push_back(c);
      if (row_of_col_[c] == kNone) {
        sink = c;
        min_val = d;
        break;
      }
      const std::size_t r = row_of_col_[c];
      scanned_rows.push_back(r);
      relax(r, d);
    }
    if (sink == kNone) {
      // Every real row owns a dummy column, so a perfect assignment always exists.
      throw std::logic_error("sparse assignment: no augmenting path");
    }

    u_[start] += min_val;
    for (std::size_t k = 1; k < scanned_rows.size(); ++k) {
      const std::size_t r = scanned_rows[k];
      u_[r] += min_val - dist_[col_of_row_[r]];
    }
    for (std::size_t c : scanned_cols) v_[c] -= min_val - dist_[c];

    for (std::size_t c = sink;;) {
      const std::size_t r = pred_[c];
      row_of_col_[c] = r;
      std::swap(col_of_row_[r], c);
      if (r == start) break;
    }

    for (std::size_t c : touched) {
      dist_[c] = kInf;
      pred_[c] = kNone;
      done_[c] = 0;
    }
  }

  // Walk real rows in order; move each to the smallest tight real column that
  // is still reachable through a zero-cost alternating cycle avoiding rows
  // already fixed. Every optimum uses only tight arcs, so the result is the
  // lexicographically smallest optimal pair set.
  void make_lexicographic() {
    std::vector<char> locked(size_, 0);
    std::vector<std::size_t> parent(size_, kNone);
    std::vector<char> seen(size_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t current = col_of_row_[i];
      std::vector<std::size_t> options;
      for (const Arc& a : adj_[i]) {
        if (a.col < n_ && a.col != current && (current >= n_ || a.col < current) && tight(i, a)) {
          options.push_back(a.col);
        }
      }
      std::sort(options.begin(), options.end());
      for (std::size_t target : options) {
        if (reroute(i, target, locked, parent, seen)) break;
      }
      locked[i] = 1;
    }
  }

  bool reroute(std::size_t row, std::size_t target, const std::vector<char>& locked,
               std::vector<std::size_t>& parent, std::vector<char>& seen) {
    const std::size_t freed = col_of_row_[row];
    const std::size_t first = row_of_col_[target];
    if (locked[first]) return false;
    std::vector<std::size_t> visited{first};
    std::vector<std::size_t> queue{first};
    seen[first] = 1;
    parent[first] = kNone;
    std::size_t last = kNone;
    for (std::size_t head = 0; head < queue.size() && last == kNone; ++head) {
      const std::size_t r = queue[head];
      for (const Arc& a : adj_[r]) {
        if (a.col == col_of_row_[r] || a.col == target || !tight(r, a)) continue;
        if (a.col == freed) {
          last = r;
          break;
        }
        const std::size_t next = row_of_col_[a.col];
        if (next == row || locked[next] || seen[next]) continue;
        seen[next] = 1;
        parent[next] = r;
        visited.push_back(next);
        queue.push_back(next);
      }
    }
    if (last != kNone) {
      // Along the chain first -> ... -> last each row takes the column of its
      // successor, and `last` takes the column `row` gives up.
      std::size_t r = last;
      std::size_t col = freed;
      while (r != kNone) {
        const std::size_t old = col_of_row_[r];
        col_of_row_[r] = col;
        row_of_col_[col] = r;
        col = old;
        r = parent[r];
      }
      col_of_row_[row] = target;
      row_of_col_[target] = row;
    }
    for (std::size_t r : visited) seen[r] = 0;
    return last != kNone;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t size_;
  double max_weight_ = 0.0;
  std::vector<std::vector<Arc>> adj_;
  std::vector<double> u_;
  std::vector<double> v_;
  std::vector<std::size_t> col_of_row_;
  std::vector<std::size_t> row_of_col_;
  std::vector<double> dist_;
  std::vector<std::size_t> pred_;
  std::vector<char> done_;
};

}  // namespace

Matching solve_subgraph(const SparseWeights& weights) {
  const std::vector<WeightEntry> entries = checked_entries(weights);
  if (entries.empty()) return {};
  SparseAssignment lap(weights.rows, weights.cols, entries);
  lap.solve();
  return finish(lap.pairs(entries));
}

namespace {

struct Enumerator {
  std::size_t rows;
  std::vector<std::vector<WeightEntry>> by_row;
  std::vector<char> col_used;
  std::vector<MatchedPair> current;
  std::vector<MatchedPair> best;
  double best_total = 0.0;

  // Rows in order; per row try columns ascending, then "unmatched". This
  // visits feasible matchings in lexicographic order, so keeping only strict
  // improvements retains the smallest among equal totals.
  void run(std::size_t row, double total) {
    if (row == rows) {
      if (total > best_total) {
        best_total = total;
        best = current;
      }
      return;
    }
    for (const auto& e : by_row[row]) {
      if (col_used[e.col]) continue;
      col_used[e.col] = 1;
      current.push_back({e.row, e.col, e.weight});
      run(row + 1, total + e.weight);
      current.pop_back();
      col_used[e.col] = 0;
    }
    run(row + 1, total);
  }
};

}  // namespace

Matching brute_force_oracle(const SparseWeights& weights, std::size_t max_dim) {
  if (weights.rows > max_dim || weights.cols > max_dim) {
    throw SizeError(fmt::format("brute_force_oracle: {}x{} exceeds the {}x{} enumeration guard", weights.rows,
                                weights.cols, max_dim, max_dim));
  }
  const std::vector<WeightEntry> entries = checked_entries(weights);
  Enumerator en{weights.rows, std::vector<std::vector<WeightEntry>>(weights.rows), std::vector<char>(weights.cols, 0),
                {}, {}, 0.0};
  for (const auto& e : entries) en.by_row[e.row].push_back(e);
  en.run(0, 0.0);
  return finish(std::move(en.best));
}

}  // namespace jointassoc
