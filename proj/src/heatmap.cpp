// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "jointassoc/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace jointassoc {

namespace {

void check_grid(int width, int height, double sigma) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument(fmt::format("heatmap dimensions must be positive, got {}x{}", width, height));
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument(fmt::format("sigma must be positive, got {}", sigma));
  }
}

}  // namespace

Heatmap::Heatmap(int width, int height, double sigma)
    : width_(width), height_(height), sigma_(sigma) {
  check_grid(width, height, sigma);
  values_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0.0);
}

Heatmap::Heatmap(int width, int height, std::vector<double> values, double sigma)
    : width_(width), height_(height), sigma_(sigma), values_(std::move(values)) {
  check_grid(width, height, sigma);
  if (values_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw std::invalid_argument(
        fmt::format("heatmap expects {} values, got {}", static_cast<long>(width) * height, values_.size()));
  }
  if (std::any_of(values_.begin(), values_.end(), [](double v) { return !(v >= 0.0); })) {
    throw std::invalid_argument("heatmap values must be non-negative");
  }
}

Heatmap render_gaussian(std::span<const Point> centers, double sigma, int width, int height) {
  Heatmap map(width, height, sigma);
  const double inv_two_var = 1.0 / (2.0 * sigma * sigma);
  for (const Point& c : centers) {
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        const double d2 = squared_distance({static_cast<double>(x), static_cast<double>(y)}, c);
        map.at(x, y) += std::exp(-d2 * inv_two_var);
      }
    }
  }
  return map;
}

Heatmap CompositeTarget::composite() const {
  Heatmap out = target;
  auto dst = out.values();
  auto src = interference.values();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += mu * src[i];
  return out;
}

CompositeTarget compose_training_target(std::span<const Point> target_joints,
                                        std::span<const Point> interference_joints, double mu, double sigma,
                                        int width, int height) {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw std::invalid_argument(fmt::format("mu must lie in [0, 1], got {}", mu));
  }
  return {render_gaussian(target_joints, sigma, width, height),
          render_gaussian(interference_joints, sigma, width, height), mu};
}

double jc_loss(std::span<const Heatmap> predicted, std::span<const CompositeTarget> composite) {
  if (predicted.size() != composite.size()) {
    throw std::invalid_argument(
        fmt::format("jc_loss: {} predicted channels vs {} targets", predicted.size(), composite.size()));
  }
  if (predicted.empty()) {
    throw std::invalid_argument("jc_loss: no channels");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < predicted.size(); ++k) {
    const CompositeTarget& c = composite[k];
    if (!predicted[k].same_shape(c.target) || !c.target.same_shape(c.interference)) {
      throw std::invalid_argument(fmt::format("jc_loss: grid mismatch on channel {}", k));
    }
    auto p = predicted[k].values();
    auto t = c.target.values();
    auto i = c.interference.values();
    double sse = 0.0;
    for (std::size_t q = 0; q < p.size(); ++q) {
      const double r = p[q] - (t[q] + c.mu * i[q]);
      sse += r * r;
    }
    total += sse / static_cast<double>(p.size());
  }
  return total / static_cast<double>(predicted.size());
}

std::vector<Peak> extract_peaks(const Heatmap& heatmap, double score_threshold, int window) {
  if (window < 3 || window % 2 == 0) {
    throw std::invalid_argument(fmt::format("peak window must be odd and >= 3, got {}", window));
  }
  if (!(score_threshold >= 0.0)) {
    throw std::invalid_argument("peak threshold must be non-negative");
  }
  const int r = window / 2;
  const int w = heatmap.width();
  const int h = heatmap.height();
  std::vector<Peak> peaks;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double v = heatmap.at(x, y);
      if (!(v > score_threshold)) continue;
      bool is_peak = true;
      for (int ny = std::max(0, y - r); is_peak && ny <= std::min(h - 1, y + r); ++ny) {
        for (int nx = std::max(0, x - r); nx <= std::min(w - 1, x + r); ++nx) {
          if (nx == x && ny == y) continue;
          const double n = heatmap.at(nx, ny);
          // A neighbour earlier in row-major order wins a tie.
          const bool earlier = ny < y || (ny == y && nx < x);
          if (n > v || (n == v && earlier)) {
            is_peak = false;
            break;
          }
        }
      }
      if (is_peak) peaks.push_back({x, y, v});
    }
  }
  // Row-major discovery order already breaks ties; a stable sort keeps it.
  std::stable_sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) { return a.response > b.response; });
  return peaks;
}

}  // namespace jointassoc
