// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jointassoc/geometry.hpp"

namespace jointassoc {

/// Dense row-major response grid for one joint type. Pixel centers sit on
/// integer coordinates: value(x, y) is the response at column x, row y.
class Heatmap {
 public:
  /// Zero-filled grid. Throws std::invalid_argument for non-positive sizes or sigma.
  Heatmap(int width, int height, double sigma = 2.0);
  /// Wraps existing values; values.size() must equal width * height and every value must be >= 0.
  Heatmap(int width, int height, std::vector<double> values, double sigma = 2.0);

  int width() const { return width_; }
  int height() const { return height_; }
  double sigma() const { return sigma_; }

  double at(int x, int y) const { return values_[index(x, y)]; }
  double& at(int x, int y) { return values_[index(x, y)]; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  bool same_shape(const Heatmap& other) const { return width_ == other.width_ && height_ == other.height_; }

  friend bool operator==(const Heatmap&, const Heatmap&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  double sigma_;
  std::vector<double> values_;
};

/// Sum of unnormalized Gaussians exp(-|q - p|^2 / (2 sigma^2)), one per center.
/// Centers outside the grid contribute only their in-grid tails.
Heatmap render_gaussian(std::span<const Point> centers, double sigma, int width, int height);

/// Supervision for one joint channel: target peak(s) T, interference mixture C,
/// and the attenuation mu applied to C.
struct CompositeTarget {
  Heatmap target;
  Heatmap interference;
  double mu = 0.5;

  /// T + mu * C.
  Heatmap composite() const;
};

/// Throws std::invalid_argument when mu is outside [0, 1].
CompositeTarget compose_training_target(std::span<const Point> target_joints,
                                        std::span<const Point> interference_joints, double mu, double sigma,
                                        int width, int height);

/// Joint-candidate loss: mean over channels of MSE(predicted[k], T[k] + mu * C[k]).
double jc_loss(std::span<const Heatmap> predicted, std::span<const CompositeTarget> composite);

struct Peak {
  int x = 0;
  int y = 0;
  double response = 0.0;

  friend bool operator==(const Peak&, const Peak&) = default;
};

/// Local maxima of a window x window neighbourhood whose response exceeds
/// score_threshold. Equal values inside a window resolve to the lower
/// row-major index. Result is sorted by descending response, then index.
std::vector<Peak> extract_peaks(const Heatmap& heatmap, double score_threshold = 0.1, int window = 3);

}  // namespace jointassoc
