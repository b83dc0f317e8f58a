// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>

namespace jointassoc {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double squared_distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double distance(const Point& a, const Point& b) { return std::sqrt(squared_distance(a, b)); }

/// Axis-aligned box in pixels, (x, y) is the top-left corner.
struct BBox {
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
  double height = 0.0;

  double area() const { return width * height; }
  Point center() const { return {x + width / 2.0, y + height / 2.0}; }

  /// Closed containment: points on the border count as inside.
  bool contains(const Point& p) const {
    return p.x >= x && p.x <= x + width && p.y >= y && p.y <= y + height;
  }

  /// Box with the same center, scaled by `factor` in both dimensions.
  BBox scaled(double factor) const {
    const Point c = center();
    return {c.x - width * factor / 2.0, c.y - height * factor / 2.0, width * factor, height * factor};
  }

  friend bool operator==(const BBox&, const BBox&) = default;
};

inline double iou(const BBox& a, const BBox& b) {
  const double ix = std::max(0.0, std::min(a.x + a.width, b.x + b.width) - std::max(a.x, b.x));
  const double iy = std::max(0.0, std::min(a.y + a.height, b.y + b.height) - std::max(a.y, b.y));
  const double inter = ix * iy;
  const double uni = a.area() + b.area() - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

}  // namespace jointassoc
