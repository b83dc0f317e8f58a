// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "jointassoc/simulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

namespace jointassoc {

void SceneSpec::validate() const {
  auto rate = [](double r, const char* name) {
    if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument(fmt::format("{} must lie in [0, 1], got {}", name, r));
  };
  rate(target_crowd_index, "target_crowd_index");
  rate(false_positive_rate, "false_positive_rate");
  rate(missing_joint_rate, "missing_joint_rate");
  rate(mu, "mu");
  rate(box_scale_jitter, "box_scale_jitter");
  if (width <= 0 || height <= 0) throw std::invalid_argument("image dimensions must be positive");
  if (person_min < 1 || person_max < person_min) {
    throw std::invalid_argument(fmt::format("invalid person range [{}, {}]", person_min, person_max));
  }
  if (!(noise_sigma >= 0.0) || !(response_noise >= 0.0)) throw std::invalid_argument("noise must be >= 0");
  if (!(heatmap_sigma > 0.0)) throw std::invalid_argument("heatmap_sigma must be positive");
  if (!(box_extension >= 0.0)) throw std::invalid_argument("box_extension must be >= 0");
  if (!(tolerance >= 0.0) || max_attempts < 1) throw std::invalid_argument("invalid placement search settings");
}

namespace {

using Rng = std::mt19937_64;

// Independent streams per stage so changing one stage's draws never shifts another's.
Rng stream(std::uint64_t seed, std::uint64_t stage) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stage)};
  return Rng(seq);
}

double uniform(Rng& rng, double lo, double hi) {
  return hi > lo ? std::uniform_real_distribution<double>(lo, hi)(rng) : lo;
}
double normal(Rng& rng, double mean, double sd) {
  return sd > 0.0 ? std::normal_distribution<double>(mean, sd)(rng) : mean;
}
bool bernoulli(Rng& rng, double p) { return uniform(rng, 0.0, 1.0) < p; }

constexpr double kReferenceHeight = 200.0;

// Facing the camera, head top at the origin, y down. Left joints sit on the image right.
constexpr std::array<Point, kJointCount> kTemplate = {{
    {22, 38},  {-22, 38},  {30, 70},  {-30, 70},  {33, 100}, {-33, 100}, {14, 105},
    {-14, 105}, {16, 150}, {-16, 150}, {16, 195}, {-16, 195}, {0, 0},    {0, 30},
}};

// Articulation range per joint, in reference pixels.
constexpr std::array<double, kJointCount> kArticulation = {2, 2, 10, 10, 18, 18, 2, 2, 6, 6, 9, 9, 2, 1};

/// Skeleton in person-local coordinates with its box, before placement.
struct Shape {
  std::array<Point, kJointCount> joints;
  BBox box;
};

Shape make_shape(Rng& rng, int image_height) {
  double scale = uniform(rng, 0.5, 1.5);
  const double rotation = uniform(rng, -10.0, 10.0) * std::numbers::pi / 180.0;
  // Keep the padded box inside the image.
  scale = std::min(scale, 0.8 * image_height / (kReferenceHeight * 1.1));
  const double c = std::cos(rotation);
  const double s = std::sin(rotation);
  Shape shape;
  for (std::size_t k = 0; k < kJointCount; ++k) {
    const double a = kArticulation[k];
    const double x = kTemplate[k].x + uniform(rng, -a, a);
    const double y = kTemplate[k].y + uniform(rng, -a, a) - kReferenceHeight / 2.0;
    shape.joints[k] = {scale * (c * x - s * y), scale * (s * x + c * y)};
  }
  double x0 = shape.joints[0].x, x1 = x0, y0 = shape.joints[0].y, y1 = y0;
  for (const Point& p : shape.joints) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const double pad = 0.05 * (y1 - y0);
  shape.box = {x0 - pad, y0 - pad, x1 - x0 + 2 * pad, y1 - y0 + 2 * pad};
  return shape;
}

GroundTruthPerson place(const Shape& shape, double cx, double cy, int person_id) {
  GroundTruthPerson person;
  person.person_id = person_id;
  person.bbox = {shape.box.x + cx, shape.box.y + cy, shape.box.width, shape.box.height};
  for (std::size_t k = 0; k < kJointCount; ++k) {
    person.keypoints[k] = {{shape.joints[k].x + cx, shape.joints[k].y + cy}, Visibility::kVisible};
  }
  return person;
}

}  // namespace

GeneratedScene generate_scene(const SceneSpec& spec) {
  spec.validate();
  Rng rng = stream(spec.seed, 1);
  const int count = std::uniform_int_distribution<int>(spec.person_min, spec.person_max)(rng);
  std::vector<Shape> shapes;
  for (int p = 0; p < count; ++p) shapes.push_back(make_shape(rng, spec.height));

  const double w = spec.width;
  const double h = spec.height;
  double spread = w / 4.0;
  GeneratedScene best;
  double best_gap = INFINITY;
  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    SceneAnnotation scene;
    scene.image_id = spec.image_id;
    scene.width = spec.width;
    scene.height = spec.height;
    for (int p = 0; p < count; ++p) {
      const Shape& shape = shapes[static_cast<std::size_t>(p)];
      // Feasible offsets keep the box inside the image.
      const double lo_x = -shape.box.x;
      const double hi_x = w - (shape.box.x + shape.box.width);
      const double lo_y = -shape.box.y;
      const double hi_y = h - (shape.box.y + shape.box.height);
      const double cx = std::clamp(w / 2.0 + uniform(rng, -spread, spread), lo_x, std::max(lo_x, hi_x));
      const double cy = std::clamp(h / 2.0 + uniform(rng, -spread, spread) / 4.0, lo_y, std::max(lo_y, hi_y));
      scene.persons.push_back(place(shape, cx, cy, p));
    }
    const double achieved = crowd_index(scene);
    const double gap = std::abs(achieved - spec.target_crowd_index);
    if (gap < best_gap) {
      best_gap = gap;
      best.annotation = std::move(scene);
      best.achieved_index = achieved;
    }
    if (best_gap <= spec.tolerance) break;
    // Too crowded: spread out; too sparse: pull together.
    const double step = uniform(rng, 1.05, 1.3);
    spread = achieved > spec.target_crowd_index ? std::min(spread * step, w) : std::max(spread / step, 1.0);
  }
  best.target_reached = best_gap <= 0.1;
  return best;
}

SimulatedProposals simulate_proposals(const SceneAnnotation& scene, const SceneSpec& spec) {
  spec.validate();
  Rng rng = stream(spec.seed, 2);
  const double extend = 1.0 + spec.box_extension;
  SimulatedProposals out;
  auto push = [&](const BBox& box, double score, int origin) {
    out.proposals.push_back({static_cast<int>(out.proposals.size()), box.scaled(extend), score});
    out.origin.push_back(origin);
  };

  for (const auto& person : scene.persons) {
    const BBox& gt = person.bbox;
    const Point c = gt.center();
    const double cx = normal(rng, c.x, spec.noise_sigma);
    const double cy = normal(rng, c.y, spec.noise_sigma);
    const double bw = gt.width * (1.0 + uniform(rng, -spec.box_scale_jitter, spec.box_scale_jitter));
    const double bh = gt.height * (1.0 + uniform(rng, -spec.box_scale_jitter, spec.box_scale_jitter));
    push({cx - bw / 2.0, cy - bh / 2.0, bw, bh}, uniform(rng, 0.8, 1.0), person.person_id);
  }
  // Redundant detections: shifted, truncated copies with lower scores.
  for (const auto& person : scene.persons) {
    if (!bernoulli(rng, spec.false_positive_rate)) continue;
    const BBox& gt = person.bbox;
    const double shrink = uniform(rng, 0.7, 1.0);
    const double bw = gt.width * shrink;
    const double bh = gt.height * shrink;
    const Point c = gt.center();
    const double cx = c.x + uniform(rng, -0.15, 0.15) * gt.width;
    const double cy = c.y + uniform(rng, -0.15, 0.15) * gt.height;
    push({cx - bw / 2.0, cy - bh / 2.0, bw, bh}, uniform(rng, 0.5, 0.85), person.person_id);
  }
  return out;
}

SimulatedCandidates simulate_candidates(const SceneAnnotation& scene, const SimulatedProposals& proposals,
                                        const SceneSpec& spec) {
  spec.validate();
  Rng rng = stream(spec.seed, 3);
  SimulatedCandidates out;
  for (std::size_t p = 0; p < proposals.proposals.size(); ++p) {
    const PersonProposal& prop = proposals.proposals[p];
    const int owner = p < proposals.origin.size() ? proposals.origin[p] : -1;
    for (std::size_t k = 0; k < kJointCount; ++k) {
      for (const auto& person : scene.persons) {
        const LabeledJoint& joint = person.keypoints[k];
        if (!joint.labeled() || !prop.bbox.contains(joint.location)) continue;
        const bool own = person.person_id == owner;
        if (own && bernoulli(rng, spec.missing_joint_rate)) continue;
        const Point loc{normal(rng, joint.location.x, spec.noise_sigma), normal(rng, joint.location.y, spec.noise_sigma)};
        const double response = std::clamp(normal(rng, own ? 1.0 : spec.mu, spec.response_noise), 0.0, 1.0);
        if (response <= 0.0) continue;
        out.candidates.push_back({loc, response, k, prop.proposal_id, spec.heatmap_sigma});
        out.provenance.push_back({person.person_id, k});
      }
      if (bernoulli(rng, spec.false_positive_rate)) {
        const Point loc{uniform(rng, prop.bbox.x, prop.bbox.x + prop.bbox.width),
                        uniform(rng, prop.bbox.y, prop.bbox.y + prop.bbox.height)};
        out.candidates.push_back({loc, uniform(rng, 0.1, 0.4), k, prop.proposal_id, spec.heatmap_sigma});
        out.provenance.push_back({std::nullopt, k});
      }
    }
  }
  return out;
}

SyntheticScene simulate_scene(const SceneSpec& spec) {
  GeneratedScene generated = generate_scene(spec);
  SimulatedProposals proposals = simulate_proposals(generated.annotation, spec);
  SimulatedCandidates candidates = simulate_candidates(generated.annotation, proposals, spec);
  SyntheticScene scene;
  scene.annotation = std::move(generated.annotation);
  scene.proposals = std::move(proposals.proposals);
  scene.proposal_origin = std::move(proposals.origin);
  scene.candidates = std::move(candidates.candidates);
  scene.provenance = std::move(candidates.provenance);
  scene.achieved_index = generated.achieved_index;
  scene.target_reached = generated.target_reached;
  return scene;
}

}  // namespace jointassoc
