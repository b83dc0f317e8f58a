// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "jointassoc/joints.hpp"
#include "jointassoc/pipeline.hpp"

namespace jointassoc {

/// Tunables shared by the commands. Loaded from JSON; CLI flags override.
struct Config {
  double mu = 0.5;
  double sigma = 2.0;
  int heatmap_width = 80;
  int heatmap_height = 64;
  double peak_threshold = 0.1;
  int peak_window = 3;
  JointTable delta = kKeypointSigmas;
  JointTable oks_sigmas = kKeypointSigmas;
  double bbox_nms_iou = 0.5;
  double oks_dedup = 0.7;
  std::size_t oracle_max_dim = 8;
  std::uint64_t seed = 0;
  /// <= 0 derives the grouping scale from each image's proposals.
  double delta_scale = 0.0;
  double box_extension = 0.3;

  /// Throws std::invalid_argument naming the first out-of-range field.
  void validate() const;

  PipelineOptions pipeline(Method method) const;
};

/// Fields absent from the text keep their values in `base`. Unknown keys and
/// wrong types throw ParseError.
Config parse_config(std::string_view text, Config base = {});
Config load_config(const std::filesystem::path& path, Config base = {});
std::string write_config(const Config& config);

}  // namespace jointassoc
