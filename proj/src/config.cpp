// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "jointassoc/config.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "jointassoc/error.hpp"
#include "jointassoc/io.hpp"

namespace jointassoc {

void Config::validate() const {
  auto in = [](double v, double lo, double hi, const char* name, bool open_lo = false) {
    const bool ok = std::isfinite(v) && (open_lo ? v > lo : v >= lo) && v <= hi;
    if (!ok) {
      throw std::invalid_argument(fmt::format("config: {} = {} outside {}{}, {}]", name, v, open_lo ? "(" : "[", lo, hi));
    }
  };
  in(mu, 0.0, 1.0, "mu");
  in(sigma, 0.0, 1e6, "sigma", true);
  if (heatmap_width < 1 || heatmap_height < 1) throw std::invalid_argument("config: heatmap dimensions must be >= 1");
  in(peak_threshold, 0.0, 1.0, "peak_threshold");
  if (peak_window < 3 || peak_window % 2 == 0) throw std::invalid_argument("config: peak_window must be odd and >= 3");
  for (std::size_t k = 0; k < kJointCount; ++k) {
    in(delta[k], 0.0, 1e6, "delta", true);
    in(oks_sigmas[k], 0.0, 1e6, "oks_sigmas", true);
  }
  in(bbox_nms_iou, 0.0, 1.0, "bbox_nms_iou", true);
  in(oks_dedup, 0.0, 1.0, "oks_dedup", true);
  if (oracle_max_dim < 1 || oracle_max_dim > 12) throw std::invalid_argument("config: oracle_max_dim must lie in [1, 12]");
  if (!std::isfinite(delta_scale)) throw std::invalid_argument("config: delta_scale must be finite");
  in(box_extension, 0.0, 10.0, "box_extension");
}

PipelineOptions Config::pipeline(Method method) const {
  PipelineOptions o;
  o.method = method;
  o.joints.delta = delta;
  o.delta_scale = delta_scale;
  o.box_extension = box_extension;
  o.bbox_nms_iou = bbox_nms_iou;
  o.oks_dedup = oks_dedup;
  o.oks_sigmas = oks_sigmas;
  return o;
}

namespace {

using Json = nlohmann::json;

template <typename T>
void read(const Json& obj, const char* key, T& out) {
  auto it = obj.find(key);
  if (it == obj.end()) return;
  try {
    if constexpr (std::is_integral_v<T>) {
      if (!it->is_number_integer() && !it->is_number_unsigned()) throw ParseError("");
    } else {
      if (!it->is_number()) throw ParseError("");
    }
    out = it->get<T>();
  } catch (const std::exception&) {
    throw ParseError(fmt::format("config: field '{}' has the wrong type", key));
  }
}

void read_table(const Json& obj, const char* key, JointTable& out) {
  auto it = obj.find(key);
  if (it == obj.end()) return;
  if (!it->is_array() || it->size() != kJointCount) {
    throw ParseError(fmt::format("config: field '{}' must hold {} numbers", key, kJointCount));
  }
  for (std::size_t k = 0; k < kJointCount; ++k) {
    if (!(*it)[k].is_number()) throw ParseError(fmt::format("config: {}[{}] must be a number", key, k));
    out[k] = (*it)[k].get<double>();
  }
}

}  // namespace

Config parse_config(std::string_view text, Config base) {
  Json obj;
  try {
    obj = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(fmt::format("config: {}", e.what()));
  }
  if (!obj.is_object()) throw ParseError("config: expected a JSON object");
  static constexpr std::string_view kKeys[] = {
      "mu",         "sigma",      "heatmap_width",  "heatmap_height", "peak_threshold", "peak_window", "delta",
      "oks_sigmas", "bbox_nms_iou", "oks_dedup",    "oracle_max_dim", "seed",           "delta_scale", "box_extension"};
  for (const auto& [key, value] : obj.items()) {
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw ParseError(fmt::format("config: unknown field '{}'", key));
    }
  }
  read(obj, "mu", base.mu);
  read(obj, "sigma", base.sigma);
  read(obj, "heatmap_width", base.heatmap_width);
  read(obj, "heatmap_height", base.heatmap_height);
  read(obj, "peak_threshold", base.peak_threshold);
  read(obj, "peak_window", base.peak_window);
  read_table(obj, "delta", base.delta);
  read_table(obj, "oks_sigmas", base.oks_sigmas);
  read(obj, "bbox_nms_iou", base.bbox_nms_iou);
  read(obj, "oks_dedup", base.oks_dedup);
  read(obj, "oracle_max_dim", base.oracle_max_dim);
  read(obj, "seed", base.seed);
  read(obj, "delta_scale", base.delta_scale);
  read(obj, "box_extension", base.box_extension);
  return base;
}

Config load_config(const std::filesystem::path& path, Config base) {
  return parse_config(io::read_file(path), base);
}

std::string write_config(const Config& c) {
  nlohmann::ordered_json j = {{"mu", c.mu},
                              {"sigma", c.sigma},
                              {"heatmap_width", c.heatmap_width},
                              {"heatmap_height", c.heatmap_height},
                              {"peak_threshold", c.peak_threshold},
                              {"peak_window", c.peak_window},
                              {"delta", c.delta},
                              {"oks_sigmas", c.oks_sigmas},
                              {"bbox_nms_iou", c.bbox_nms_iou},
                              {"oks_dedup", c.oks_dedup},
                              {"oracle_max_dim", c.oracle_max_dim},
                              {"seed", c.seed},
                              {"delta_scale", c.delta_scale},
                              {"box_extension", c.box_extension}};
  return io::format_json(j);
}

}  // namespace jointassoc
