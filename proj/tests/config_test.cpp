// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "jointassoc/config.hpp"

#include <gtest/gtest.h>

#include "jointassoc/error.hpp"

namespace jointassoc {
namespace {

TEST(Config, Defaults) {
  const Config c;
  EXPECT_EQ(c.mu, 0.5);
  EXPECT_EQ(c.sigma, 2.0);
  EXPECT_EQ(c.heatmap_width, 80);
  EXPECT_EQ(c.heatmap_height, 64);
  EXPECT_EQ(c.peak_threshold, 0.1);
  EXPECT_EQ(c.peak_window, 3);
  EXPECT_EQ(c.bbox_nms_iou, 0.5);
  EXPECT_EQ(c.oks_dedup, 0.7);
  EXPECT_EQ(c.oracle_max_dim, 8u);
  EXPECT_NO_THROW(c.validate());
}

TEST(Config, FileOverridesDefaults) {
  const Config c = parse_config(R"({"mu": 0.25, "seed": 9, "oks_sigmas": [1,1,1,1,1,1,1,1,1,1,1,1,1,1]})");
  EXPECT_EQ(c.mu, 0.25);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.oks_sigmas[13], 1.0);
  EXPECT_EQ(c.sigma, 2.0);
}

TEST(Config, RoundTrip) {
  Config c;
  c.mu = 0.125;
  c.delta[2] = 0.5;
  c.seed = 17;
  const Config back = parse_config(write_config(c));
  EXPECT_EQ(back.mu, c.mu);
  EXPECT_EQ(back.delta, c.delta);
  EXPECT_EQ(back.seed, c.seed);
}

TEST(Config, Errors) {
  EXPECT_THROW(parse_config(R"({"unknown": 1})"), ParseError);
  EXPECT_THROW(parse_config(R"({"mu": "high"})"), ParseError);
  EXPECT_THROW(parse_config(R"({"delta": [1, 2]})"), ParseError);
  EXPECT_THROW(parse_config("{"), ParseError);
  EXPECT_THROW(parse_config("[]"), ParseError);
  Config c;
  c.mu = 2.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.peak_window = 4;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.delta[0] = 0.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Config, PipelineOptionsCarryTables) {
  Config c;
  c.delta[4] = 0.3;
  c.bbox_nms_iou = 0.6;
  const PipelineOptions o = c.pipeline(Method::kBboxNms);
  EXPECT_EQ(o.method, Method::kBboxNms);
  EXPECT_EQ(o.joints.delta[4], 0.3);
  EXPECT_EQ(o.bbox_nms_iou, 0.6);
}

}  // namespace
}  // namespace jointassoc
