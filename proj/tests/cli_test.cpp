// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "jointassoc/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>
#include <fmt/format.h>
#include <json.hpp>

#include "jointassoc/io.hpp"

namespace jointassoc {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "jointassoc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           fmt::format("jointassoc_cli_{}", ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

double total_weight(const std::string& out) {
  std::smatch m;
  static const std::regex re("method=\\S+ .* total_weight=([0-9.]+)");
  if (!std::regex_search(out, m, re)) return -1.0;
  return std::stod(m[1]);
}

TEST_F(CliTest, SynthWritesFilesAndSummary) {
  const CliRun r = run({"synth", "--persons", "3", "--crowd-index", "0.5", "--seed", "42", "--out", path("scenes")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(path("scenes/scene_00000.annotations.json")));
  EXPECT_TRUE(fs::exists(path("scenes/scene_00000.candidates.json")));
  EXPECT_NE(r.out.find("scene_00000: persons=3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("crowd_index="), std::string::npos);
}

TEST_F(CliTest, SynthRejectsOutOfRangeIndex) {
  EXPECT_EQ(run({"synth", "--crowd-index", "1.5", "--out", path("x")}).code, 2);
  EXPECT_EQ(run({"synth", "--crowd-index", "-0.1", "--out", path("x")}).code, 2);
}

TEST_F(CliTest, SynthIsByteDeterministic) {
  for (const char* d : {"a", "b"}) {
    ASSERT_EQ(run({"synth", "--crowd-index", "0.8", "--seed", "5", "--count", "3", "--out", path(d)}).code, 0);
  }
  for (int i = 0; i < 3; ++i) {
    for (const char* kind : {"annotations", "candidates"}) {
      const std::string name = fmt::format("scene_{:05d}.{}.json", i, kind);
      EXPECT_EQ(io::read_file(path("a/" + name)), io::read_file(path("b/" + name))) << name;
    }
  }
}

TEST_F(CliTest, GlobalWeightAtLeastGreedy) {
  ASSERT_EQ(run({"synth", "--crowd-index", "0.9", "--seed", "3", "--count", "4", "--out", path("s")}).code, 0);
  const CliRun g = run({"associate", "--input", path("s"), "--output", path("g.json"), "--method", "global"});
  const CliRun r = run({"associate", "--input", path("s"), "--output", path("r.json"), "--method", "greedy"});
  ASSERT_EQ(g.code, 0) << g.err;
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_GE(total_weight(g.out), total_weight(r.out));
  EXPECT_GT(total_weight(r.out), 0.0);
  EXPECT_NE(g.out.find("persons="), std::string::npos);
  EXPECT_NE(g.out.find("nodes="), std::string::npos);
  EXPECT_NE(g.out.find("edges="), std::string::npos);
}

TEST_F(CliTest, EmptyCandidatesGiveEmptyResults) {
  std::ofstream(path("empty.candidates.json")).close();
  const CliRun r = run({"associate", "--input", path("empty.candidates.json"), "--output", path("out.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(io::parse_results(io::read_file(path("out.json"))).empty());
}

TEST_F(CliTest, MissingInputExitsTwo) {
  EXPECT_EQ(run({"associate", "--input", path("nope.json"), "--output", path("out.json")}).code, 2);
  EXPECT_EQ(run({"evaluate", "--results", path("nope.json"), "--annotations", path("nope2.json")}).code, 2);
  EXPECT_EQ(run({"bench", "--sizes", "100", "--config", path("nope.json")}).code, 2);
}

TEST_F(CliTest, MalformedInputExitsTwoWithLocation) {
  std::ofstream(path("bad.candidates.json")) << "{\n  \"image_id\": 0,\n  oops\n}";
  const CliRun r = run({"associate", "--input", path("bad.candidates.json"), "--output", path("out.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST_F(CliTest, DanglingReferenceExitsOne) {
  std::ofstream(path("d.candidates.json"))
      << R"({"image_id": 0, "proposals": [{"proposal_id": 0, "bbox": [0, 0, 10, 10], "score": 1}],
             "candidates": [{"proposal_id": 4, "joint_type": 0, "x": 1, "y": 1, "response": 0.9, "u": 2}]})";
  const CliRun r = run({"associate", "--input", path("d.candidates.json"), "--output", path("out.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("integrity"), std::string::npos) << r.err;
}

TEST_F(CliTest, UnknownMethodExitsTwo) {
  std::ofstream(path("e.candidates.json")).close();
  EXPECT_EQ(run({"associate", "--input", path("e.candidates.json"), "--output", path("o.json"), "--method", "x"}).code, 2);
}

TEST_F(CliTest, EvaluateAnnotationsAgainstThemselves) {
  ASSERT_EQ(run({"synth", "--crowd-index", "0.5", "--seed", "8", "--out", path("s")}).code, 0);
  const auto scenes = io::parse_annotations(io::read_file(path("s/scene_00000.annotations.json")));
  std::vector<ImagePoses> perfect;
  for (const auto& s : scenes) {
    ImagePoses ip{s.image_id, {}};
    for (const auto& p : s.persons) {
      Pose pose;
      pose.proposal_id = p.person_id;
      pose.score = 1.0;
      for (std::size_t k = 0; k < kJointCount; ++k) pose.keypoints[k] = Keypoint{p.keypoints[k].location, 1.0};
      ip.poses.push_back(pose);
    }
    perfect.push_back(ip);
  }
  io::write_file_atomic(path("perfect.json"), io::write_results(perfect));
  const CliRun r = run({"evaluate", "--results", path("perfect.json"), "--annotations", path("s"), "--output",
                     path("report.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto report = nlohmann::json::parse(io::read_file(path("report.json")));
  EXPECT_DOUBLE_EQ(report["map_50_95"].get<double>(), 1.0);

  std::ofstream(path("none.json")).close();
  const CliRun e = run({"evaluate", "--results", path("none.json"), "--annotations", path("s")});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(e.out)["map_50_95"].get<double>(), 0.0);
}

TEST_F(CliTest, EvaluateUnknownImageExitsOne) {
  ASSERT_EQ(run({"synth", "--seed", "8", "--out", path("s")}).code, 0);
  io::write_file_atomic(path("r.json"), R"({"image_id": 99, "poses": []})");
  EXPECT_EQ(run({"evaluate", "--results", path("r.json"), "--annotations", path("s")}).code, 1);
}

TEST_F(CliTest, EvaluatePopulatesAllBands) {
  // Low, middle and high targets so every band receives images.
  ASSERT_EQ(run({"synth", "--crowd-index", "0.0", "--persons", "1", "--seed", "100", "--count", "2", "--out",
                 path("easy")}).code, 0);
  ASSERT_EQ(run({"synth", "--crowd-index", "0.5", "--seed", "200", "--count", "2", "--out", path("mid")}).code, 0);
  ASSERT_EQ(run({"synth", "--crowd-index", "0.95", "--seed", "300", "--count", "2", "--out", path("hard")}).code, 0);
  // Image ids restart at 0 per run, so evaluate each directory's ids apart.
  std::vector<SceneAnnotation> all;
  std::vector<io::CandidateSet> sets;
  int next = 0;
  for (const char* d : {"easy", "mid", "hard"}) {
    for (int i = 0; i < 2; ++i) {
      auto a = io::parse_annotations(io::read_file(path(fmt::format("{}/scene_{:05d}.annotations.json", d, i))));
      auto c = io::parse_candidates(io::read_file(path(fmt::format("{}/scene_{:05d}.candidates.json", d, i))));
      a[0].image_id = c[0].image_id = next++;
      all.push_back(a[0]);
      sets.push_back(c[0]);
    }
  }
  io::write_file_atomic(path("all.annotations.json"), io::write_annotations(all));
  fs::create_directories(path("cands"));
  for (const auto& s : sets) {
    io::write_file_atomic(path(fmt::format("cands/{:03d}.candidates.json", s.image_id)), io::write_candidates(s));
  }
  ASSERT_EQ(run({"associate", "--input", path("cands"), "--output", path("res.json")}).code, 0);
  const CliRun r = run({"evaluate", "--results", path("res.json"), "--annotations", path("all.annotations.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto report = nlohmann::json::parse(r.out);
  EXPECT_TRUE(report["ap_easy"].is_number());
  EXPECT_TRUE(report["ap_medium"].is_number());
  EXPECT_TRUE(report["ap_hard"].is_number());
}

TEST_F(CliTest, ConfigPrecedence) {
  io::write_file_atomic(path("c.json"), R"({"mu": 0.2, "seed": 11})");
  ASSERT_EQ(run({"--config", path("c.json"), "synth", "--persons", "2", "--crowd-index", "0.9", "--out", path("cfg")}).code, 0);
  ASSERT_EQ(run({"synth", "--persons", "2", "--crowd-index", "0.9", "--seed", "11", "--mu", "0.2", "--out", path("flags")}).code, 0);
  EXPECT_EQ(io::read_file(path("cfg/scene_00000.candidates.json")), io::read_file(path("flags/scene_00000.candidates.json")));
  ASSERT_EQ(run({"--config", path("c.json"), "synth", "--persons", "2", "--crowd-index", "0.9", "--seed", "12",
                 "--out", path("over")}).code, 0);
  EXPECT_NE(io::read_file(path("cfg/scene_00000.candidates.json")), io::read_file(path("over/scene_00000.candidates.json")));
  io::write_file_atomic(path("bad.json"), R"({"mu": 3})");
  EXPECT_EQ(run({"--config", path("bad.json"), "bench", "--sizes", "10"}).code, 2);
}

TEST_F(CliTest, BenchTable) {
  const CliRun one = run({"bench", "--sizes", "50", "--repeats", "1"});
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(std::count(one.out.begin(), one.out.end(), '\n'), 2);
  EXPECT_NE(one.out.find(" -"), std::string::npos);
  const CliRun small = run({"bench", "--sizes", "10", "--repeats", "3"});
  EXPECT_NE(small.out.find("<1ms"), std::string::npos);
  EXPECT_EQ(run({"bench", "--sizes", "5"}).code, 2);
  const CliRun three = run({"bench", "--sizes", "100,200,400", "--repeats", "5"});
  ASSERT_EQ(three.code, 0);
  EXPECT_EQ(std::count(three.out.begin(), three.out.end(), '\n'), 4);
}

TEST_F(CliTest, HelpAndUsage) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"synth"}).code, 2);
}

}  // namespace
}  // namespace jointassoc
