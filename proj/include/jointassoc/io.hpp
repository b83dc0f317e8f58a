// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "jointassoc/graph.hpp"
#include "jointassoc/grouping.hpp"
#include "jointassoc/metrics.hpp"
#include "jointassoc/simulator.hpp"

namespace jointassoc::io {

// File formats. All floating-point values are written with six decimals.
//
// Annotations: {"images":[{"id","width","height"}],
//               "annotations":[{"image_id","person_id","bbox":[x,y,w,h],
//                               "keypoints":[x1,y1,v1,...,x14,y14,v14]}]}
// Candidates:  {"image_id","proposals":[{"proposal_id","bbox","score"}],
//               "candidates":[{"proposal_id","joint_type","x","y","response","u"}],
//               "provenance":[{"person_id","joint_type"}]}   (provenance optional)
// Results:     {"image_id","poses":[{"proposal_id","score","keypoints":[[x,y,s] | null, x14]}]}
//
// Candidates and results files hold one object or an array of them.

struct CandidateSet {
  int image_id = 0;
  std::vector<PersonProposal> proposals;
  std::vector<CandidateJoint> candidates;
  std::optional<std::vector<CandidateOrigin>> provenance;

  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;
};

/// Indented JSON with floats at six decimals; flat arrays stay on one line.
std::string format_json(const nlohmann::ordered_json& value);

std::string write_annotations(std::span<const SceneAnnotation> scenes);
std::vector<SceneAnnotation> parse_annotations(std::string_view text);

std::string write_candidates(const CandidateSet& set);
std::vector<CandidateSet> parse_candidates(std::string_view text);

std::string write_results(std::span<const ImagePoses> results);
std::vector<ImagePoses> parse_results(std::string_view text);

std::string write_report(const EvalReport& report);

/// Debug dump of a person-joint graph (persons, nodes with members, edges).
std::string write_graph(const PersonJointGraph& graph);

CandidateSet to_candidate_set(const SyntheticScene& scene);

/// Reads a whole file. Throws std::runtime_error when it cannot be opened.
std::string read_file(const std::filesystem::path& path);
/// Writes through a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// `path` itself when it is a file; otherwise the directory's entries ending
/// in `suffix`, sorted by name.
std::vector<std::filesystem::path> expand_inputs(const std::filesystem::path& path, std::string_view suffix);

}  // namespace jointassoc::io
