// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jointassoc/config.hpp"
#include "jointassoc/pipeline.hpp"

namespace jointassoc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Bad flag values or unreadable inputs; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SynthOptions {
  int person_min = 3;
  int person_max = 8;
  double crowd_index = 0.5;
  std::uint64_t seed = 0;
  int count = 1;
  std::filesystem::path out;
};

struct AssociateOptions {
  std::filesystem::path input;
  std::filesystem::path output;
  Method method = Method::kGlobal;
};

struct EvaluateOptions {
  std::filesystem::path results;
  std::filesystem::path annotations;
  std::optional<std::filesystem::path> output;
};

struct BenchOptions {
  std::vector<std::size_t> sizes = {100, 200, 400};
  std::size_t repeats = 5;
  std::uint64_t seed = 0;
};

void cmd_synth(const SynthOptions& options, const Config& config, std::ostream& out);
void cmd_associate(const AssociateOptions& options, const Config& config, std::ostream& out);
void cmd_evaluate(const EvaluateOptions& options, const Config& config, std::ostream& out);
void cmd_bench(const BenchOptions& options, std::ostream& out);

/// Parses arguments, runs the subcommand and maps errors to exit codes:
/// 0 success, 1 integrity or internal error, 2 argument, parse or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jointassoc
