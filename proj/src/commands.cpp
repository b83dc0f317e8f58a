// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "jointassoc/commands.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include "jointassoc/bench.hpp"
#include "jointassoc/error.hpp"
#include "jointassoc/io.hpp"
#include "jointassoc/metrics.hpp"
#include "jointassoc/simulator.hpp"

namespace jointassoc {

namespace {

std::vector<std::filesystem::path> inputs(const std::filesystem::path& path, std::string_view suffix) {
  if (!std::filesystem::exists(path)) throw UsageError(fmt::format("input '{}' does not exist", path.string()));
  return io::expand_inputs(path, suffix);
}

std::string read_input(const std::filesystem::path& path) {
  try {
    return io::read_file(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

void cmd_synth(const SynthOptions& options, const Config& config, std::ostream& out) {
  if (!(options.crowd_index >= 0.0 && options.crowd_index <= 1.0)) {
    throw UsageError(fmt::format("--crowd-index must lie in [0, 1], got {}", options.crowd_index));
  }
  if (options.count < 1) throw UsageError("--count must be >= 1");
  if (options.person_min < 1 || options.person_max < options.person_min) {
    throw UsageError(fmt::format("invalid person range [{}, {}]", options.person_min, options.person_max));
  }
  std::vector<std::string> summary;
  for (int i = 0; i < options.count; ++i) {
    SceneSpec spec;
    spec.image_id = i;
    spec.person_min = options.person_min;
    spec.person_max = options.person_max;
    spec.target_crowd_index = options.crowd_index;
    spec.seed = options.seed + static_cast<std::uint64_t>(i);
    spec.mu = config.mu;
    spec.heatmap_sigma = config.sigma;
    spec.box_extension = config.box_extension;
    const SyntheticScene scene = simulate_scene(spec);
    const std::string stem = fmt::format("scene_{:05d}", i);
    const SceneAnnotation annotation[] = {scene.annotation};
    io::write_file_atomic(options.out / (stem + ".annotations.json"), io::write_annotations(annotation));
    io::write_file_atomic(options.out / (stem + ".candidates.json"), io::write_candidates(io::to_candidate_set(scene)));
    summary.push_back(fmt::format("{}: persons={} proposals={} candidates={} crowd_index={:.6f} target={:.6f}{}", stem,
                                  scene.annotation.persons.size(), scene.proposals.size(), scene.candidates.size(),
                                  scene.achieved_index, options.crowd_index,
                                  scene.target_reached ? "" : " (target not reached)"));
  }
  for (const auto& line : summary) out << line << "\n";
}

void cmd_associate(const AssociateOptions& options, const Config& config, std::ostream& out) {
  const PipelineOptions pipeline = config.pipeline(options.method);
  std::vector<ImagePoses> results;
  std::size_t total_persons = 0, total_nodes = 0, total_edges = 0;
  double total_weight = 0.0;
  for (const auto& file : inputs(options.input, ".candidates.json")) {
    for (const io::CandidateSet& set : io::parse_candidates(read_input(file))) {
      const AssociationResult r = associate(set.proposals, set.candidates, pipeline);
      out << fmt::format("image {}: persons={} nodes={} edges={} total_weight={:.6f}\n", set.image_id,
                         r.graph.persons.size(), r.graph.nodes.size(), r.graph.edges.size(), r.total_weight);
      total_persons += r.graph.persons.size();
      total_nodes += r.graph.nodes.size();
      total_edges += r.graph.edges.size();
      total_weight += r.total_weight;
      results.push_back({set.image_id, r.poses});
    }
  }
  io::write_file_atomic(options.output, io::write_results(results));
  out << fmt::format("method={} images={} persons={} nodes={} edges={} total_weight={:.6f}\n", to_string(options.method),
                     results.size(), total_persons, total_nodes, total_edges, total_weight);
}

void cmd_evaluate(const EvaluateOptions& options, const Config& config, std::ostream& out) {
  std::vector<ImagePoses> results;
  for (const auto& file : inputs(options.results, ".json")) {
    auto part = io::parse_results(read_input(file));
    results.insert(results.end(), part.begin(), part.end());
  }
  std::vector<SceneAnnotation> annotations;
  for (const auto& file : inputs(options.annotations, ".annotations.json")) {
    auto part = io::parse_annotations(read_input(file));
    annotations.insert(annotations.end(), part.begin(), part.end());
  }
  EvalOptions eval;
  eval.sigmas = config.oks_sigmas;
  const std::string report = io::write_report(evaluate(results, annotations, eval));
  if (options.output) io::write_file_atomic(*options.output, report);
  out << report;
}

void cmd_bench(const BenchOptions& options, std::ostream& out) {
  if (options.sizes.empty()) throw UsageError("--sizes needs at least one value");
  for (std::size_t n : options.sizes) {
    if (n < 10) throw UsageError(fmt::format("bench sizes must be >= 10, got {}", n));
  }
  if (options.repeats < 1) throw UsageError("--repeats must be >= 1");
  out << format_bench(run_bench(options.sizes, options.repeats, options.seed));
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Person-joint association: synthesis, association, evaluation and benchmarks"};
  app.require_subcommand(1);
  std::optional<std::string> config_path;
  app.add_option("--config", config_path, "JSON config file");

  Config flags;
  SynthOptions synth;
  std::string synth_out;
  std::optional<int> persons;
  std::optional<std::uint64_t> synth_seed;
  std::optional<double> mu, sigma, delta_scale;
  auto* s = app.add_subcommand("synth", "Generate synthetic scenes");
  s->add_option("--persons", persons, "Exact person count per scene")->check(CLI::PositiveNumber);
  s->add_option("--min-persons", synth.person_min, "Smallest person count")->capture_default_str();
  s->add_option("--max-persons", synth.person_max, "Largest person count")->capture_default_str();
  s->add_option("--crowd-index", synth.crowd_index, "Target Crowd Index in [0, 1]")->capture_default_str();
  s->add_option("--seed", synth_seed, "Seed of the first scene");
  s->add_option("--count", synth.count, "Number of scenes")->capture_default_str();
  s->add_option("--out", synth_out, "Output directory")->required();
  s->add_option("--mu", mu, "Interference response level");
  s->add_option("--sigma", sigma, "Heatmap Gaussian sigma");

  AssociateOptions assoc;
  std::string assoc_in, assoc_out, method = "global";
  auto* a = app.add_subcommand("associate", "Group candidates and assign joints to proposals");
  a->add_option("--input", assoc_in, "Candidates file or directory")->required();
  a->add_option("--output", assoc_out, "Results file")->required();
  a->add_option("--method", method, "global, greedy, bbox-nms or pose-nms")->capture_default_str();
  a->add_option("--delta-scale", delta_scale, "Pixels per unit of delta; <= 0 derives it per image");

  EvaluateOptions evalo;
  std::string eval_results, eval_annotations;
  std::optional<std::string> eval_output;
  auto* e = app.add_subcommand("evaluate", "Score results against annotations");
  e->add_option("--results", eval_results, "Results file or directory")->required();
  e->add_option("--annotations", eval_annotations, "Annotations file or directory")->required();
  e->add_option("--output", eval_output, "Report file");

  BenchOptions bench;
  auto* b = app.add_subcommand("bench", "Time the global solver on sparse graphs");
  b->add_option("--sizes", bench.sizes, "Person counts")->delimiter(',')->capture_default_str();
  b->add_option("--repeats", bench.repeats, "Runs per size; the median is reported")->capture_default_str();
  b->add_option("--seed", bench.seed, "Graph seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Config config;
    if (config_path) {
      if (!std::filesystem::exists(*config_path)) throw UsageError(fmt::format("config '{}' does not exist", *config_path));
      config = load_config(*config_path);
    }
    if (mu) config.mu = *mu;
    if (sigma) config.sigma = *sigma;
    if (delta_scale) config.delta_scale = *delta_scale;
    if (synth_seed) config.seed = *synth_seed;
    try {
      config.validate();
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }

    if (*s) {
      if (persons) synth.person_min = synth.person_max = *persons;
      synth.seed = config.seed;
      synth.out = synth_out;
      cmd_synth(synth, config, out);
    } else if (*a) {
      try {
        assoc.method = parse_method(method);
      } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
      }
      assoc.input = assoc_in;
      assoc.output = assoc_out;
      cmd_associate(assoc, config, out);
    } else if (*e) {
      evalo.results = eval_results;
      evalo.annotations = eval_annotations;
      if (eval_output) evalo.output = *eval_output;
      cmd_evaluate(evalo, config, out);
    } else if (*b) {
      cmd_bench(bench, out);
    }
    return kExitOk;
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const IntegrityError& ex) {
    err << "integrity error: " << ex.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace jointassoc
