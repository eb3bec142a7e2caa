// ontoforge: builds a lightweight domain ontology from text corpora.
// One subcommand per pipeline phase plus run-all.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ontoforge/pipeline.hpp"

namespace {

struct CliOverrides {
  std::optional<unsigned long long> seed;
  std::optional<std::string> measure;
  std::optional<int> top_n;
  std::optional<long long> sample_frames;
  std::optional<std::string> out_dir;
};

ontoforge::PipelineConfig make_config(const std::string& config_path,
                                      const CliOverrides& overrides) {
  ontoforge::PipelineConfig config = ontoforge::load_config(config_path);
  if (overrides.seed) {
    config.seed = *overrides.seed;
    config.cluster.seed = *overrides.seed;
  }
  if (overrides.measure)
    config.measure = ontoforge::measure_from_string(*overrides.measure);
  if (overrides.top_n) config.top_n = *overrides.top_n;
  if (overrides.sample_frames) config.sample_frames = *overrides.sample_frames;
  if (overrides.out_dir) config.out_dir = *overrides.out_dir;
  ontoforge::validate_config(config);
  return config;
}

void print_outcome(const ontoforge::PhaseOutcome& outcome) {
  std::printf("[%s] %s", outcome.name.c_str(), outcome.status.c_str());
  if (!outcome.note.empty()) std::printf(" (%s)", outcome.note.c_str());
  std::printf(" in %lld ms\n", outcome.millis);
  for (const auto& artifact : outcome.outputs) {
    std::printf("  %s  %s\n", artifact.digest.c_str(), artifact.path.c_str());
  }
}

int error_exit_code(ontoforge::ErrorKind kind) {
  switch (kind) {
    case ontoforge::ErrorKind::usage:
    case ontoforge::ErrorKind::validation:
      return 2;
    case ontoforge::ErrorKind::dependency:
      return 3;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ontoforge: lightweight domain ontology construction from text"};
  app.set_version_flag("--version", std::string("ontoforge ") + ontoforge::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  CliOverrides overrides;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "pipeline config JSON")->required();
    cmd->add_option("--seed", overrides.seed, "seed for sampling and clustering");
    cmd->add_option("--measure", overrides.measure, "ranking measure: th|ot|cw|ncv");
    cmd->add_option("--top-n", overrides.top_n, "terms passed to clustering");
    cmd->add_option("--sample-frames", overrides.sample_frames,
                    "uniformly sample this many frames");
    cmd->add_option("--out-dir", overrides.out_dir, "artifact directory");
    return cmd;
  };

  struct Phase {
    const char* name;
    const char* help;
    ontoforge::PhaseOutcome (*run)(const ontoforge::PipelineConfig&);
  };
  const Phase phases[] = {
      {"ingest", "ingest the domain and contrastive corpora", ontoforge::phase_ingest},
      {"clean", "ISSAC-style text cleaning of the domain corpus", ontoforge::phase_clean},
      {"frames", "chunk noun phrases and extract ternary frames", ontoforge::phase_frames},
      {"terms", "score and rank term candidates", ontoforge::phase_terms},
      {"cluster", "cluster top terms into a concept tree", ontoforge::phase_cluster},
      {"ontology", "assemble and export the lightweight ontology", ontoforge::phase_ontology},
      {"eval", "evaluate against a benchmark concept set", ontoforge::phase_eval},
  };
  for (const Phase& phase : phases) {
    add_common(app.add_subcommand(phase.name, phase.help));
  }
  add_common(app.add_subcommand("run-all", "run every phase in order"));

  CLI11_PARSE(app, argc, argv);

  try {
    ontoforge::PipelineConfig config = make_config(config_path, overrides);
    CLI::App* sub = app.get_subcommands().front();
    if (sub->get_name() == "run-all") {
      for (const auto& outcome : ontoforge::run_all(config)) {
        print_outcome(outcome);
      }
      return 0;
    }
    for (const Phase& phase : phases) {
      if (sub->get_name() == phase.name) {
        print_outcome(phase.run(config));
        return 0;
      }
    }
    std::fprintf(stderr, "unknown subcommand\n");
    return 2;
  } catch (const ontoforge::Error& e) {
    std::fprintf(stderr, "error (%s): %s\n", ontoforge::to_string(e.kind()),
                 e.what());
    return error_exit_code(e.kind());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
