#ifndef ONTOFORGE_PIPELINE_HPP
#define ONTOFORGE_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ontoforge/cleaning.hpp"
#include "ontoforge/cluster.hpp"
#include "ontoforge/corpus.hpp"
#include "ontoforge/eval.hpp"
#include "ontoforge/frames.hpp"
#include "ontoforge/termhood.hpp"

namespace ontoforge {

inline constexpr const char* kVersion = "0.1.0";

struct PipelineConfig {
  std::string domain_dir;
  std::string contrastive_dir;
  std::optional<std::string> abbrev_path;
  std::optional<std::string> snapshot_path;
  std::optional<std::string> benchmark_path;
  int window = 5;
  std::optional<long long> sample_frames;
  int top_n = 36;
  Measure measure = Measure::TH;
  double theta_ou = 0.0;
  TermhoodParams termhood;
  TTAParams cluster;
  CleaningConfig cleaning;
  unsigned long long seed = 1;
  std::string out_dir = "out";
};

// Parses the JSON config; ONTOFORGE_OUT overrides out_dir when set.
PipelineConfig load_config(const std::string& path);
PipelineConfig parse_config(const std::string& json_text);

// Throws a validation error listing every offending field.
void validate_config(const PipelineConfig& config);

struct ArtifactDigest {
  std::string path;  // relative to out_dir
  std::string digest;
};

struct PhaseOutcome {
  std::string name;
  std::string status;  // ok | skipped
  std::vector<ArtifactDigest> outputs;
  long long millis = 0;
  std::string note;
};

PhaseOutcome phase_ingest(const PipelineConfig& config);
PhaseOutcome phase_clean(const PipelineConfig& config);
PhaseOutcome phase_frames(const PipelineConfig& config);
PhaseOutcome phase_terms(const PipelineConfig& config);
PhaseOutcome phase_cluster(const PipelineConfig& config);
PhaseOutcome phase_ontology(const PipelineConfig& config);
PhaseOutcome phase_eval(const PipelineConfig& config);

// All phases in order; cleaning and eval may be skipped (disabled /
// no benchmark). The first failing phase aborts; earlier artifacts stay.
std::vector<PhaseOutcome> run_all(const PipelineConfig& config);

// 64-bit FNV-1a of a file's bytes, as hex
std::string file_digest(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// manifest.json bookkeeping: one entry per phase, replaced on rerun
void record_phase(const PipelineConfig& config, const PhaseOutcome& outcome);

}  // namespace ontoforge

#endif
