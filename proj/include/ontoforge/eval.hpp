#ifndef ONTOFORGE_EVAL_HPP
#define ONTOFORGE_EVAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "ontoforge/ontology.hpp"
#include "ontoforge/termhood.hpp"

namespace ontoforge {

// FN/TN stay empty when no gold standard exists; precision is then the
// only applicable metric.
struct ContingencyTable {
  long long TP = 0;
  long long FP = 0;
  std::optional<long long> FN;
  std::optional<long long> TN;
};

double precision(const ContingencyTable& t);
double recall(const ContingencyTable& t);
double f1(const ContingencyTable& t);
double accuracy(const ContingencyTable& t);

// |TC| = TP+FP+FN+TN must hold when all four cells are known
void validate_candidate_identity(const ContingencyTable& t, long long tc_size);

struct BenchmarkConcept {
  std::string id;
  std::string label;
  std::vector<std::string> synonyms;
  std::vector<std::string> seed_terms;
};

struct ExcludedConcept {
  std::string id;
  std::string reason;
};

struct BenchmarkConceptSet {
  std::vector<BenchmarkConcept> concepts;  // the non-excluded set C_m
  std::vector<ExcludedConcept> excluded;
};

BenchmarkConceptSet load_benchmark(const std::string& path);
BenchmarkConceptSet parse_benchmark(const std::string& json_text);

enum class MatchKind { label, member_overlap };

struct ConceptMatch {
  std::string benchmark_id;
  std::string concept_id;
  MatchKind kind;
};

struct OverlapResult {
  double lo = 0.0;
  std::vector<ConceptMatch> matched;
  std::vector<std::string> missed;  // benchmark ids
};

// Discovered concepts as the matcher sees them.
struct DiscoveredConcept {
  std::string id;
  std::string label;
  std::set<std::string> members;
};

std::vector<DiscoveredConcept> discovered_concepts(const OntologyGraph& g,
                                                   bool include_root = false);

OverlapResult lexical_overlap(const std::vector<DiscoveredConcept>& discovered,
                              const BenchmarkConceptSet& benchmark,
                              double tau = 0.5);

double ontological_loss(const OverlapResult& overlap,
                        const BenchmarkConceptSet& benchmark);

struct DecileSummary {
  int decile = 0;  // 1-based
  double mean_f_d = 0.0;
  double mean_f_dbar = 0.0;
};

struct FrequencyDistributionReport {
  Measure measure = Measure::TH;
  std::vector<RankedEntry> rows;  // rank order
  std::vector<DecileSummary> deciles;
};

FrequencyDistributionReport frequency_distribution_report(const RankedTermList& list);
std::string frequency_distribution_csv(const FrequencyDistributionReport& report);

struct EvalReport {
  Measure measure = Measure::TH;
  std::optional<double> precision_at_n;  // absent without judged relevance
  double lo = 0.0;
  double ol = 0.0;
  std::vector<ConceptMatch> matched;
  std::vector<std::string> missed;
};

std::string eval_report_json(const EvalReport& report);

}  // namespace ontoforge

#endif
