#include "ontoforge/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ontoforge {

double precision(const ContingencyTable& t) {
  if (t.TP + t.FP <= 0) {
    throw Error(ErrorKind::usage, "precision: TP+FP must be positive");
  }
  return static_cast<double>(t.TP) / static_cast<double>(t.TP + t.FP);
}

double recall(const ContingencyTable& t) {
  if (!t.FN) {
    throw Error(ErrorKind::metric_unavailable, "recall: FN unavailable");
  }
  if (t.TP + *t.FN <= 0) {
    throw Error(ErrorKind::usage, "recall: TP+FN must be positive");
  }
  return static_cast<double>(t.TP) / static_cast<double>(t.TP + *t.FN);
}

double f1(const ContingencyTable& t) {
  double p = precision(t);
  double r = recall(t);
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

double accuracy(const ContingencyTable& t) {
  if (!t.FN || !t.TN) {
    throw Error(ErrorKind::metric_unavailable, "accuracy: FN/TN unavailable");
  }
  long long total = t.TP + t.FP + *t.FN + *t.TN;
  if (total <= 0) {
    throw Error(ErrorKind::usage, "accuracy: empty contingency table");
  }
  return static_cast<double>(t.TP + *t.TN) / static_cast<double>(total);
}

void validate_candidate_identity(const ContingencyTable& t, long long tc_size) {
  if (!t.FN || !t.TN) {
    throw Error(ErrorKind::metric_unavailable,
                "candidate identity: FN/TN unavailable");
  }
  if (t.TP + t.FP + *t.FN + *t.TN != tc_size) {
    throw Error(ErrorKind::internal_consistency,
                "contingency cells do not sum to |TC|");
  }
}

BenchmarkConceptSet parse_benchmark(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("benchmark: ") + e.what());
  }
  BenchmarkConceptSet set;
  try {
    for (const auto& jc : j.at("concepts")) {
      BenchmarkConcept c;
      c.id = jc.at("id").get<std::string>();
      c.label = to_lower(jc.at("label").get<std::string>());
      if (jc.contains("synonyms")) {
        for (const auto& s : jc["synonyms"]) {
          c.synonyms.push_back(to_lower(s.get<std::string>()));
        }
      }
      if (jc.contains("seed_terms")) {
        for (const auto& s : jc["seed_terms"]) {
          c.seed_terms.push_back(to_lower(s.get<std::string>()));
        }
      }
      set.concepts.push_back(std::move(c));
    }
    if (j.contains("excluded")) {
      for (const auto& je : j["excluded"]) {
        set.excluded.push_back({je.at("id").get<std::string>(),
                                je.at("reason").get<std::string>()});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("benchmark: ") + e.what());
  }
  std::set<std::string> ids;
  for (const BenchmarkConcept& c : set.concepts) {
    if (!ids.insert(c.id).second) {
      throw Error(ErrorKind::validation, "benchmark: duplicate concept id " + c.id);
    }
  }
  return set;
}

BenchmarkConceptSet load_benchmark(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ingest, "cannot read benchmark: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_benchmark(ss.str());
}

std::vector<DiscoveredConcept> discovered_concepts(const OntologyGraph& g,
                                                   bool include_root) {
  std::vector<DiscoveredConcept> out;
  for (const auto& [id, c] : g.concepts) {
    if (!include_root && id == g.root_id) continue;
    out.push_back({id, to_lower(c.label), c.member_terms});
  }
  return out;
}

OverlapResult lexical_overlap(const std::vector<DiscoveredConcept>& discovered,
                              const BenchmarkConceptSet& benchmark,
                              double tau) {
  if (benchmark.concepts.empty()) {
    throw Error(ErrorKind::usage, "lexical_overlap: empty benchmark set");
  }
  OverlapResult result;
  for (const BenchmarkConcept& m : benchmark.concepts) {
    // best match wins; ties resolve to the smaller concept id
    const DiscoveredConcept* best = nullptr;
    double best_overlap = -1.0;
    MatchKind best_kind = MatchKind::member_overlap;
    for (const DiscoveredConcept& d : discovered) {
      double overlap = -1.0;
      MatchKind kind = MatchKind::member_overlap;
      bool label_hit = d.label == m.label;
      for (const std::string& syn : m.synonyms) {
        if (d.label == syn) label_hit = true;
      }
      if (label_hit) {
        overlap = 1.0;
        kind = MatchKind::label;
      } else if (!m.seed_terms.empty()) {
        int present = 0;
        for (const std::string& seed : m.seed_terms) {
          if (d.members.count(seed)) ++present;
        }
        double fraction = static_cast<double>(present) /
                          static_cast<double>(m.seed_terms.size());
        if (fraction >= tau && fraction > 0.0) {
          overlap = fraction;
          kind = MatchKind::member_overlap;
        }
      }
      if (overlap < 0.0) continue;
      if (overlap > best_overlap ||
          (overlap == best_overlap && best && d.id < best->id)) {
        best = &d;
        best_overlap = overlap;
        best_kind = kind;
      }
    }
    if (best) {
      result.matched.push_back({m.id, best->id, best_kind});
    } else {
      result.missed.push_back(m.id);
    }
  }
  result.lo = static_cast<double>(result.matched.size()) /
              static_cast<double>(benchmark.concepts.size());
  return result;
}

double ontological_loss(const OverlapResult& overlap,
                        const BenchmarkConceptSet& benchmark) {
  if (benchmark.concepts.empty()) {
    throw Error(ErrorKind::usage, "ontological_loss: empty benchmark set");
  }
  return static_cast<double>(overlap.missed.size()) /
         static_cast<double>(benchmark.concepts.size());
}

FrequencyDistributionReport frequency_distribution_report(
    const RankedTermList& list) {
  if (list.entries.empty()) {
    throw Error(ErrorKind::usage, "frequency_distribution_report: empty list");
  }
  FrequencyDistributionReport report;
  report.measure = list.measure;
  report.rows = list.entries;

  const std::size_t n = list.entries.size();
  for (int dec = 0; dec < 10; ++dec) {
    std::size_t lo = n * static_cast<std::size_t>(dec) / 10;
    std::size_t hi = n * static_cast<std::size_t>(dec + 1) / 10;
    if (hi <= lo) continue;
    double sum_d = 0.0, sum_dbar = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      sum_d += static_cast<double>(list.entries[i].f_d);
      sum_dbar += static_cast<double>(list.entries[i].f_dbar);
    }
    DecileSummary s;
    s.decile = dec + 1;
    s.mean_f_d = sum_d / static_cast<double>(hi - lo);
    s.mean_f_dbar = sum_dbar / static_cast<double>(hi - lo);
    report.deciles.push_back(s);
  }
  return report;
}

std::string frequency_distribution_csv(const FrequencyDistributionReport& report) {
  std::string out = "rank,term,score,f_d,f_dbar\n";
  char buf[64];
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const RankedEntry& e = report.rows[i];
    std::snprintf(buf, sizeof(buf), "%.6f", e.score);
    std::string term = e.candidate.normalized;
    bool quote = term.find(',') != std::string::npos;
    out += std::to_string(i + 1);
    out += ',';
    if (quote) out += '"';
    out += term;
    if (quote) out += '"';
    out += ',';
    out += buf;
    out += ',';
    out += std::to_string(e.f_d);
    out += ',';
    out += std::to_string(e.f_dbar);
    out += '\n';
  }
  out += "\ndecile,mean_f_d,mean_f_dbar\n";
  for (const DecileSummary& s : report.deciles) {
    char line[96];
    std::snprintf(line, sizeof(line), "%d,%.4f,%.4f\n", s.decile, s.mean_f_d,
                  s.mean_f_dbar);
    out += line;
  }
  return out;
}

std::string eval_report_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["measure"] = to_string(report.measure);
  if (report.precision_at_n) {
    j["precision_at_n"] = *report.precision_at_n;
  } else {
    j["precision_at_n"] = nullptr;
  }
  j["lexical_overlap"] = report.lo;
  j["ontological_loss"] = report.ol;
  j["matched"] = nlohmann::ordered_json::array();
  for (const ConceptMatch& m : report.matched) {
    nlohmann::ordered_json jm;
    jm["benchmark"] = m.benchmark_id;
    jm["concept"] = m.concept_id;
    jm["kind"] = m.kind == MatchKind::label ? "label" : "member-overlap";
    j["matched"].push_back(std::move(jm));
  }
  j["missed"] = report.missed;
  return j.dump(2) + "\n";
}

}  // namespace ontoforge
