// Acceptance suite: runs every criterion and prints one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ontoforge/cleaning.hpp"
#include "ontoforge/cluster.hpp"
#include "ontoforge/eval.hpp"
#include "ontoforge/frames.hpp"
#include "ontoforge/ontology.hpp"
#include "ontoforge/pipeline.hpp"
#include "ontoforge/termhood.hpp"

using namespace ontoforge;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = ONTOFORGE_FIXTURE_DIR;

int g_failures = 0;

void report(int criterion, const char* name, bool ok, const std::string& detail = "") {
  std::printf("%s  criterion-%d  %s%s%s\n", ok ? "PASS" : "FAIL", criterion, name,
              detail.empty() ? "" : ": ", detail.c_str());
  if (!ok) ++g_failures;
}

struct Check {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

PipelineConfig fixture_config(const std::string& out_dir) {
  PipelineConfig config = load_config(kFixtures + "/config.json");
  config.out_dir = out_dir;
  validate_config(config);
  return config;
}

BenchmarkConceptSet synthetic_benchmark(int n) {
  BenchmarkConceptSet set;
  for (int i = 0; i < n; ++i) {
    BenchmarkConcept c;
    c.id = "m" + std::to_string(i);
    c.label = "concept " + std::to_string(i);
    set.concepts.push_back(std::move(c));
  }
  return set;
}

std::vector<DiscoveredConcept> synthetic_discovered(int n) {
  std::vector<DiscoveredConcept> out;
  for (int i = 0; i < n; ++i) {
    out.push_back({"d" + std::to_string(i), "concept " + std::to_string(i), {}});
  }
  return out;
}

// shared term pipeline state computed once on the fixture corpus
struct FixtureTerms {
  std::vector<TermCandidate> candidates;
  std::map<std::string, TermStats> stats;
  WordStats words;
  CorpusTotals totals;
  NestingMap nesting;
  ContextStats ctx;
  RankedTermList ot;
  RankedTermList cw;
};

FixtureTerms compute_fixture_terms(const PipelineConfig& config) {
  IngestResult domain = ingest_directory(config.domain_dir, CorpusTag::domain);
  IngestResult contrastive =
      ingest_directory(config.contrastive_dir, CorpusTag::contrastive);
  FrequencyIndex domain_index = build_frequency_index(domain.documents, config.window);

  std::vector<TernaryFrame> frames;
  for (const Document& doc : domain.documents) {
    if (doc.source_kind != SourceKind::conllu) continue;
    auto sentences = load_conllu(doc);
    for (std::size_t s = 0; s < sentences.size(); ++s) {
      auto chunks = chunk_noun_phrases(sentences[s], domain_index, {config.theta_ou});
      for (TernaryFrame& f : extract_frames(sentences[s], chunks)) {
        f.doc_id = doc.id;
        f.sentence = static_cast<int>(s + 1);
        frames.push_back(std::move(f));
      }
    }
  }
  std::vector<FrameRecord> records;
  for (const auto& f : frames) records.push_back(to_record(f));

  std::vector<TokenizedDoc> domain_tok, contrastive_tok;
  for (const auto& d : domain.documents) domain_tok.push_back(tokenized_doc(d));
  for (const auto& d : contrastive.documents)
    contrastive_tok.push_back(tokenized_doc(d));

  FixtureTerms ft;
  ft.candidates = collect_candidates(records);
  for (const TermCandidate& c : ft.candidates) {
    ft.stats[c.normalized] = compute_stats(c, domain_tok, contrastive_tok, records);
  }
  FrequencyIndex contrastive_index =
      build_frequency_index(contrastive.documents, config.window);
  ft.words = build_word_stats(domain_index, contrastive_index);
  for (const auto& [_, s] : ft.stats) {
    ft.totals.F_d += s.f_d;
    ft.totals.F_dbar += s.f_dbar;
  }
  if (ft.totals.F_d == 0) ft.totals.F_d = 1;
  if (ft.totals.F_dbar == 0) ft.totals.F_dbar = 1;
  ft.nesting = build_nesting(ft.candidates, ft.stats);
  ft.ctx = build_context_stats(ft.candidates, ft.stats);

  ScoringInputs inputs{&ft.stats, &ft.words, ft.totals, &ft.nesting, &ft.ctx, {}};
  ft.ot = rank_terms(ft.candidates, Measure::OT, inputs);
  ft.cw = rank_terms(ft.candidates, Measure::CW, inputs);
  return ft;
}

// ---------------------------------------------------------------------------

void criterion_1_overlap_arithmetic() {
  Check c;
  auto b16 = synthetic_benchmark(16);
  auto overlap = lexical_overlap(synthetic_discovered(11), b16);
  c.expect(overlap.lo == 0.6875, "LO(11,16) != 0.6875");
  c.expect(ontological_loss(overlap, b16) == 0.3125, "OL(5,16) != 0.3125");

  auto b12 = synthetic_benchmark(12);
  auto overlap12 = lexical_overlap(synthetic_discovered(11), b12);
  c.expect(overlap12.lo >= 0.9166 && overlap12.lo <= 0.9167,
           "LO(11,12) outside [0.9166, 0.9167]");
  report(1, "lexical-overlap and ontological-loss arithmetic", c.ok, c.detail);
}

void criterion_2_worked_sentence(const PipelineConfig& config) {
  Check c;
  IngestResult domain = ingest_directory(config.domain_dir, CorpusTag::domain);
  FrequencyIndex index = build_frequency_index(domain.documents, config.window);

  const Document* pha = nullptr;
  for (const Document& d : domain.documents) {
    if (d.id == "pha_overview") pha = &d;
  }
  c.expect(pha != nullptr, "fixture doc pha_overview missing");
  if (pha) {
    auto sentences = load_conllu(*pha);
    c.expect(sentences.size() == 1, "expected a single bundled sentence");
    auto chunks = chunk_noun_phrases(sentences[0], index, {config.theta_ou});
    auto frames = extract_frames(sentences[0], chunks);
    c.expect(frames.size() == 4,
             "expected 4 frames, got " + std::to_string(frames.size()));
    std::vector<FrameRecord> records;
    for (const auto& f : frames) records.push_back(to_record(f));
    std::set<std::string> names;
    for (const auto& cand : collect_candidates(records)) names.insert(cand.normalized);
    c.expect(names == std::set<std::string>{"team", "several hazardous chemical",
                                            "new process",
                                            "process hazards analysis"},
             "candidate set mismatch");
  }
  report(2, "worked sentence yields 4 frames and the 4-candidate set", c.ok, c.detail);
}

void criterion_3_unithood(const PipelineConfig& config) {
  Check c;
  IngestResult domain = ingest_directory(config.domain_dir, CorpusTag::domain);
  FrequencyIndex index = build_frequency_index(domain.documents, config.window);

  const Document* doc = nullptr;
  for (const Document& d : domain.documents) {
    if (d.id == "hazop_overview") doc = &d;
  }
  c.expect(doc != nullptr, "fixture doc hazop_overview missing");
  if (doc) {
    auto sentences = load_conllu(*doc);
    bool hazop_joined = false;
    bool hazard_risk_split = true;
    for (const auto& sentence : sentences) {
      auto result = chunk_noun_phrases(sentence, index, {config.theta_ou});
      for (const auto& np : result.phrases) {
        if (np.normalized == "hazard and operability study") hazop_joined = true;
        if (np.normalized == "hazard and risk") hazard_risk_split = false;
      }
    }
    c.expect(hazop_joined, "'hazard and operability study' was not one chunk");
    c.expect(hazard_risk_split, "'hazard and risk' was merged into one chunk");
  }
  report(3, "unithood keeps stable units and splits weak pairs", c.ok, c.detail);
}

void criterion_4_termhood_properties(const FixtureTerms& ft) {
  Check c;
  std::mt19937_64 rng(404);
  WordStats words;
  auto cand = TermCandidate::from_phrase("term");
  TermStats s;
  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    long long f_d = static_cast<long long>(rng() % 400);
    long long f_dbar = static_cast<long long>(rng() % 400);
    long long extra = 1 + static_cast<long long>(rng() % 400);
    s.f_d = f_d;
    s.f_dbar = f_dbar;
    TermStats up = s, down = s;
    up.f_d = f_d + 1;
    down.f_dbar = f_dbar + 1;
    c.expect(score_TH(cand, up, words) > score_TH(cand, s, words),
             "TH not increasing in f_d");
    c.expect(score_TH(cand, down, words) < score_TH(cand, s, words),
             "TH not decreasing in f_dbar");
    CorpusTotals totals{f_d + 1 + extra, f_dbar + 1 + extra};
    c.expect(score_OT(cand, up, words, totals) > score_OT(cand, s, words, totals),
             "OT not increasing in f_d");
    c.expect(score_OT(cand, down, words, totals) < score_OT(cand, s, words, totals),
             "OT not decreasing in f_dbar");
  }

  TermStats sym;
  sym.f_d = sym.f_dbar = 17;
  c.expect(std::abs(score_OT(cand, sym, words, {300, 300})) < 1e-12,
           "OT not zero at the symmetric point");

  // NCV never reads contrastive counts
  NestingMap nesting;
  ContextStats ctx;
  ctx.candidate_count = 5;
  TermStats a, b;
  a.f_d = b.f_d = 21;
  a.f_dbar = 0;
  b.f_dbar = 998;
  c.expect(score_NCV(cand, a, nesting, ctx) == score_NCV(cand, b, nesting, ctx),
           "NCV changed under contrastive perturbation");

  // CW fixture bias: some complex term outranks every simple term with a
  // larger domain frequency
  std::map<std::string, double> cw_score;
  std::map<std::string, long long> f_d;
  std::map<std::string, bool> complex_term;
  for (const auto& e : ft.cw.entries) {
    cw_score[e.candidate.normalized] = e.score;
    f_d[e.candidate.normalized] = e.f_d;
    complex_term[e.candidate.normalized] = e.candidate.length() > 1;
  }
  bool bias_seen = false;
  for (const auto& [name, is_complex] : complex_term) {
    if (!is_complex) continue;
    bool beats_all = false;
    for (const auto& [other, other_complex] : complex_term) {
      if (other_complex || f_d[other] <= f_d[name]) continue;
      beats_all = true;  // at least one simple term with higher f_d exists
      if (cw_score[name] <= cw_score[other]) {
        beats_all = false;
        break;
      }
    }
    if (beats_all) {
      bias_seen = true;
      break;
    }
  }
  c.expect(bias_seen, "no complex term outranks all higher-frequency simple terms");
  report(4, "termhood property suite (TH/OT monotone, NCV invariance, CW bias)",
         c.ok, c.detail);
}

void criterion_5_polarization(const FixtureTerms& ft) {
  Check c;
  auto freq = frequency_distribution_report(ft.ot);
  c.expect(!freq.deciles.empty(), "no deciles computed");
  if (!freq.deciles.empty()) {
    const DecileSummary& top = freq.deciles.front();
    c.expect(top.mean_f_d > top.mean_f_dbar,
             "top decile mean f_d does not exceed mean f_dbar");
  }
  const std::size_t n = ft.ot.entries.size();
  bool inverted_tail = false;
  for (std::size_t i = n * 9 / 10; i < n; ++i) {
    if (ft.ot.entries[i].f_dbar > ft.ot.entries[i].f_d) inverted_tail = true;
  }
  c.expect(inverted_tail, "bottom decile has no candidate with f_dbar > f_d");
  report(5, "OT ranking polarization at decile granularity", c.ok, c.detail);
}

void criterion_6_ngd() {
  Check c;
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    long long fx = 1 + static_cast<long long>(rng() % 2000);
    long long fy = 1 + static_cast<long long>(rng() % 2000);
    long long fxy = static_cast<long long>(rng() % (std::min(fx, fy) + 1));
    long long N = std::max(fx, fy) + 1 + static_cast<long long>(rng() % 1000000);
    HitCountSnapshot snap;
    snap.N = N;
    snap.unigram = {{"x", fx}, {"y", fy}};
    snap.pair = {{{"x", "y"}, fxy}};
    SnapshotProvider p(std::move(snap));
    double dxy = ngd_distance("x", "y", p);
    double dyx = ngd_distance("y", "x", p);
    c.expect(dxy == dyx, "ngd asymmetric");
    c.expect(dxy >= 0.0 && dxy <= 1.0, "ngd out of range");
    c.expect(ngd_distance("x", "x", p) == 0.0, "ngd(x,x) != 0");
  }

  HitCountSnapshot worked;
  worked.N = 1000;
  worked.unigram = {{"x", 100}, {"y", 100}};
  worked.pair = {{{"x", "y"}, 50}};
  SnapshotProvider p(std::move(worked));
  c.expect(std::abs(ngd_distance("x", "y", p) - std::log(2.0) / std::log(10.0)) <
               1e-6,
           "worked NGD value off");

  HitCountSnapshot disjoint;
  disjoint.N = 1000;
  disjoint.unigram = {{"x", 100}, {"y", 100}};
  SnapshotProvider pd(std::move(disjoint));
  c.expect(ngd_distance("x", "y", pd) == 1.0, "disjoint pair not at distance 1");
  report(6, "NGD symmetry, identity, worked value, disjoint rule", c.ok, c.detail);
}

void criterion_7_tta() {
  Check c;
  // 200-term matrix with two planted groups of different sizes
  const std::size_t n1 = 60, n2 = 140;
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < n1 + n2; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "t%03zu", i);
    terms.push_back(buf);
  }
  const std::size_t n = terms.size();

  std::mt19937_64 rng(707);
  DistanceMatrix m;
  m.terms = terms;
  m.d.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool same = (i < n1) == (j < n1);
      double d = same ? 0.15 + 0.15 * (rng() % 1000) / 1000.0
                      : 0.78 + 0.12 * (rng() % 1000) / 1000.0;
      m.d[i][j] = m.d[j][i] = d;
    }
  }

  TTAParams params;
  params.seed = 11;
  std::vector<RefineStep> trace;
  ClusterNode a = tta_cluster(m, params, &trace);
  ClusterNode b = tta_cluster(m, params);
  label_concepts(a, m);
  label_concepts(b, m);
  c.expect(cluster_tree_json(a) == cluster_tree_json(b),
           "same seed produced different trees");

  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (trace[i].node_id == trace[i - 1].node_id) {
      c.expect(trace[i].objective <= trace[i - 1].objective + 1e-12,
               "refinement objective increased within a pass");
    }
  }

  std::set<std::string> g1(terms.begin(), terms.begin() + n1);
  std::set<std::string> g2(terms.begin() + n1, terms.end());
  c.expect(a.outliers.empty(), "unexpected outliers in the two-group matrix");
  c.expect(a.children.size() == 2, "root does not split into two children");
  if (a.children.size() == 2) {
    std::set<std::string> c0(a.children[0].members.begin(),
                             a.children[0].members.end());
    std::set<std::string> c1(a.children[1].members.begin(),
                             a.children[1].members.end());
    bool forward = c0 == g1 && c1 == g2;
    bool backward = c0 == g2 && c1 == g1;
    c.expect(forward || backward, "planted groups not recovered exactly");
  }

  // separate matrix with one planted outlier: a tight block plus one far term
  std::vector<std::string> oterms;
  for (int i = 0; i < 8; ++i) oterms.push_back("m" + std::to_string(i));
  oterms.push_back("zz_far");
  DistanceMatrix om;
  om.terms = oterms;
  om.d.assign(9, std::vector<double>(9, 0.0));
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = i + 1; j < 9; ++j) {
      double d = (i == 8 || j == 8) ? 0.90 + 0.08 * (rng() % 1000) / 1000.0
                                    : 0.20 + 0.10 * (rng() % 1000) / 1000.0;
      om.d[i][j] = om.d[j][i] = d;
    }
  }
  ClusterNode oroot = tta_cluster(om, params);
  c.expect(oroot.outliers == std::vector<std::string>{"zz_far"},
           "planted outlier not isolated");
  report(7, "TTA determinism, planted recovery, outliers, monotone refinement",
         c.ok, c.detail);
}

void criterion_8_golden_run(const PipelineConfig& base) {
  Check c;
  IngestResult domain = ingest_directory(base.domain_dir, CorpusTag::domain);
  IngestResult contrastive =
      ingest_directory(base.contrastive_dir, CorpusTag::contrastive);
  c.expect(domain.documents.size() >= 50,
           "fixture has fewer than 50 domain documents");
  c.expect(contrastive.documents.size() >= 200,
           "fixture has fewer than 200 contrastive documents");
  BenchmarkConceptSet benchmark = load_benchmark(*base.benchmark_path);
  c.expect(benchmark.concepts.size() >= 8, "fixture benchmark has fewer than 8 concepts");

  fs::path out1 = fs::temp_directory_path() / "ontoforge_acceptance_run1";
  fs::path out2 = fs::temp_directory_path() / "ontoforge_acceptance_run2";
  fs::remove_all(out1);
  fs::remove_all(out2);

  PipelineConfig c1 = base;
  c1.out_dir = out1.string();
  run_all(c1);
  PipelineConfig c2 = base;
  c2.out_dir = out2.string();
  run_all(c2);

  for (const char* artifact : {"ontology.json", "eval_report.json"}) {
    std::string d1 = file_digest((out1 / artifact).string());
    std::string d2 = file_digest((out2 / artifact).string());
    c.expect(d1 == d2, std::string(artifact) + " differs across identical runs");
  }

  OntologyGraph graph = import_json(read_text_file((out1 / "ontology.json").string()));
  OverlapResult overlap =
      lexical_overlap(discovered_concepts(graph, false), benchmark);
  char detail[64];
  std::snprintf(detail, sizeof(detail), "LO=%.4f", overlap.lo);
  c.expect(overlap.lo >= 0.5, std::string("LO below 0.5: ") + detail);

  fs::remove_all(out1);
  fs::remove_all(out2);
  report(8, std::string("golden end-to-end run (" + std::string(detail) + ")").c_str(),
         c.ok, c.detail);
}

void criterion_9_metric_identities() {
  Check c;
  std::mt19937_64 rng(909);
  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    int m = 1 + static_cast<int>(rng() % 24);
    auto set = synthetic_benchmark(m);
    std::vector<DiscoveredConcept> discovered;
    int d = static_cast<int>(rng() % 30);
    for (int i = 0; i < d; ++i) {
      discovered.push_back(
          {"d" + std::to_string(i), "concept " + std::to_string(rng() % 30), {}});
    }
    auto overlap = lexical_overlap(discovered, set);
    double ol = ontological_loss(overlap, set);
    c.expect(std::abs(overlap.lo + ol - 1.0) < 1e-12, "LO + OL != 1");
  }

  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    ContingencyTable t;
    t.TP = 1 + static_cast<long long>(rng() % 200);
    t.FP = static_cast<long long>(rng() % 200);
    t.FN = 1 + static_cast<long long>(rng() % 200);
    t.TN = static_cast<long long>(rng() % 200);
    double p = precision(t);
    double r = recall(t);
    double f = f1(t);
    double a = accuracy(t);
    c.expect(p >= 0 && p <= 1 && r >= 0 && r <= 1 && a >= 0 && a <= 1,
             "metric out of [0,1]");
    c.expect(f <= std::max(p, r) + 1e-12, "F1 above max(P,R)");
    validate_candidate_identity(t, t.TP + t.FP + *t.FN + *t.TN);
    bool threw = false;
    try {
      validate_candidate_identity(t, t.TP + t.FP + *t.FN + *t.TN + 1);
    } catch (const Error&) {
      threw = true;
    }
    c.expect(threw, "candidate identity accepted a wrong |TC|");
  }
  report(9, "metric identities (LO+OL=1, metric bounds, |TC| identity)", c.ok,
         c.detail);
}

void criterion_10_cleaning(const PipelineConfig& base) {
  Check c;
  std::mt19937_64 rng(1010);
  auto oracle = [](const std::string& a, const std::string& b) {
    std::vector<std::vector<int>> memo(a.size() + 1,
                                       std::vector<int>(b.size() + 1, -1));
    std::function<int(std::size_t, std::size_t)> go =
        [&](std::size_t i, std::size_t j) -> int {
      if (i == a.size()) return static_cast<int>(b.size() - j);
      if (j == b.size()) return static_cast<int>(a.size() - i);
      int& m = memo[i][j];
      if (m >= 0) return m;
      int best = go(i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
      best = std::min(best, go(i + 1, j) + 1);
      best = std::min(best, go(i, j + 1) + 1);
      return m = best;
    };
    return go(0, 0);
  };
  const std::string alphabet = "abcde";
  for (int trial = 0; trial < 10000 && c.ok; ++trial) {
    std::string a, b;
    int la = static_cast<int>(rng() % 13), lb = static_cast<int>(rng() % 13);
    for (int i = 0; i < la; ++i) a += alphabet[rng() % alphabet.size()];
    for (int i = 0; i < lb; ++i) b += alphabet[rng() % alphabet.size()];
    c.expect(edit_distance(a, b) == oracle(a, b), "edit_distance != DP oracle");
  }

  // golden fixture case
  IngestResult domain = ingest_directory(base.domain_dir, CorpusTag::domain);
  IngestResult contrastive =
      ingest_directory(base.contrastive_dir, CorpusTag::contrastive);
  FrequencyIndex domain_index = build_frequency_index(domain.documents, base.window);
  FrequencyIndex contrastive_index =
      build_frequency_index(contrastive.documents, base.window);
  auto lexicon = build_lexicon(domain_index, contrastive_index);
  AbbreviationDictionary abbrevs;
  if (base.abbrev_path) abbrevs = load_abbreviation_dictionary(*base.abbrev_path);
  CaseCounts cases = build_case_counts(domain.documents);

  const Document* noisy = nullptr;
  for (const Document& d : domain.documents) {
    if (d.id == "noisy_report") noisy = &d;
  }
  c.expect(noisy != nullptr, "fixture doc noisy_report missing");
  if (noisy) {
    CleaningConfig cc;
    cc.enabled = true;
    auto [cleaned, rep] =
        clean_document(*noisy, lexicon, domain_index, abbrevs, cases, cc);
    c.expect(cleaned.text.find("teh team") == std::string::npos,
             "'teh team' survived cleaning");
    c.expect(cleaned.text.find("the team") != std::string::npos,
             "'the team' missing after cleaning");
    bool teh_fixed = false;
    for (const auto& r : rep.replacements) {
      if (r.original == "teh" && r.chosen == "the") teh_fixed = true;
    }
    c.expect(teh_fixed, "no teh->the replacement recorded");

    auto [again, rep2] =
        clean_document(cleaned, lexicon, domain_index, abbrevs, cases, cc);
    c.expect(rep2.replacements.empty(), "cleaning is not idempotent on the fixture");
    c.expect(again.text == cleaned.text, "second cleaning changed the text");
  }
  report(10, "cleaning: DP oracle equality, golden fix, idempotence", c.ok, c.detail);
}

}  // namespace

int main() {
  std::printf("ontoforge acceptance suite\n");
  const PipelineConfig config = fixture_config(
      (fs::temp_directory_path() / "ontoforge_acceptance_base").string());

  criterion_1_overlap_arithmetic();
  criterion_2_worked_sentence(config);
  criterion_3_unithood(config);
  FixtureTerms ft = compute_fixture_terms(config);
  criterion_4_termhood_properties(ft);
  criterion_5_polarization(ft);
  criterion_6_ngd();
  criterion_7_tta();
  criterion_8_golden_run(config);
  criterion_9_metric_identities();
  criterion_10_cleaning(config);

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
