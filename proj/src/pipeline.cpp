#include "ontoforge/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ontoforge/ontology.hpp"

namespace fs = std::filesystem;

namespace ontoforge {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

fs::path out_path(const PipelineConfig& config, const std::string& rel) {
  return fs::path(config.out_dir) / rel;
}

void require_artifact(const PipelineConfig& config, const std::string& rel,
                      const std::string& producer) {
  if (!fs::exists(out_path(config, rel))) {
    throw Error(ErrorKind::dependency,
                "missing " + rel + " under " + config.out_dir + "; run `" +
                    producer + "` first");
  }
}

ArtifactDigest write_artifact(const PipelineConfig& config,
                              const std::string& rel,
                              const std::string& content) {
  fs::path p = out_path(config, rel);
  write_text_file(p.string(), content);
  return {rel, file_digest(p.string())};
}

struct Corpora {
  std::vector<Document> domain;
  std::vector<Document> contrastive;
  int domain_skipped = 0;
  int contrastive_skipped = 0;
};

// raw corpora from the configured directories
Corpora load_corpora(const PipelineConfig& config) {
  Corpora c;
  IngestResult d = ingest_directory(config.domain_dir, CorpusTag::domain);
  IngestResult k = ingest_directory(config.contrastive_dir, CorpusTag::contrastive);
  c.domain = std::move(d.documents);
  c.contrastive = std::move(k.documents);
  c.domain_skipped = d.skipped;
  c.contrastive_skipped = k.skipped;
  return c;
}

// substitutes cleaned text for plain domain documents when cleaning ran
void apply_cleaned_domain(const PipelineConfig& config,
                          std::vector<Document>& domain) {
  if (!config.cleaning.enabled) return;
  fs::path dir = out_path(config, "cleaned_domain");
  if (!fs::exists(dir)) {
    throw Error(ErrorKind::dependency,
                "missing cleaned_domain under " + config.out_dir +
                    "; run `clean` first");
  }
  for (Document& doc : domain) {
    if (doc.source_kind != SourceKind::plain) continue;
    fs::path p = dir / (doc.id + ".txt");
    if (!fs::exists(p)) {
      throw Error(ErrorKind::dependency,
                  "missing cleaned document " + p.string() + "; run `clean` first");
    }
    doc.text = read_text_file(p.string());
  }
}

std::vector<TokenizedDoc> tokenize_all(const std::vector<Document>& docs) {
  std::vector<TokenizedDoc> out;
  out.reserve(docs.size());
  for (const Document& d : docs) out.push_back(tokenized_doc(d));
  return out;
}

std::string measure_file(Measure m) {
  return std::string("terms_") + to_string(m) + ".tsv";
}

// uniform sample of k items, deterministic for a given seed; original
// order is preserved
template <typename T>
std::vector<T> sample_uniform(std::vector<T> items, long long k,
                              unsigned long long seed) {
  if (k >= static_cast<long long>(items.size())) return items;
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> idx(items.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng() % (idx.size() - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(static_cast<std::size_t>(k));
  std::sort(idx.begin(), idx.end());
  std::vector<T> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(std::move(items[i]));
  return out;
}

struct TermArtifacts {
  std::vector<TermCandidate> candidates;
  std::map<std::string, TermStats> stats;
  WordStats words;
  CorpusTotals totals;
  NestingMap nesting;
  ContextStats ctx;
};

TermArtifacts compute_term_artifacts(const PipelineConfig& config,
                                     const std::vector<FrameRecord>& frames,
                                     const std::vector<TokenizedDoc>& domain,
                                     const std::vector<TokenizedDoc>& contrastive) {
  TermArtifacts art;
  art.candidates = collect_candidates(frames);
  for (const TermCandidate& c : art.candidates) {
    art.stats[c.normalized] = compute_stats(c, domain, contrastive, frames);
  }
  FrequencyIndex domain_index = build_frequency_index(domain, config.window);
  FrequencyIndex contrastive_index =
      build_frequency_index(contrastive, config.window);
  art.words = build_word_stats(domain_index, contrastive_index);
  for (const auto& [_, s] : art.stats) {
    art.totals.F_d += s.f_d;
    art.totals.F_dbar += s.f_dbar;
  }
  // smoothing keeps OT defined even when no candidate occurs in a corpus
  if (art.totals.F_d == 0) art.totals.F_d = 1;
  if (art.totals.F_dbar == 0) art.totals.F_dbar = 1;
  art.nesting = build_nesting(art.candidates, art.stats);
  art.ctx = build_context_stats(art.candidates, art.stats);
  return art;
}

}  // namespace

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ingest, "cannot read for digest: " + path);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buf[4096];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 0x100000001b3ULL;
    }
    if (!in) break;
  }
  char hex[24];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(hash));
  return hex;
}

void write_text_file(const std::string& path, const std::string& content) {
  fs::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::ingest, "cannot write: " + path);
  out << content;
  if (!out) throw Error(ErrorKind::ingest, "write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ingest, "cannot read: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PipelineConfig parse_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::validation, std::string("config: ") + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorKind::validation, "config: top level must be an object");
  }

  static const std::set<std::string> known = {
      "domain_dir", "contrastive_dir", "abbrev_path", "snapshot_path",
      "benchmark_path", "window", "sample_frames", "top_n", "measure",
      "theta_ou", "termhood", "cluster", "cleaning", "seed", "out_dir"};
  std::vector<std::string> unknown;
  for (auto& [key, _] : j.items()) {
    if (!known.count(key)) unknown.push_back(key);
  }
  if (!unknown.empty()) {
    std::string msg = "config: unknown fields:";
    for (const std::string& k : unknown) msg += " " + k;
    throw Error(ErrorKind::validation, msg);
  }

  PipelineConfig config;
  try {
    config.domain_dir = j.at("domain_dir").get<std::string>();
    config.contrastive_dir = j.at("contrastive_dir").get<std::string>();
    if (j.contains("abbrev_path"))
      config.abbrev_path = j["abbrev_path"].get<std::string>();
    if (j.contains("snapshot_path"))
      config.snapshot_path = j["snapshot_path"].get<std::string>();
    if (j.contains("benchmark_path"))
      config.benchmark_path = j["benchmark_path"].get<std::string>();
    if (j.contains("window")) config.window = j["window"].get<int>();
    if (j.contains("sample_frames"))
      config.sample_frames = j["sample_frames"].get<long long>();
    if (j.contains("top_n")) config.top_n = j["top_n"].get<int>();
    if (j.contains("measure"))
      config.measure = measure_from_string(j["measure"].get<std::string>());
    if (j.contains("theta_ou")) config.theta_ou = j["theta_ou"].get<double>();
    if (j.contains("termhood")) {
      const auto& t = j["termhood"];
      if (t.contains("alpha")) config.termhood.alpha = t["alpha"].get<double>();
      if (t.contains("beta")) config.termhood.beta = t["beta"].get<double>();
    }
    if (j.contains("cluster")) {
      const auto& c = j["cluster"];
      if (c.contains("max_leaf")) config.cluster.max_leaf = c["max_leaf"].get<int>();
      if (c.contains("theta_split"))
        config.cluster.theta_split = c["theta_split"].get<double>();
      if (c.contains("theta_out"))
        config.cluster.theta_out = c["theta_out"].get<double>();
      if (c.contains("passes")) config.cluster.passes = c["passes"].get<int>();
    }
    if (j.contains("cleaning")) {
      const auto& c = j["cleaning"];
      if (c.contains("enabled")) config.cleaning.enabled = c["enabled"].get<bool>();
      if (c.contains("theta_clean"))
        config.cleaning.theta_clean = c["theta_clean"].get<double>();
    }
    if (j.contains("seed")) config.seed = j["seed"].get<unsigned long long>();
    if (j.contains("out_dir")) config.out_dir = j["out_dir"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::validation, std::string("config: ") + e.what());
  }
  config.cluster.seed = config.seed;
  return config;
}

PipelineConfig load_config(const std::string& path) {
  PipelineConfig config = parse_config(read_text_file(path));
  // input paths resolve against the config file; out_dir stays cwd-relative
  fs::path base = fs::path(path).parent_path();
  auto resolve = [&](std::string& p) {
    if (!p.empty() && fs::path(p).is_relative()) p = (base / p).string();
  };
  resolve(config.domain_dir);
  resolve(config.contrastive_dir);
  if (config.abbrev_path) resolve(*config.abbrev_path);
  if (config.snapshot_path) resolve(*config.snapshot_path);
  if (config.benchmark_path) resolve(*config.benchmark_path);
  if (const char* env = std::getenv("ONTOFORGE_OUT"); env && *env) {
    config.out_dir = env;
  }
  return config;
}

void validate_config(const PipelineConfig& config) {
  std::vector<std::string> bad;
  auto check_dir = [&](const std::string& p, const char* field) {
    if (p.empty() || !fs::is_directory(p)) bad.push_back(field);
  };
  auto check_file = [&](const std::optional<std::string>& p, const char* field) {
    if (p && !fs::is_regular_file(*p)) bad.push_back(field);
  };
  check_dir(config.domain_dir, "domain_dir");
  check_dir(config.contrastive_dir, "contrastive_dir");
  check_file(config.abbrev_path, "abbrev_path");
  check_file(config.snapshot_path, "snapshot_path");
  check_file(config.benchmark_path, "benchmark_path");
  if (config.window < 1) bad.push_back("window");
  if (config.sample_frames && *config.sample_frames < 1) bad.push_back("sample_frames");
  if (config.top_n < 1) bad.push_back("top_n");
  if (config.cluster.max_leaf < 1) bad.push_back("cluster.max_leaf");
  if (!(config.cluster.theta_split > 0.0 &&
        config.cluster.theta_split < config.cluster.theta_out &&
        config.cluster.theta_out <= 1.0)) {
    bad.push_back("cluster.theta_split/theta_out");
  }
  if (config.cluster.passes < 0) bad.push_back("cluster.passes");
  if (config.cleaning.theta_clean < 0.0 || config.cleaning.theta_clean > 1.0) {
    bad.push_back("cleaning.theta_clean");
  }
  if (config.out_dir.empty()) bad.push_back("out_dir");
  if (!bad.empty()) {
    std::string msg = "config: invalid fields:";
    for (const std::string& f : bad) msg += " " + f;
    throw Error(ErrorKind::validation, msg);
  }
}

void record_phase(const PipelineConfig& config, const PhaseOutcome& outcome) {
  fs::path p = out_path(config, "manifest.json");
  nlohmann::ordered_json manifest;
  if (fs::exists(p)) {
    try {
      manifest = nlohmann::ordered_json::parse(read_text_file(p.string()));
    } catch (const std::exception&) {
      manifest = nlohmann::ordered_json();
    }
  }
  manifest["tool"] = "ontoforge";
  manifest["version"] = kVersion;
  nlohmann::ordered_json cfg;
  cfg["domain_dir"] = config.domain_dir;
  cfg["contrastive_dir"] = config.contrastive_dir;
  cfg["window"] = config.window;
  cfg["top_n"] = config.top_n;
  cfg["measure"] = to_string(config.measure);
  cfg["seed"] = config.seed;
  cfg["out_dir"] = config.out_dir;
  if (config.sample_frames) cfg["sample_frames"] = *config.sample_frames;
  if (config.abbrev_path) cfg["abbrev_path"] = *config.abbrev_path;
  if (config.snapshot_path) cfg["snapshot_path"] = *config.snapshot_path;
  if (config.benchmark_path) cfg["benchmark_path"] = *config.benchmark_path;
  cfg["cleaning_enabled"] = config.cleaning.enabled;
  manifest["config"] = cfg;

  if (!manifest.contains("phases") || !manifest["phases"].is_array()) {
    manifest["phases"] = nlohmann::ordered_json::array();
  }
  nlohmann::ordered_json entry;
  entry["name"] = outcome.name;
  entry["status"] = outcome.status;
  entry["millis"] = outcome.millis;
  if (!outcome.note.empty()) entry["note"] = outcome.note;
  entry["outputs"] = nlohmann::ordered_json::array();
  for (const ArtifactDigest& a : outcome.outputs) {
    nlohmann::ordered_json out;
    out["path"] = a.path;
    out["digest"] = a.digest;
    entry["outputs"].push_back(std::move(out));
  }
  bool replaced = false;
  for (auto& existing : manifest["phases"]) {
    if (existing.contains("name") && existing["name"] == outcome.name) {
      existing = entry;
      replaced = true;
      break;
    }
  }
  if (!replaced) manifest["phases"].push_back(std::move(entry));
  write_text_file(p.string(), manifest.dump(2) + "\n");
}

PhaseOutcome phase_ingest(const PipelineConfig& config) {
  auto start = Clock::now();
  Corpora corpora = load_corpora(config);

  nlohmann::ordered_json j;
  auto doc_list = [](const std::vector<Document>& docs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Document& d : docs) {
      nlohmann::ordered_json jd;
      jd["id"] = d.id;
      jd["kind"] = d.source_kind == SourceKind::plain ? "plain" : "conllu";
      arr.push_back(std::move(jd));
    }
    return arr;
  };
  j["domain"] = doc_list(corpora.domain);
  j["contrastive"] = doc_list(corpora.contrastive);
  j["skipped"] = {{"domain", corpora.domain_skipped},
                  {"contrastive", corpora.contrastive_skipped}};

  PhaseOutcome outcome{"ingest", "ok", {}, 0, ""};
  outcome.outputs.push_back(write_artifact(config, "ingest.json", j.dump(2) + "\n"));
  outcome.millis = elapsed_ms(start);
  record_phase(config, outcome);
  return outcome;
}

PhaseOutcome phase_clean(const PipelineConfig& config) {
  auto start = Clock::now();
  PhaseOutcome outcome{"clean", "ok", {}, 0, ""};
  if (!config.cleaning.enabled) {
    outcome.status = "skipped";
    outcome.note = "cleaning disabled";
    record_phase(config, outcome);
    return outcome;
  }

  Corpora corpora = load_corpora(config);
  FrequencyIndex domain_index = build_frequency_index(corpora.domain, config.window);
  FrequencyIndex contrastive_index =
      build_frequency_index(corpora.contrastive, config.window);
  std::set<std::string> lexicon = build_lexicon(domain_index, contrastive_index,
                                                config.cleaning.min_lexicon_count);
  AbbreviationDictionary abbrevs;
  if (config.abbrev_path) {
    abbrevs = load_abbreviation_dictionary(*config.abbrev_path);
  }
  CaseCounts cases = build_case_counts(corpora.domain);

  CleaningReport merged;
  merged.class_counts = {{"spelling", 0}, {"abbreviation", 0}, {"casing", 0}};
  for (const Document& doc : corpora.domain) {
    if (doc.source_kind != SourceKind::plain) continue;
    auto [cleaned, report] = clean_document(doc, lexicon, domain_index, abbrevs,
                                            cases, config.cleaning);
    outcome.outputs.push_back(write_artifact(
        config, "cleaned_domain/" + doc.id + ".txt", cleaned.text));
    for (auto& r : report.replacements) merged.replacements.push_back(std::move(r));
    for (auto& u : report.unresolved) merged.unresolved.push_back(std::move(u));
    for (const auto& [k, v] : report.class_counts) merged.class_counts[k] += v;
  }
  outcome.outputs.push_back(write_artifact(config, "cleaning_report.jsonl",
                                           cleaning_report_jsonl(merged)));
  outcome.note = std::to_string(merged.replacements.size()) + " replacements";
  outcome.millis = elapsed_ms(start);
  record_phase(config, outcome);
  return outcome;
}

PhaseOutcome phase_frames(const PipelineConfig& config) {
  auto start = Clock::now();
  Corpora corpora = load_corpora(config);
  apply_cleaned_domain(config, corpora.domain);
  FrequencyIndex domain_index = build_frequency_index(corpora.domain, config.window);

  ChunkParams chunk_params{config.theta_ou};
  std::vector<TernaryFrame> frames;
  for (const Document& doc : corpora.domain) {
    if (doc.source_kind != SourceKind::conllu) continue;
    std::vector<ParsedSentence> sentences = load_conllu(doc);
    for (std::size_t s = 0; s < sentences.size(); ++s) {
      ChunkResult chunks = chunk_noun_phrases(sentences[s], domain_index,
                                              chunk_params);
      for (TernaryFrame& f : extract_frames(sentences[s], chunks)) {
        f.doc_id = doc.id;
        f.sentence = static_cast<int>(s + 1);
        frames.push_back(std::move(f));
      }
    }
  }
  std::size_t extracted = frames.size();
  if (config.sample_frames) {
    frames = sample_uniform(std::move(frames), *config.sample_frames, config.seed);
  }

  PhaseOutcome outcome{"frames", "ok", {}, 0, ""};
  outcome.outputs.push_back(
      write_artifact(config, "frames.jsonl", frames_to_jsonl(frames)));
  outcome.note = std::to_string(extracted) + " extracted, " +
                 std::to_string(frames.size()) + " kept";
  outcome.millis = elapsed_ms(start);
  record_phase(config, outcome);
  return outcome;
}

PhaseOutcome phase_terms(const PipelineConfig& config) {
  auto start = Clock::now();
  require_artifact(config, "frames.jsonl", "frames");
  std::vector<FrameRecord> frames =
      parse_frames_jsonl(read_text_file(out_path(config, "frames.jsonl").string()));

  Corpora corpora = load_corpora(config);
  apply_cleaned_domain(config, corpora.domain);
  std::vector<TokenizedDoc> domain = tokenize_all(corpora.domain);
  std::vector<TokenizedDoc> contrastive = tokenize_all(corpora.contrastive);
  TermArtifacts art = compute_term_artifacts(config, frames, domain, contrastive);

  ScoringInputs inputs;
  inputs.stats = &art.stats;
  inputs.words = &art.words;
  inputs.totals = art.totals;
  inputs.nesting = &art.nesting;
  inputs.ctx = &art.ctx;
  inputs.params = config.termhood;

  PhaseOutcome outcome{"terms", "ok", {}, 0, ""};
  for (Measure m : {Measure::TH, Measure::OT, Measure::CW, Measure::NCV}) {
    RankedTermList list = rank_terms(art.candidates, m, inputs);
    outcome.outputs.push_back(
        write_artifact(config, measure_file(m), ranked_list_tsv(list)));
  }
  outcome.note = std::to_string(art.candidates.size()) + " candidates";
  outcome.millis = elapsed_ms(start);
  record_phase(config, outcome);
  return outcome;
}

PhaseOutcome phase_cluster(const PipelineConfig& config) {
  auto start = Clock::now();
  std::string terms_file = measure_file(config.measure);
  require_artifact(config, terms_file, "terms");
  RankedTermList list = parse_ranked_list_tsv(
      read_text_file(out_path(config, terms_file).string()), config.measure);
  if (list.entries.empty()) {
    throw Error(ErrorKind::empty_input, "cluster: ranked term list is empty");
  }

  std::vector<std::string> terms;
  for (const TermCandidate& c : select_top_n(list, config.top_n)) {
    terms.push_back(c.normalized);
  }
  // matrix rows in lexicographic order; tie-breaking in the clustering
  // procedure depends on it
  std::sort(terms.begin(), terms.end());

  // reuse the cached matrix when it covers exactly the same term set
  DistanceMatrix matrix;
  bool cache_hit = false;
  fs::path cache = out_path(config, "distance_matrix.tsv");
  if (fs::exists(cache)) {
    try {
      DistanceMatrix cached =
          parse_distance_matrix_tsv(read_text_file(cache.string()));
      if (cached.terms == terms) {
        matrix = std::move(cached);
        cache_hit = true;
      }
    } catch (const Error&) {
      // unreadable cache: rebuild below
    }
  }
  if (!cache_hit) {
    std::unique_ptr<HitCountProvider> provider;
    if (config.snapshot_path) {
      provider = std::make_unique<SnapshotProvider>(
          load_hit_count_snapshot(*config.snapshot_path));
    } else {
      Corpora corpora = load_corpora(config);
      apply_cleaned_domain(config, corpora.domain);
      provider = std::make_unique<DocFrequencyProvider>(
          tokenize_all(corpora.domain), terms);
    }
    matrix = build_distance_matrix(terms, *provider);
  }

  TTAParams params = config.cluster;
  params.seed = config.seed;
  ClusterNode root = tta_cluster(matrix, params);
  label_concepts(root, matrix);

  PhaseOutcome outcome{"cluster", "ok", {}, 0, ""};
  if (cache_hit) {
    outcome.outputs.push_back({"distance_matrix.tsv",
                               file_digest(cache.string())});
    outcome.note = "distance matrix reused from cache; ";
  } else {
    outcome.outputs.push_back(
        write_artifact(config, "distance_matrix.tsv", distance_matrix_tsv(matrix)));
  }
  outcome.outputs.push_back(
      write_artifact(config, "cluster_tree.json", cluster_tree_json(root)));
  outcome.note += std::to_string(terms.size()) + " terms clustered";
  outcome.millis = elapsed_ms(start);
  record_phase(config, outcome);
  return outcome;
}

PhaseOutcome phase_ontology(const PipelineConfig& config) {
  auto start = Clock::now();
  require_artifact(config, "cluster_tree.json", "cluster");
  ClusterNode root = parse_cluster_tree_json(
      read_text_file(out_path(config, "cluster_tree.json").string()));
  OntologyGraph graph = assemble_ontology(root);

  PhaseOutcome outcome{"ontology", "ok", {}, 0, ""};
  outcome.outputs.push_back(
      write_artifact(config, "ontology.json", export_json(graph)));
  outcome.outputs.push_back(write_artifact(config, "ontology.dot", export_dot(graph)));
  outcome.outputs.push_back(
      write_artifact(config, "ontology.ttl", export_turtle(graph)));
  outcome.note = std::to_string(graph.concepts.size()) + " concepts";
  outcome.millis = elapsed_ms(start);
  record_phase(config, outcome);
  return outcome;
}

PhaseOutcome phase_eval(const PipelineConfig& config) {
  auto start = Clock::now();
  PhaseOutcome outcome{"eval", "ok", {}, 0, ""};
  if (!config.benchmark_path) {
    outcome.status = "skipped";
    outcome.note = "no benchmark_path configured";
    record_phase(config, outcome);
    return outcome;
  }
  require_artifact(config, "ontology.json", "ontology");
  std::string terms_file = measure_file(config.measure);
  require_artifact(config, terms_file, "terms");

  OntologyGraph graph =
      import_json(read_text_file(out_path(config, "ontology.json").string()));
  BenchmarkConceptSet benchmark = load_benchmark(*config.benchmark_path);
  // the root concept is the whole vocabulary, not a discovered concept
  OverlapResult overlap =
      lexical_overlap(discovered_concepts(graph, false), benchmark);

  RankedTermList list = parse_ranked_list_tsv(
      read_text_file(out_path(config, terms_file).string()), config.measure);
  FrequencyDistributionReport freq = frequency_distribution_report(list);

  EvalReport report;
  report.measure = config.measure;
  report.lo = overlap.lo;
  report.ol = ontological_loss(overlap, benchmark);
  report.matched = overlap.matched;
  report.missed = overlap.missed;

  outcome.outputs.push_back(
      write_artifact(config, "eval_report.json", eval_report_json(report)));
  outcome.outputs.push_back(write_artifact(config, "freq_distribution.csv",
                                           frequency_distribution_csv(freq)));
  char note[64];
  std::snprintf(note, sizeof(note), "LO=%.4f OL=%.4f", report.lo, report.ol);
  outcome.note = note;
  outcome.millis = elapsed_ms(start);
  record_phase(config, outcome);
  return outcome;
}

std::vector<PhaseOutcome> run_all(const PipelineConfig& config) {
  std::vector<PhaseOutcome> outcomes;
  outcomes.push_back(phase_ingest(config));
  outcomes.push_back(phase_clean(config));
  outcomes.push_back(phase_frames(config));
  outcomes.push_back(phase_terms(config));
  outcomes.push_back(phase_cluster(config));
  outcomes.push_back(phase_ontology(config));
  outcomes.push_back(phase_eval(config));
  return outcomes;
}

}  // namespace ontoforge
