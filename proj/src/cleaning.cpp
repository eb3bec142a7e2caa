#include "ontoforge/cleaning.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ontoforge {

namespace {

bool has_letter(const std::string& s) {
  for (unsigned char c : s) {
    if (std::isalpha(c) || c >= 0x80) return true;
  }
  return false;
}

std::string head_word(const std::string& phrase) {
  auto pos = phrase.find_last_of(' ');
  return pos == std::string::npos ? phrase : phrase.substr(pos + 1);
}

const char* class_name(NoiseClass c) {
  switch (c) {
    case NoiseClass::spelling: return "spelling";
    case NoiseClass::abbreviation: return "abbreviation";
    case NoiseClass::casing: return "casing";
  }
  return "?";
}

}  // namespace

int edit_distance(const std::string& a, const std::string& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<int> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

AbbreviationDictionary parse_abbreviation_dictionary(const std::string& text) {
  AbbreviationDictionary dict;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      throw Error(ErrorKind::parse, "abbrev dictionary: expected 3 columns at line " +
                                        std::to_string(lineno));
    }
    std::string abbrev = to_lower(line.substr(0, t1));
    std::string expansion = line.substr(t1 + 1, t2 - t1 - 1);
    double weight;
    try {
      weight = std::stod(line.substr(t2 + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse, "abbrev dictionary: bad weight at line " +
                                        std::to_string(lineno));
    }
    if (weight < 0.0 || weight > 1.0) {
      throw Error(ErrorKind::validation, "abbrev dictionary: weight outside [0,1] at line " +
                                             std::to_string(lineno));
    }
    dict.entries[abbrev].push_back({expansion, weight});
  }
  return dict;
}

AbbreviationDictionary load_abbreviation_dictionary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ingest, "cannot read abbrev dictionary: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_abbreviation_dictionary(ss.str());
}

std::string CaseCounts::majority(const std::string& lower) const {
  auto it = by_lower.find(lower);
  if (it == by_lower.end()) return {};
  std::string best;
  long long best_count = -1;
  for (const auto& [surface, count] : it->second) {
    if (count > best_count) {
      best = surface;
      best_count = count;
    }
  }
  return best;
}

double CaseCounts::share(const std::string& surface) const {
  auto it = by_lower.find(to_lower(surface));
  if (it == by_lower.end()) return 0.0;
  long long total = 0, own = 0;
  for (const auto& [s, count] : it->second) {
    total += count;
    if (s == surface) own = count;
  }
  return total == 0 ? 0.0 : static_cast<double>(own) / static_cast<double>(total);
}

CaseCounts build_case_counts(const std::vector<Document>& docs) {
  CaseCounts counts;
  for (const Document& doc : docs) {
    if (doc.source_kind != SourceKind::plain) continue;
    for (const Sentence& sent : tokenize(doc.text)) {
      // skip position 0: sentence-initial capitalization is not case evidence
      for (std::size_t i = 1; i < sent.size(); ++i) {
        counts.by_lower[to_lower(sent[i].text)][sent[i].text]++;
      }
    }
  }
  return counts;
}

std::set<std::string> build_lexicon(const FrequencyIndex& domain,
                                    const FrequencyIndex& contrastive,
                                    long long min_count) {
  std::set<std::string> lexicon;
  for (const auto& [w, c] : domain.unigram) {
    if (c >= min_count) lexicon.insert(w);
  }
  for (const auto& [w, c] : contrastive.unigram) {
    if (c >= min_count) lexicon.insert(w);
  }
  return lexicon;
}

std::vector<FlaggedToken> detect_noise_tokens(const Document& doc,
                                              const std::set<std::string>& lexicon,
                                              const AbbreviationDictionary& abbrevs,
                                              const CaseCounts& cases) {
  if (lexicon.empty()) {
    throw Error(ErrorKind::usage, "detect_noise_tokens: empty lexicon");
  }
  std::vector<FlaggedToken> flagged;
  TokenizedText sentences = tokenize(doc.text);
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    for (std::size_t i = 0; i < sentences[s].size(); ++i) {
      const std::string& surface = sentences[s][i].text;
      if (!has_letter(surface)) continue;
      std::string lower = to_lower(surface);
      if (abbrevs.contains(lower)) {
        flagged.push_back({s, i, surface, NoiseClass::abbreviation});
        continue;
      }
      if (!lexicon.count(lower)) {
        flagged.push_back({s, i, surface, NoiseClass::spelling});
        continue;
      }
      if (i == 0) continue;  // sentence-initial capitalization exempt
      std::string majority = cases.majority(lower);
      if (!majority.empty() && majority != surface) {
        flagged.push_back({s, i, surface, NoiseClass::casing});
      }
    }
  }
  return flagged;
}

std::vector<ReplacementCandidate> issac_score(
    const std::string& token, const std::vector<std::string>& window_words,
    const std::vector<std::string>& candidates, const FrequencyIndex& index,
    const AbbreviationDictionary& abbrevs, const CaseCounts& cases,
    const CleaningWeights& weights) {
  if (candidates.empty()) {
    throw Error(ErrorKind::usage, "issac_score: no candidates");
  }
  std::string token_lower = to_lower(token);
  const std::vector<AbbreviationExpansion>* expansions = nullptr;
  if (auto it = abbrevs.entries.find(token_lower); it != abbrevs.entries.end()) {
    expansions = &it->second;
  }

  std::vector<ReplacementCandidate> scored;
  scored.reserve(candidates.size());
  for (const std::string& cand : candidates) {
    ReplacementCandidate rc;
    rc.surface = cand;
    std::string cand_lower = to_lower(cand);

    rc.edit_sim = 1.0 / (1.0 + edit_distance(token_lower, cand_lower));

    rc.abbrev_evidence = 0.0;
    if (expansions) {
      for (const auto& exp : *expansions) {
        if (to_lower(exp.expansion) == cand_lower) {
          rc.abbrev_evidence = std::max(rc.abbrev_evidence, exp.weight);
        }
      }
    }

    std::string head = head_word(cand_lower);
    if (window_words.empty()) {
      rc.context_fit = 0.0;
    } else {
      int hits = 0;
      for (const std::string& w : window_words) {
        if (index.pair_count(to_lower(w), head) > 0) ++hits;
      }
      rc.context_fit = static_cast<double>(hits) /
                       static_cast<double>(window_words.size());
    }

    rc.case_prior = cases.share(cand);

    rc.score = weights.edit * rc.edit_sim + weights.abbrev * rc.abbrev_evidence +
               weights.context * rc.context_fit + weights.casing * rc.case_prior;
    scored.push_back(std::move(rc));
  }

  std::sort(scored.begin(), scored.end(),
            [](const ReplacementCandidate& a, const ReplacementCandidate& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.surface < b.surface;
            });
  return scored;
}

std::pair<Document, CleaningReport> clean_document(
    const Document& doc, const std::set<std::string>& lexicon,
    const FrequencyIndex& index, const AbbreviationDictionary& abbrevs,
    const CaseCounts& cases, const CleaningConfig& config) {
  if (doc.source_kind != SourceKind::plain) {
    throw Error(ErrorKind::usage, "clean_document: only plain documents are cleanable");
  }

  TokenizedText sentences = tokenize(doc.text);
  std::vector<FlaggedToken> flagged = detect_noise_tokens(doc, lexicon, abbrevs, cases);

  CleaningReport report;
  report.class_counts = {{"spelling", 0}, {"abbreviation", 0}, {"casing", 0}};

  struct Splice {
    std::size_t offset;
    std::size_t length;
    std::string replacement;
  };
  std::vector<Splice> splices;

  for (const FlaggedToken& flag : flagged) {
    const Sentence& sent = sentences[flag.sentence];
    const Token& tok = sent[flag.position];
    std::string lower = to_lower(tok.text);

    std::vector<std::string> candidates;
    if (flag.cls == NoiseClass::casing) {
      candidates.push_back(cases.majority(lower));
    } else {
      for (const std::string& w : lexicon) {
        if (std::abs(static_cast<long>(w.size()) - static_cast<long>(lower.size())) >
            config.max_candidate_distance)
          continue;
        if (edit_distance(lower, w) <= config.max_candidate_distance &&
            w != lower) {
          candidates.push_back(w);
        }
      }
      if (auto it = abbrevs.entries.find(lower); it != abbrevs.entries.end()) {
        for (const auto& exp : it->second) candidates.push_back(exp.expansion);
      }
    }
    if (candidates.empty()) {
      report.unresolved.push_back({doc.id, tok.offset, tok.text, 0.0});
      continue;
    }

    std::vector<std::string> window;
    std::size_t lo = flag.position >= 2 ? flag.position - 2 : 0;
    std::size_t hi = std::min(sent.size(), flag.position + 3);
    for (std::size_t i = lo; i < hi; ++i) {
      if (i != flag.position) window.push_back(to_lower(sent[i].text));
    }

    auto scored = issac_score(tok.text, window, candidates, index, abbrevs,
                              cases, config.weights);
    const ReplacementCandidate& top = scored.front();
    if (top.score < config.theta_clean) {
      report.unresolved.push_back({doc.id, tok.offset, tok.text, top.score});
      continue;
    }

    std::string chosen = top.surface;
    // keep sentence-initial capitalization on single-word replacements
    if (flag.position == 0 && !tok.text.empty() && !chosen.empty() &&
        std::isupper(static_cast<unsigned char>(tok.text[0])) &&
        std::islower(static_cast<unsigned char>(chosen[0]))) {
      chosen[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(chosen[0])));
    }
    if (chosen == tok.text) continue;

    splices.push_back({tok.offset, tok.text.size(), chosen});
    report.replacements.push_back(
        {doc.id, tok.offset, tok.text, chosen, top.score, flag.cls});
    report.class_counts[class_name(flag.cls)]++;
  }

  std::sort(splices.begin(), splices.end(),
            [](const Splice& a, const Splice& b) { return a.offset < b.offset; });
  std::string out;
  out.reserve(doc.text.size());
  std::size_t pos = 0;
  for (const Splice& s : splices) {
    out.append(doc.text, pos, s.offset - pos);
    out.append(s.replacement);
    pos = s.offset + s.length;
  }
  out.append(doc.text, pos, std::string::npos);

  Document cleaned = doc;
  cleaned.text = std::move(out);
  return {std::move(cleaned), std::move(report)};
}

std::string cleaning_report_jsonl(const CleaningReport& report) {
  std::string out;
  for (const Replacement& r : report.replacements) {
    nlohmann::ordered_json j;
    j["doc"] = r.doc_id;
    j["offset"] = r.token_offset;
    j["original"] = r.original;
    j["chosen"] = r.chosen;
    j["score"] = r.score;
    j["class"] = class_name(r.cls);
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace ontoforge
