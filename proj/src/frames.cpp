#include "ontoforge/frames.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ontoforge {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool is_noun(const std::string& upos) { return upos == "NOUN" || upos == "PROPN"; }

bool is_chunkable(const std::string& upos) {
  return upos == "DET" || upos == "ADJ" || upos == "NOUN" || upos == "PROPN" ||
         upos == "NUM";
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char c : s) {
    if (!std::isdigit(c)) return false;
  }
  return true;
}

bool all_caps_word(const std::string& s) {
  if (s.size() < 2) return false;
  for (unsigned char c : s) {
    if (!std::isupper(c)) return false;
  }
  return true;
}

std::string lower_head_surface(const NounPhrase& np) {
  return to_lower(np.words[np.head_index - np.start]);
}

void finish_sentence(ParsedSentence& sentence, const std::string& doc_id,
                     int first_line) {
  int roots = 0;
  int len = static_cast<int>(sentence.size());
  for (const ParseToken& t : sentence) {
    if (t.head == 0) ++roots;
    if (t.head < 0 || t.head > len) {
      throw Error(ErrorKind::parse,
                  doc_id + ": head out of range in sentence starting at line " +
                      std::to_string(first_line));
    }
  }
  if (roots != 1) {
    throw Error(ErrorKind::parse,
                doc_id + ": expected exactly one root in sentence starting at line " +
                    std::to_string(first_line));
  }
}

}  // namespace

std::vector<ParsedSentence> parse_conllu(const std::string& text,
                                         const std::string& doc_id) {
  std::vector<ParsedSentence> sentences;
  ParsedSentence current;
  int first_line = 0;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (!current.empty()) {
        finish_sentence(current, doc_id, first_line);
        sentences.push_back(std::move(current));
        current.clear();
      }
      continue;
    }
    if (line[0] == '#') continue;

    auto fields = split_tabs(line);
    if (fields.size() != 10) {
      throw Error(ErrorKind::parse, doc_id + ": expected 10 columns at line " +
                                        std::to_string(lineno));
    }
    const std::string& id = fields[0];
    if (id.find('-') != std::string::npos || id.find('.') != std::string::npos) {
      continue;  // multiword-token ranges and empty nodes
    }
    if (!all_digits(id)) {
      throw Error(ErrorKind::parse, doc_id + ": non-numeric token id at line " +
                                        std::to_string(lineno));
    }
    if (!all_digits(fields[6])) {
      throw Error(ErrorKind::parse, doc_id + ": non-numeric head at line " +
                                        std::to_string(lineno));
    }

    if (current.empty()) first_line = lineno;
    ParseToken tok;
    tok.index = std::stoi(id);
    tok.form = fields[1];
    tok.lemma = fields[2] == "_" ? to_lower(fields[1]) : fields[2];
    tok.upos = fields[3];
    tok.head = std::stoi(fields[6]);
    tok.deprel = fields[7];
    current.push_back(std::move(tok));
  }
  if (!current.empty()) {
    finish_sentence(current, doc_id, first_line);
    sentences.push_back(std::move(current));
  }
  return sentences;
}

std::vector<ParsedSentence> load_conllu(const Document& doc) {
  if (doc.source_kind != SourceKind::conllu) {
    throw Error(ErrorKind::usage, "load_conllu: document is not conllu: " + doc.id);
  }
  return parse_conllu(doc.text, doc.id);
}

double unithood(const NounPhrase& a, const NounPhrase& b,
                const FrequencyIndex& index) {
  std::string ha = lower_head_surface(a);
  std::string hb = lower_head_surface(b);
  long long fa = index.unigram_count(ha);
  long long fb = index.unigram_count(hb);
  long long fab = index.pair_count(ha, hb);
  if (fab == 0 || fa == 0 || fb == 0 || index.total_tokens == 0) return kNegInf;
  double mi = std::log2(static_cast<double>(fab) *
                        static_cast<double>(index.total_tokens) /
                        (static_cast<double>(fa) * static_cast<double>(fb)));
  return mi + std::log2(static_cast<double>(fab) + 1.0);
}

double odds_of_unithood(const NounPhrase& a, const NounPhrase& b,
                        const FrequencyIndex& index) {
  constexpr double eps = 1e-6;
  std::string ha = lower_head_surface(a);
  std::string hb = lower_head_surface(b);
  long long fa = index.unigram_count(ha);
  long long fb = index.unigram_count(hb);
  if (fa == 0 || fb == 0) {
    throw Error(ErrorKind::undefined_evidence,
                "odds_of_unithood: zero unigram count for '" +
                    (fa == 0 ? ha : hb) + "'");
  }
  long long fab = index.pair_count(ha, hb);
  // window counts may exceed a unigram count; evidence saturates at 1
  double e1 = std::min(1.0, static_cast<double>(fab) / static_cast<double>(fa));
  double e2 = std::min(1.0, static_cast<double>(fab) / static_cast<double>(fb));
  return std::log(e1 / (1.0 - e1 + eps)) + std::log(e2 / (1.0 - e2 + eps));
}

std::string singularize(const std::string& word) {
  auto ends_with = [&](const char* suffix) {
    std::size_t n = std::strlen(suffix);
    return word.size() >= n && word.compare(word.size() - n, n, suffix) == 0;
  };
  if (word.size() <= 3) return word;
  if (ends_with("ss") || ends_with("is") || ends_with("us")) return word;
  if (ends_with("ies") && word.size() >= 5)
    return word.substr(0, word.size() - 3) + "y";
  if (ends_with("xes") || ends_with("ches") || ends_with("shes") ||
      ends_with("zes") || ends_with("oes") || ends_with("ses"))
    return word.substr(0, word.size() - 2);
  if (word.back() == 's') return word.substr(0, word.size() - 1);
  return word;
}

std::string normalize_phrase(const std::vector<std::string>& words) {
  std::vector<std::string> lower;
  lower.reserve(words.size());
  for (const std::string& w : words) lower.push_back(to_lower(w));

  std::size_t begin = 0;
  while (begin + 1 < lower.size() &&
         (lower[begin] == "the" || lower[begin] == "a" || lower[begin] == "an")) {
    ++begin;
  }
  if (begin >= lower.size()) return {};

  std::string out;
  for (std::size_t i = begin; i < lower.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += i + 1 == lower.size() ? singularize(lower[i]) : lower[i];
  }
  return out;
}

std::string normalize_phrase(const NounPhrase& np) {
  return normalize_phrase(np.words);
}

ChunkResult chunk_noun_phrases(const ParsedSentence& sentence,
                               const FrequencyIndex& index,
                               const ChunkParams& params) {
  ChunkResult result;
  const int n = static_cast<int>(sentence.size());
  auto tok = [&](int idx) -> const ParseToken& { return sentence[idx - 1]; };

  // base chunks: maximal chunkable runs trimmed to their last noun
  std::vector<NounPhrase> chunks;
  int i = 1;
  while (i <= n) {
    if (!is_chunkable(tok(i).upos)) {
      ++i;
      continue;
    }
    int run_start = i;
    while (i <= n && is_chunkable(tok(i).upos)) ++i;
    int run_end = i - 1;
    int last_noun = 0;
    for (int j = run_end; j >= run_start; --j) {
      if (is_noun(tok(j).upos)) {
        last_noun = j;
        break;
      }
    }
    if (last_noun == 0) continue;
    NounPhrase np;
    np.start = run_start;
    np.end = last_noun;
    np.head_index = last_noun;
    for (int j = run_start; j <= last_noun; ++j) np.words.push_back(tok(j).form);
    np.head_lemma = to_lower(tok(last_noun).lemma);
    chunks.push_back(std::move(np));
  }

  // absorb "( ABC )" right after a chunk when ABC spells the chunk's initials
  for (std::size_t c = 0; c + 1 < chunks.size(); ++c) {
    NounPhrase& a = chunks[c];
    NounPhrase& b = chunks[c + 1];
    if (b.start != b.end || b.start != a.end + 2) continue;
    if (a.end + 3 > n) continue;
    if (tok(a.end + 1).form != "(" || tok(b.end + 1).form != ")") continue;
    const std::string& word = b.words[0];
    if (!all_caps_word(word)) continue;
    std::string initials;
    for (int j = a.start; j <= a.end; ++j) {
      if (tok(j).upos == "DET") continue;
      initials += static_cast<char>(
          std::toupper(static_cast<unsigned char>(tok(j).form[0])));
    }
    if (initials != word) continue;
    a.alias = word;
    chunks.erase(chunks.begin() + static_cast<long>(c) + 1);
  }

  // join adjacent chunks across one preposition/conjunction when OU clears
  std::size_t c = 0;
  while (c + 1 < chunks.size()) {
    NounPhrase& a = chunks[c];
    NounPhrase& b = chunks[c + 1];
    const bool adjacent = b.start == a.end + 2;
    const std::string* gap_upos = adjacent ? &tok(a.end + 1).upos : nullptr;
    if (!adjacent || (*gap_upos != "ADP" && *gap_upos != "CCONJ")) {
      ++c;
      continue;
    }
    MergeDecision decision;
    decision.left_head = lower_head_surface(a);
    decision.right_head = lower_head_surface(b);
    decision.connector = to_lower(tok(a.end + 1).form);
    try {
      decision.ou = odds_of_unithood(a, b, index);
    } catch (const Error&) {
      decision.ou = kNegInf;
    }
    decision.merged = decision.ou >= params.theta_ou;
    result.decisions.push_back(decision);
    if (!decision.merged) {
      ++c;
      continue;
    }
    NounPhrase merged;
    merged.start = a.start;
    merged.end = b.end;
    merged.head_index = b.head_index;
    for (int j = merged.start; j <= merged.end; ++j)
      merged.words.push_back(tok(j).form);
    merged.head_lemma = b.head_lemma;
    merged.alias = b.alias;
    chunks[c] = std::move(merged);
    chunks.erase(chunks.begin() + static_cast<long>(c) + 1);
    // the merged chunk may join with the next one
  }

  for (NounPhrase& np : chunks) np.normalized = normalize_phrase(np);
  result.phrases = std::move(chunks);
  return result;
}

namespace {

// chunk index covering a token position, or -1
int chunk_at(const std::vector<NounPhrase>& chunks, int pos) {
  for (std::size_t c = 0; c < chunks.size(); ++c) {
    if (chunks[c].start <= pos && pos <= chunks[c].end)
      return static_cast<int>(c);
  }
  return -1;
}

}  // namespace

std::vector<TernaryFrame> extract_frames(const ParsedSentence& sentence,
                                         const ChunkResult& chunks) {
  const std::vector<NounPhrase>& nps = chunks.phrases;
  std::vector<TernaryFrame> frames;
  auto tok = [&](int idx) -> const ParseToken& { return sentence[idx - 1]; };

  std::map<int, std::vector<int>> children;  // head index -> child indices
  for (const ParseToken& t : sentence) children[t.head].push_back(t.index);

  auto case_prep = [&](int noun_idx) -> std::string {
    auto it = children.find(noun_idx);
    if (it == children.end()) return {};
    for (int ch : it->second) {
      if (tok(ch).deprel == "case" && tok(ch).upos == "ADP")
        return to_lower(tok(ch).form);
    }
    return {};
  };

  auto emit = [&](int c1, const std::string& connector, int c2, FrameRule rule) {
    if (c1 < 0 || c2 < 0 || c1 == c2 || connector.empty()) return;
    TernaryFrame f;
    f.arg1 = nps[c1];
    f.connector = connector;
    f.arg2 = nps[c2];
    f.rule = rule;
    frames.push_back(std::move(f));
  };

  for (const ParseToken& t : sentence) {
    if (t.upos == "VERB") {
      int subj_chunk = -1, obj_chunk = -1;
      std::vector<int> obls;
      auto it = children.find(t.index);
      if (it != children.end()) {
        for (int ch : it->second) {
          const std::string& rel = tok(ch).deprel;
          if (starts_with(rel, "nsubj")) subj_chunk = chunk_at(nps, ch);
          else if (rel == "obj" || rel == "dobj") obj_chunk = chunk_at(nps, ch);
          else if (rel == "obl" || starts_with(rel, "obl:")) obls.push_back(ch);
        }
      }
      std::string lemma = to_lower(t.lemma);
      if (subj_chunk >= 0 && obj_chunk >= 0) {
        emit(subj_chunk, lemma, obj_chunk, FrameRule::R1);
      }
      for (int o : obls) {
        int obl_chunk = chunk_at(nps, o);
        if (obl_chunk < 0) continue;
        std::string prep = case_prep(o);
        if (prep.empty()) continue;
        if (subj_chunk >= 0) {
          emit(subj_chunk, lemma + "_" + prep, obl_chunk, FrameRule::R2);
        }
        // PP directly following the object elaborates the object as well
        if (obj_chunk >= 0) {
          int prep_idx = 0;
          auto oc = children.find(o);
          if (oc != children.end()) {
            for (int ch : oc->second) {
              if (tok(ch).deprel == "case" && tok(ch).upos == "ADP") prep_idx = ch;
            }
          }
          if (prep_idx == nps[obj_chunk].end + 1) {
            emit(obj_chunk, prep, obl_chunk, FrameRule::R3);
          }
        }
      }
    }

    // noun modified by a prepositional phrase
    if (is_noun(t.upos) && (t.deprel == "nmod" || starts_with(t.deprel, "nmod:"))) {
      std::string prep = case_prep(t.index);
      if (!prep.empty()) {
        emit(chunk_at(nps, t.head), prep, chunk_at(nps, t.index), FrameRule::R3);
      }
    }

    // copula predicate
    if (t.deprel == "cop") {
      int pred = t.head;
      int subj = 0;
      auto pc = children.find(pred);
      if (pc != children.end()) {
        for (int ch : pc->second) {
          if (starts_with(tok(ch).deprel, "nsubj")) subj = ch;
        }
      }
      if (subj > 0) {
        emit(chunk_at(nps, subj), "be", chunk_at(nps, pred), FrameRule::R4);
      }
    }

    // apposition
    if (t.deprel == "appos") {
      emit(chunk_at(nps, t.head), "be", chunk_at(nps, t.index), FrameRule::R4);
    }
  }

  std::sort(frames.begin(), frames.end(),
            [](const TernaryFrame& a, const TernaryFrame& b) {
              if (a.arg1.start != b.arg1.start) return a.arg1.start < b.arg1.start;
              if (a.arg2.start != b.arg2.start) return a.arg2.start < b.arg2.start;
              return static_cast<int>(a.rule) < static_cast<int>(b.rule);
            });
  std::vector<TernaryFrame> unique;
  for (TernaryFrame& f : frames) {
    bool dup = false;
    for (const TernaryFrame& u : unique) {
      if (u.arg1.normalized == f.arg1.normalized && u.connector == f.connector &&
          u.arg2.normalized == f.arg2.normalized) {
        dup = true;
        break;
      }
    }
    if (!dup) unique.push_back(std::move(f));
  }
  return unique;
}

const char* to_string(FrameRule r) {
  switch (r) {
    case FrameRule::R1: return "R1";
    case FrameRule::R2: return "R2";
    case FrameRule::R3: return "R3";
    case FrameRule::R4: return "R4";
  }
  return "?";
}

FrameRule frame_rule_from_string(const std::string& s) {
  if (s == "R1") return FrameRule::R1;
  if (s == "R2") return FrameRule::R2;
  if (s == "R3") return FrameRule::R3;
  if (s == "R4") return FrameRule::R4;
  throw Error(ErrorKind::parse, "unknown frame rule: " + s);
}

FrameRecord to_record(const TernaryFrame& frame) {
  FrameRecord rec;
  rec.arg1 = frame.arg1.normalized;
  rec.connector = frame.connector;
  rec.arg2 = frame.arg2.normalized;
  rec.doc_id = frame.doc_id;
  rec.sentence = frame.sentence;
  rec.rule = frame.rule;
  return rec;
}

std::string frames_to_jsonl(const std::vector<TernaryFrame>& frames) {
  std::string out;
  for (const TernaryFrame& f : frames) {
    nlohmann::ordered_json j;
    j["arg1"] = f.arg1.normalized;
    j["connector"] = f.connector;
    j["arg2"] = f.arg2.normalized;
    j["doc"] = f.doc_id;
    j["sent"] = f.sentence;
    j["rule"] = to_string(f.rule);
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<FrameRecord> parse_frames_jsonl(const std::string& text) {
  std::vector<FrameRecord> records;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::parse, "frames jsonl line " + std::to_string(lineno) +
                                        ": " + e.what());
    }
    FrameRecord rec;
    try {
      rec.arg1 = j.at("arg1").get<std::string>();
      rec.connector = j.at("connector").get<std::string>();
      rec.arg2 = j.at("arg2").get<std::string>();
      rec.doc_id = j.at("doc").get<std::string>();
      rec.sentence = j.at("sent").get<int>();
      rec.rule = frame_rule_from_string(j.at("rule").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::parse, "frames jsonl line " + std::to_string(lineno) +
                                        ": " + e.what());
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace ontoforge
