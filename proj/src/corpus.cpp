#include "ontoforge/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace ontoforge {

std::string to_lower(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

namespace {

bool is_word_char(unsigned char c) {
  // Non-ASCII bytes are treated as letters so UTF-8 words survive intact.
  return std::isalnum(c) || c >= 0x80;
}

bool is_upper(unsigned char c) { return c >= 'A' && c <= 'Z'; }

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::ingest, "cannot read file: " + p.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Minimal CoNLL-U token pass: FORM column of ordinary word rows, sentences
// split on blank lines. Full validation lives in frames::load_conllu.
std::vector<std::vector<std::string>> conllu_forms(const std::string& text) {
  std::vector<std::vector<std::string>> sentences;
  std::vector<std::string> current;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (!current.empty()) sentences.push_back(std::move(current));
      current.clear();
      continue;
    }
    if (line[0] == '#') continue;
    auto tab1 = line.find('\t');
    if (tab1 == std::string::npos) continue;
    std::string id = line.substr(0, tab1);
    // skip multiword-token (1-2) and empty-node (1.1) rows
    if (id.find('-') != std::string::npos || id.find('.') != std::string::npos)
      continue;
    auto tab2 = line.find('\t', tab1 + 1);
    std::string form = line.substr(tab1 + 1, tab2 == std::string::npos
                                                 ? std::string::npos
                                                 : tab2 - tab1 - 1);
    if (!form.empty()) current.push_back(to_lower(form));
  }
  if (!current.empty()) sentences.push_back(std::move(current));
  return sentences;
}

}  // namespace

long long FrequencyIndex::unigram_count(const std::string& w) const {
  auto it = unigram.find(w);
  return it == unigram.end() ? 0 : it->second;
}

long long FrequencyIndex::pair_count(const std::string& a,
                                     const std::string& b) const {
  auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  auto it = pair_window.find(key);
  return it == pair_window.end() ? 0 : it->second;
}

IngestResult ingest_directory(const std::string& path, CorpusTag tag) {
  fs::path root(path);
  std::error_code ec;
  if (!fs::exists(root, ec) || !fs::is_directory(root, ec)) {
    throw Error(ErrorKind::ingest, "not a readable directory: " + path);
  }

  IngestResult result;
  for (fs::recursive_directory_iterator it(root, ec), end; it != end;
       it.increment(ec)) {
    if (ec) throw Error(ErrorKind::ingest, "cannot traverse: " + path);
    if (!it->is_regular_file()) continue;
    const fs::path& p = it->path();
    std::string ext = p.extension().string();
    SourceKind kind;
    if (ext == ".txt") {
      kind = SourceKind::plain;
    } else if (ext == ".conllu") {
      kind = SourceKind::conllu;
    } else {
      result.skipped++;
      continue;
    }
    fs::path rel = fs::relative(p, root);
    rel.replace_extension();
    Document doc;
    doc.id = rel.generic_string();
    doc.corpus_tag = tag;
    doc.source_kind = kind;
    doc.text = read_file(p);
    if (kind == SourceKind::plain && doc.text.empty()) {
      throw Error(ErrorKind::ingest, "empty plain document: " + p.string());
    }
    result.documents.push_back(std::move(doc));
  }

  std::sort(result.documents.begin(), result.documents.end(),
            [](const Document& a, const Document& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < result.documents.size(); ++i) {
    if (result.documents[i].id == result.documents[i - 1].id) {
      throw Error(ErrorKind::ingest,
                  "duplicate document id: " + result.documents[i].id);
    }
  }
  if (result.documents.empty()) {
    throw Error(ErrorKind::empty_corpus, "no .txt or .conllu files in " + path);
  }
  return result;
}

TokenizedText tokenize(const std::string& text) {
  TokenizedText sentences;
  Sentence current;

  std::size_t i = 0;
  const std::size_t n = text.size();
  auto flush_sentence = [&]() {
    if (!current.empty()) sentences.push_back(std::move(current));
    current.clear();
  };

  while (i < n) {
    unsigned char c = text[i];
    if (is_word_char(c)) {
      std::size_t start = i;
      while (i < n) {
        unsigned char ch = text[i];
        if (is_word_char(ch)) {
          ++i;
        } else if ((ch == '-' || ch == '\'') && i > start && i + 1 < n &&
                   is_word_char(text[i + 1])) {
          ++i;  // internal hyphen/apostrophe
        } else {
          break;
        }
      }
      current.push_back(Token{text.substr(start, i - start), start});
      continue;
    }
    if (c == '.' || c == '?' || c == '!') {
      // boundary when followed by whitespace and a capital letter
      std::size_t j = i + 1;
      while (j < n && (text[j] == ' ' || text[j] == '\t')) ++j;
      if (j > i + 1 && j < n && is_upper(text[j])) flush_sentence();
      ++i;
      continue;
    }
    if (c == '\n') {
      // blank line ends the sentence
      std::size_t j = i + 1;
      while (j < n && (text[j] == ' ' || text[j] == '\t' || text[j] == '\r'))
        ++j;
      if (j < n && text[j] == '\n') flush_sentence();
      ++i;
      continue;
    }
    ++i;
  }
  flush_sentence();
  return sentences;
}

TokenizedDoc tokenized_doc(const Document& doc) {
  TokenizedDoc out;
  out.id = doc.id;
  if (doc.source_kind == SourceKind::conllu) {
    out.sentences = conllu_forms(doc.text);
    return out;
  }
  for (const Sentence& sent : tokenize(doc.text)) {
    std::vector<std::string> words;
    words.reserve(sent.size());
    for (const Token& t : sent) words.push_back(to_lower(t.text));
    out.sentences.push_back(std::move(words));
  }
  return out;
}

FrequencyIndex build_frequency_index(const std::vector<TokenizedDoc>& docs,
                                     int window) {
  if (window < 1) {
    throw Error(ErrorKind::usage, "window must be >= 1");
  }
  FrequencyIndex index;
  index.total_docs = static_cast<long long>(docs.size());
  for (const TokenizedDoc& doc : docs) {
    std::map<std::string, bool> seen;
    for (const auto& sent : doc.sentences) {
      const std::size_t len = sent.size();
      for (std::size_t i = 0; i < len; ++i) {
        index.unigram[sent[i]]++;
        index.total_tokens++;
        seen[sent[i]] = true;
        std::size_t limit = std::min(len, i + 1 + static_cast<std::size_t>(window));
        for (std::size_t j = i + 1; j < limit; ++j) {
          if (sent[i] == sent[j]) continue;
          auto key = sent[i] < sent[j] ? std::make_pair(sent[i], sent[j])
                                       : std::make_pair(sent[j], sent[i]);
          index.pair_window[key]++;
        }
      }
    }
    for (const auto& [w, _] : seen) index.doc_frequency[w]++;
  }
  return index;
}

FrequencyIndex build_frequency_index(const std::vector<Document>& docs,
                                     int window) {
  std::vector<TokenizedDoc> tokenized;
  tokenized.reserve(docs.size());
  for (const Document& d : docs) tokenized.push_back(tokenized_doc(d));
  return build_frequency_index(tokenized, window);
}

HitCountSnapshot parse_hit_count_snapshot(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("snapshot: ") + e.what());
  }
  if (!j.is_object() || !j.contains("N") || !j["N"].is_number_integer()) {
    throw Error(ErrorKind::parse, "snapshot: missing integer field N");
  }
  HitCountSnapshot snap;
  snap.N = j["N"].get<long long>();
  if (j.contains("unigram")) {
    if (!j["unigram"].is_object())
      throw Error(ErrorKind::parse, "snapshot: unigram must be an object");
    for (auto& [k, v] : j["unigram"].items()) {
      if (!v.is_number_integer())
        throw Error(ErrorKind::parse, "snapshot: non-integer count for " + k);
      snap.unigram[k] = v.get<long long>();
    }
  }
  if (j.contains("pair")) {
    if (!j["pair"].is_object())
      throw Error(ErrorKind::parse, "snapshot: pair must be an object");
    for (auto& [k, v] : j["pair"].items()) {
      auto sep = k.find("||");
      if (sep == std::string::npos)
        throw Error(ErrorKind::parse, "snapshot: pair key without ||: " + k);
      if (!v.is_number_integer())
        throw Error(ErrorKind::parse, "snapshot: non-integer count for " + k);
      std::string a = k.substr(0, sep);
      std::string b = k.substr(sep + 2);
      if (b < a) std::swap(a, b);
      snap.pair[{a, b}] = v.get<long long>();
    }
  }

  std::vector<std::string> offending;
  for (const auto& [w, c] : snap.unigram) {
    if (c > snap.N) offending.push_back(w);
  }
  for (const auto& [key, c] : snap.pair) {
    auto ua = snap.unigram.find(key.first);
    auto ub = snap.unigram.find(key.second);
    long long fa = ua == snap.unigram.end() ? 0 : ua->second;
    long long fb = ub == snap.unigram.end() ? 0 : ub->second;
    if (c > std::min(fa, fb)) offending.push_back(key.first + "||" + key.second);
  }
  if (!offending.empty()) {
    std::string msg = "snapshot: count invariants violated for:";
    for (const auto& k : offending) msg += " " + k;
    throw Error(ErrorKind::validation, msg);
  }
  return snap;
}

HitCountSnapshot load_hit_count_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ingest, "cannot read snapshot: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_hit_count_snapshot(ss.str());
}

}  // namespace ontoforge
