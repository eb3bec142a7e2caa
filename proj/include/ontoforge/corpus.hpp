#ifndef ONTOFORGE_CORPUS_HPP
#define ONTOFORGE_CORPUS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ontoforge/error.hpp"

namespace ontoforge {

enum class CorpusTag { domain, contrastive };
enum class SourceKind { plain, conllu };

struct Document {
  std::string id;  // relative path without extension, '/'-separated
  CorpusTag corpus_tag = CorpusTag::domain;
  std::string text;
  SourceKind source_kind = SourceKind::plain;
};

struct IngestResult {
  std::vector<Document> documents;  // sorted by id
  int skipped = 0;                  // files with unhandled extensions
};

struct Token {
  std::string text;    // original casing
  std::size_t offset;  // byte offset into the source text
};

// Sentences of tokens. Punctuation is not tokenized; tokens are maximal
// alnum runs with internal hyphens/apostrophes kept.
using Sentence = std::vector<Token>;
using TokenizedText = std::vector<Sentence>;

// Lowercased per-sentence token streams, the form every counting step
// consumes. conllu documents contribute their FORM column.
struct TokenizedDoc {
  std::string id;
  std::vector<std::vector<std::string>> sentences;
};

struct FrequencyIndex {
  std::map<std::string, long long> unigram;
  // unordered pair key, stored as (min,max); window co-occurrence within a
  // sentence. Counts can exceed min(unigram) since one token may pair with
  // several occurrences of the other word.
  std::map<std::pair<std::string, std::string>, long long> pair_window;
  std::map<std::string, long long> doc_frequency;
  long long total_tokens = 0;
  long long total_docs = 0;

  long long unigram_count(const std::string& w) const;
  long long pair_count(const std::string& a, const std::string& b) const;
};

struct HitCountSnapshot {
  long long N = 0;
  std::map<std::string, long long> unigram;
  std::map<std::pair<std::string, std::string>, long long> pair;
};

std::string to_lower(const std::string& s);

// Ingests every .txt (plain) and .conllu (parsed) file under path,
// recursively. Other extensions are counted as skipped.
IngestResult ingest_directory(const std::string& path, CorpusTag tag);

TokenizedText tokenize(const std::string& text);

// Lowercased sentence streams for a document of either source kind.
TokenizedDoc tokenized_doc(const Document& doc);

FrequencyIndex build_frequency_index(const std::vector<Document>& docs,
                                     int window = 5);
FrequencyIndex build_frequency_index(const std::vector<TokenizedDoc>& docs,
                                     int window = 5);

HitCountSnapshot load_hit_count_snapshot(const std::string& path);
HitCountSnapshot parse_hit_count_snapshot(const std::string& json_text);

}  // namespace ontoforge

#endif
