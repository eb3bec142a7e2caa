#ifndef ONTOFORGE_CLEANING_HPP
#define ONTOFORGE_CLEANING_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ontoforge/corpus.hpp"

namespace ontoforge {

struct AbbreviationExpansion {
  std::string expansion;
  double weight;  // in [0,1]
};

struct AbbreviationDictionary {
  // key is the lowercased abbreviation
  std::map<std::string, std::vector<AbbreviationExpansion>> entries;

  bool contains(const std::string& lower) const {
    return entries.count(lower) > 0;
  }
};

// TSV: abbrev<TAB>expansion<TAB>weight, '#' comments allowed.
AbbreviationDictionary load_abbreviation_dictionary(const std::string& path);
AbbreviationDictionary parse_abbreviation_dictionary(const std::string& text);

// Per-lowercase-form tally of exact casings seen in the corpus.
// Sentence-initial tokens are excluded so ordinary capitalization does not
// pollute the evidence.
struct CaseCounts {
  std::map<std::string, std::map<std::string, long long>> by_lower;

  // majority casing of the form, empty if unseen; ties lexicographic
  std::string majority(const std::string& lower) const;
  // share of `surface` among all occurrences of its lowercase form
  double share(const std::string& surface) const;
};

CaseCounts build_case_counts(const std::vector<Document>& docs);

enum class NoiseClass { spelling, abbreviation, casing };

struct FlaggedToken {
  std::size_t sentence;
  std::size_t position;  // token index within the sentence
  std::string surface;
  NoiseClass cls;
};

struct ReplacementCandidate {
  std::string surface;
  double edit_sim;
  double abbrev_evidence;
  double context_fit;
  double case_prior;
  double score;
};

struct CleaningWeights {
  double edit = 0.4;
  double abbrev = 0.2;
  double context = 0.3;
  double casing = 0.1;
};

struct Replacement {
  std::string doc_id;
  std::size_t token_offset;  // byte offset of the token in the source text
  std::string original;
  std::string chosen;
  double score;
  NoiseClass cls;
};

struct Unresolved {
  std::string doc_id;
  std::size_t token_offset;
  std::string original;
  double top_score;
};

struct CleaningReport {
  std::vector<Replacement> replacements;
  std::vector<Unresolved> unresolved;
  std::map<std::string, long long> class_counts;  // spelling/abbreviation/casing
};

struct CleaningConfig {
  bool enabled = false;
  double theta_clean = 0.5;
  CleaningWeights weights;
  int max_candidate_distance = 2;
  long long min_lexicon_count = 2;
};

// Unit-cost insert/delete/substitute distance.
int edit_distance(const std::string& a, const std::string& b);

std::set<std::string> build_lexicon(const FrequencyIndex& domain,
                                    const FrequencyIndex& contrastive,
                                    long long min_count = 2);

std::vector<FlaggedToken> detect_noise_tokens(const Document& doc,
                                              const std::set<std::string>& lexicon,
                                              const AbbreviationDictionary& abbrevs,
                                              const CaseCounts& cases);

// Scores every candidate and returns them sorted by score descending,
// ties lexicographic on the surface.
std::vector<ReplacementCandidate> issac_score(
    const std::string& token, const std::vector<std::string>& window_words,
    const std::vector<std::string>& candidates, const FrequencyIndex& index,
    const AbbreviationDictionary& abbrevs, const CaseCounts& cases,
    const CleaningWeights& weights = {});

std::pair<Document, CleaningReport> clean_document(
    const Document& doc, const std::set<std::string>& lexicon,
    const FrequencyIndex& index, const AbbreviationDictionary& abbrevs,
    const CaseCounts& cases, const CleaningConfig& config = {});

std::string cleaning_report_jsonl(const CleaningReport& report);

}  // namespace ontoforge

#endif
