#ifndef ONTOFORGE_TERMHOOD_HPP
#define ONTOFORGE_TERMHOOD_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ontoforge/corpus.hpp"
#include "ontoforge/frames.hpp"

namespace ontoforge {

struct TermCandidate {
  std::string normalized;
  std::vector<std::string> words;
  std::string head;                    // last word
  std::vector<std::string> modifiers;  // all non-head words

  static TermCandidate from_phrase(const std::string& normalized);
  std::size_t length() const { return words.size(); }
};

struct TermStats {
  long long f_d = 0;
  long long f_dbar = 0;
  std::set<std::string> context_words;
  std::map<std::string, long long> context_counts;  // word -> frames with it
};

// Per-word frequencies aggregated over singularized token forms.
struct WordStats {
  std::map<std::string, long long> f_d;
  std::map<std::string, long long> f_dbar;
  long long total_d = 0;
  long long total_dbar = 0;

  long long domain(const std::string& w) const;
  long long contrastive(const std::string& w) const;
};

WordStats build_word_stats(const FrequencyIndex& domain,
                           const FrequencyIndex& contrastive);

enum class Measure { TH, OT, CW, NCV };

Measure measure_from_string(const std::string& s);
const char* to_string(Measure m);

struct RankedEntry {
  TermCandidate candidate;
  double score = 0.0;
  long long f_d = 0;
  long long f_dbar = 0;
};

struct RankedTermList {
  Measure measure = Measure::TH;
  std::vector<RankedEntry> entries;  // score descending, ties lexicographic
};

struct TermhoodParams {
  double alpha = 0.5;   // modifier weight in TH
  double beta = 0.25;   // context weight in TH
};

std::vector<TermCandidate> collect_candidates(const std::vector<FrameRecord>& frames);

TermStats compute_stats(const TermCandidate& c,
                        const std::vector<TokenizedDoc>& domain_docs,
                        const std::vector<TokenizedDoc>& contrastive_docs,
                        const std::vector<FrameRecord>& frames);

// exact contiguous occurrences of the phrase; the final word also matches
// via singularization
long long phrase_frequency(const std::vector<std::string>& words,
                           const std::vector<TokenizedDoc>& docs);

double score_TH(const TermCandidate& c, const TermStats& stats,
                const WordStats& words, const TermhoodParams& params = {});

struct CorpusTotals {
  long long F_d = 0;     // candidate-phrase occurrence mass, domain
  long long F_dbar = 0;  // same, contrastive
};

double score_OT(const TermCandidate& c, const TermStats& stats,
                const WordStats& words, const CorpusTotals& totals);

double score_CW(const TermCandidate& c, const TermStats& stats,
                const WordStats& words, const CorpusTotals& totals);

// Shared context statistics for NCV: how many distinct candidates each
// context word accompanies.
struct ContextStats {
  std::map<std::string, long long> candidates_with;
  long long candidate_count = 0;
};

struct NestingMap {
  // candidate -> domain frequencies of candidates properly containing it
  std::map<std::string, std::vector<long long>> containers;
};

NestingMap build_nesting(const std::vector<TermCandidate>& candidates,
                         const std::map<std::string, TermStats>& stats);

ContextStats build_context_stats(const std::vector<TermCandidate>& candidates,
                                 const std::map<std::string, TermStats>& stats);

double score_NCV(const TermCandidate& c, const TermStats& stats,
                 const NestingMap& nesting, const ContextStats& ctx);

struct ScoringInputs {
  const std::map<std::string, TermStats>* stats;
  const WordStats* words;
  CorpusTotals totals;
  const NestingMap* nesting;
  const ContextStats* ctx;
  TermhoodParams params;
};

RankedTermList rank_terms(const std::vector<TermCandidate>& candidates,
                          Measure measure, const ScoringInputs& inputs);

std::vector<TermCandidate> select_top_n(const RankedTermList& list, int n);

// TSV: rank<TAB>term<TAB>score<TAB>f_d<TAB>f_dbar
std::string ranked_list_tsv(const RankedTermList& list);
RankedTermList parse_ranked_list_tsv(const std::string& text, Measure measure);

}  // namespace ontoforge

#endif
