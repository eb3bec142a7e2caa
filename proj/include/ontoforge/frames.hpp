#ifndef ONTOFORGE_FRAMES_HPP
#define ONTOFORGE_FRAMES_HPP

#include <optional>
#include <string>
#include <vector>

#include "ontoforge/corpus.hpp"

namespace ontoforge {

struct ParseToken {
  int index = 0;  // 1-based position
  std::string form;
  std::string lemma;
  std::string upos;
  int head = 0;  // 0 = root
  std::string deprel;
};

using ParsedSentence = std::vector<ParseToken>;

struct NounPhrase {
  int start = 0;  // 1-based token indices, inclusive
  int end = 0;
  int head_index = 0;  // index of the head noun
  std::vector<std::string> words;  // surface forms
  std::string head_lemma;
  std::string normalized;
  std::optional<std::string> alias;  // absorbed parenthetical initialism
};

struct MergeDecision {
  std::string left_head;
  std::string right_head;
  std::string connector;  // the preposition/conjunction crossed
  double ou = 0.0;
  bool merged = false;
};

struct ChunkResult {
  std::vector<NounPhrase> phrases;  // non-overlapping, sorted by start
  std::vector<MergeDecision> decisions;
};

enum class FrameRule { R1, R2, R3, R4 };

struct TernaryFrame {
  NounPhrase arg1;
  std::string connector;
  NounPhrase arg2;
  std::string doc_id;
  int sentence = 0;
  FrameRule rule = FrameRule::R1;
};

struct ChunkParams {
  double theta_ou = 0.0;
};

std::vector<ParsedSentence> load_conllu(const Document& doc);
std::vector<ParsedSentence> parse_conllu(const std::string& text,
                                         const std::string& doc_id);

// UH = MI + log2(f(ab)+1) over head-word window counts; -inf when f(ab)=0.
double unithood(const NounPhrase& a, const NounPhrase& b,
                const FrequencyIndex& index);

// Log-odds formulation; the merge decision is OU >= theta_ou.
double odds_of_unithood(const NounPhrase& a, const NounPhrase& b,
                        const FrequencyIndex& index);

ChunkResult chunk_noun_phrases(const ParsedSentence& sentence,
                               const FrequencyIndex& index,
                               const ChunkParams& params = {});

std::vector<TernaryFrame> extract_frames(const ParsedSentence& sentence,
                                         const ChunkResult& chunks);

// lowercase, leading determiners stripped, head noun singularized
std::string normalize_phrase(const NounPhrase& np);
std::string normalize_phrase(const std::vector<std::string>& words);

// suffix-rule singularization used for head nouns and corpus n-gram matching
std::string singularize(const std::string& word);

const char* to_string(FrameRule r);
FrameRule frame_rule_from_string(const std::string& s);

std::string frames_to_jsonl(const std::vector<TernaryFrame>& frames);

struct FrameRecord {
  std::string arg1;
  std::string connector;
  std::string arg2;
  std::string doc_id;
  int sentence = 0;
  FrameRule rule = FrameRule::R1;
};

FrameRecord to_record(const TernaryFrame& frame);
std::vector<FrameRecord> parse_frames_jsonl(const std::string& text);

}  // namespace ontoforge

#endif
