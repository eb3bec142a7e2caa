#include "ontoforge/termhood.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ontoforge {

namespace {

std::vector<std::string> split_words(const std::string& phrase) {
  std::vector<std::string> words;
  std::istringstream in(phrase);
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

double mean_or_zero(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

// DT(x) = log2((f_d+1)/(f_dbar+1) + 1)
double dt(long long f_d, long long f_dbar) {
  return std::log2(static_cast<double>(f_d + 1) / static_cast<double>(f_dbar + 1) +
                   1.0);
}

// DP(x) = log10(f_d+10) * DT(x)
double dp(long long f_d, long long f_dbar) {
  return std::log10(static_cast<double>(f_d) + 10.0) * dt(f_d, f_dbar);
}

double log_odds_ratio(double f_d, double F_d, double f_dbar, double F_dbar) {
  double odds_d = (f_d + 0.5) / (F_d - f_d + 0.5);
  double odds_dbar = (f_dbar + 0.5) / (F_dbar - f_dbar + 0.5);
  return std::log(odds_d / odds_dbar);
}

// simple-term contrastive weight, also used for head words of complex terms
double cw_simple(long long f_d, long long f_all, long long F_all) {
  return std::log(static_cast<double>(f_d) + 1.0) *
         std::log(static_cast<double>(F_all) / static_cast<double>(f_all + 1) +
                  1.0);
}

std::vector<std::string> connector_words(const std::string& connector) {
  std::vector<std::string> words;
  std::string cur;
  for (char c : connector) {
    if (c == '_') {
      if (!cur.empty()) words.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) words.push_back(cur);
  return words;
}

std::string phrase_head(const std::string& phrase) {
  auto pos = phrase.find_last_of(' ');
  return pos == std::string::npos ? phrase : phrase.substr(pos + 1);
}

}  // namespace

TermCandidate TermCandidate::from_phrase(const std::string& normalized) {
  TermCandidate c;
  c.normalized = normalized;
  c.words = split_words(normalized);
  if (c.words.empty()) {
    throw Error(ErrorKind::usage, "empty term candidate");
  }
  c.head = c.words.back();
  c.modifiers.assign(c.words.begin(), c.words.end() - 1);
  return c;
}

long long WordStats::domain(const std::string& w) const {
  auto it = f_d.find(w);
  return it == f_d.end() ? 0 : it->second;
}

long long WordStats::contrastive(const std::string& w) const {
  auto it = f_dbar.find(w);
  return it == f_dbar.end() ? 0 : it->second;
}

WordStats build_word_stats(const FrequencyIndex& domain,
                           const FrequencyIndex& contrastive) {
  WordStats stats;
  for (const auto& [w, c] : domain.unigram) stats.f_d[singularize(w)] += c;
  for (const auto& [w, c] : contrastive.unigram) stats.f_dbar[singularize(w)] += c;
  stats.total_d = domain.total_tokens;
  stats.total_dbar = contrastive.total_tokens;
  return stats;
}

Measure measure_from_string(const std::string& s) {
  std::string lower = to_lower(s);
  if (lower == "th") return Measure::TH;
  if (lower == "ot") return Measure::OT;
  if (lower == "cw") return Measure::CW;
  if (lower == "ncv") return Measure::NCV;
  throw Error(ErrorKind::usage, "unknown measure: " + s);
}

const char* to_string(Measure m) {
  switch (m) {
    case Measure::TH: return "th";
    case Measure::OT: return "ot";
    case Measure::CW: return "cw";
    case Measure::NCV: return "ncv";
  }
  return "?";
}

std::vector<TermCandidate> collect_candidates(
    const std::vector<FrameRecord>& frames) {
  std::set<std::string> phrases;
  for (const FrameRecord& f : frames) {
    if (!f.arg1.empty()) phrases.insert(f.arg1);
    if (!f.arg2.empty()) phrases.insert(f.arg2);
  }
  std::vector<TermCandidate> candidates;
  candidates.reserve(phrases.size());
  for (const std::string& p : phrases) {
    candidates.push_back(TermCandidate::from_phrase(p));
  }
  return candidates;
}

long long phrase_frequency(const std::vector<std::string>& words,
                           const std::vector<TokenizedDoc>& docs) {
  if (words.empty()) return 0;
  const std::size_t k = words.size();
  long long count = 0;
  for (const TokenizedDoc& doc : docs) {
    for (const auto& sent : doc.sentences) {
      if (sent.size() < k) continue;
      for (std::size_t i = 0; i + k <= sent.size(); ++i) {
        bool match = true;
        for (std::size_t j = 0; j + 1 < k; ++j) {
          if (sent[i + j] != words[j]) {
            match = false;
            break;
          }
        }
        if (!match) continue;
        const std::string& last = sent[i + k - 1];
        if (last == words[k - 1] || singularize(last) == words[k - 1]) ++count;
      }
    }
  }
  return count;
}

TermStats compute_stats(const TermCandidate& c,
                        const std::vector<TokenizedDoc>& domain_docs,
                        const std::vector<TokenizedDoc>& contrastive_docs,
                        const std::vector<FrameRecord>& frames) {
  TermStats stats;
  stats.f_d = phrase_frequency(c.words, domain_docs);
  stats.f_dbar = phrase_frequency(c.words, contrastive_docs);
  for (const FrameRecord& f : frames) {
    const bool is_arg1 = f.arg1 == c.normalized;
    const bool is_arg2 = f.arg2 == c.normalized;
    if (!is_arg1 && !is_arg2) continue;
    for (const std::string& w : connector_words(f.connector)) {
      stats.context_words.insert(w);
      stats.context_counts[w]++;
    }
    const std::string& other = is_arg1 ? f.arg2 : f.arg1;
    if (other.empty() || other == c.normalized) continue;
    std::string head = phrase_head(other);
    stats.context_words.insert(head);
    stats.context_counts[head]++;
  }
  return stats;
}

double score_TH(const TermCandidate& c, const TermStats& stats,
                const WordStats& words, const TermhoodParams& params) {
  double base = dp(stats.f_d, stats.f_dbar);
  std::vector<double> modifier_dp;
  for (const std::string& m : c.modifiers) {
    modifier_dp.push_back(dp(words.domain(m), words.contrastive(m)));
  }
  std::vector<double> context_dt;
  for (const std::string& w : stats.context_words) {
    context_dt.push_back(dt(words.domain(w), words.contrastive(w)));
  }
  return base + params.alpha * mean_or_zero(modifier_dp) +
         params.beta * mean_or_zero(context_dt);
}

double score_OT(const TermCandidate& c, const TermStats& stats,
                const WordStats& words, const CorpusTotals& totals) {
  if (totals.F_d <= 0 || totals.F_dbar <= 0) {
    throw Error(ErrorKind::usage, "score_OT: totals must be positive");
  }
  if (stats.f_d > totals.F_d) {
    throw Error(ErrorKind::internal_consistency,
                "score_OT: f_d exceeds F_d for '" + c.normalized + "'");
  }
  double base = log_odds_ratio(static_cast<double>(stats.f_d),
                               static_cast<double>(totals.F_d),
                               static_cast<double>(stats.f_dbar),
                               static_cast<double>(totals.F_dbar));
  // word-level odds use token mass as the reference totals
  auto word_base = [&](const std::string& w) {
    return log_odds_ratio(static_cast<double>(words.domain(w)),
                          static_cast<double>(std::max<long long>(words.total_d, 1)),
                          static_cast<double>(words.contrastive(w)),
                          static_cast<double>(std::max<long long>(words.total_dbar, 1)));
  };
  std::vector<double> modifier_base;
  for (const std::string& m : c.modifiers) modifier_base.push_back(word_base(m));
  std::vector<double> context_base;
  for (const std::string& w : stats.context_words) context_base.push_back(word_base(w));
  return base + mean_or_zero(modifier_base) + mean_or_zero(context_base);
}

double score_CW(const TermCandidate& c, const TermStats& stats,
                const WordStats& words, const CorpusTotals& totals) {
  if (c.length() == 1) {
    long long f_all = stats.f_d + stats.f_dbar;
    long long F_all = totals.F_d + totals.F_dbar;
    return cw_simple(stats.f_d, f_all, F_all);
  }
  long long head_d = words.domain(c.head);
  long long head_all = head_d + words.contrastive(c.head);
  long long token_mass = words.total_d + words.total_dbar;
  double head_cw = cw_simple(head_d, head_all, token_mass);
  return static_cast<double>(stats.f_d) * head_cw;
}

NestingMap build_nesting(const std::vector<TermCandidate>& candidates,
                         const std::map<std::string, TermStats>& stats) {
  NestingMap nesting;
  for (const TermCandidate& inner : candidates) {
    for (const TermCandidate& outer : candidates) {
      if (outer.normalized == inner.normalized ||
          outer.words.size() <= inner.words.size())
        continue;
      bool contained = false;
      for (std::size_t i = 0;
           i + inner.words.size() <= outer.words.size() && !contained; ++i) {
        contained = std::equal(inner.words.begin(), inner.words.end(),
                               outer.words.begin() + static_cast<long>(i));
      }
      if (contained) {
        nesting.containers[inner.normalized].push_back(
            stats.at(outer.normalized).f_d);
      }
    }
  }
  return nesting;
}

ContextStats build_context_stats(const std::vector<TermCandidate>& candidates,
                                 const std::map<std::string, TermStats>& stats) {
  ContextStats ctx;
  ctx.candidate_count = static_cast<long long>(candidates.size());
  for (const TermCandidate& c : candidates) {
    for (const std::string& w : stats.at(c.normalized).context_words) {
      ctx.candidates_with[w]++;
    }
  }
  return ctx;
}

double score_NCV(const TermCandidate& c, const TermStats& stats,
                 const NestingMap& nesting, const ContextStats& ctx) {
  double length_factor = std::log2(static_cast<double>(c.length()) + 1.0);
  double cval;
  auto it = nesting.containers.find(c.normalized);
  if (it == nesting.containers.end() || it->second.empty()) {
    cval = length_factor * static_cast<double>(stats.f_d);
  } else {
    double mean = 0.0;
    for (long long f : it->second) mean += static_cast<double>(f);
    mean /= static_cast<double>(it->second.size());
    cval = length_factor * (static_cast<double>(stats.f_d) - mean);
  }
  double context = 0.0;
  if (ctx.candidate_count > 0) {
    for (const auto& [w, count] : stats.context_counts) {
      auto cw = ctx.candidates_with.find(w);
      long long distinct = cw == ctx.candidates_with.end() ? 0 : cw->second;
      context += static_cast<double>(count) *
                 (static_cast<double>(distinct) /
                  static_cast<double>(ctx.candidate_count));
    }
  }
  return 0.8 * cval + 0.2 * context;
}

RankedTermList rank_terms(const std::vector<TermCandidate>& candidates,
                          Measure measure, const ScoringInputs& inputs) {
  RankedTermList list;
  list.measure = measure;
  list.entries.reserve(candidates.size());
  for (const TermCandidate& c : candidates) {
    const TermStats& stats = inputs.stats->at(c.normalized);
    RankedEntry entry;
    entry.candidate = c;
    entry.f_d = stats.f_d;
    entry.f_dbar = stats.f_dbar;
    switch (measure) {
      case Measure::TH:
        entry.score = score_TH(c, stats, *inputs.words, inputs.params);
        break;
      case Measure::OT:
        entry.score = score_OT(c, stats, *inputs.words, inputs.totals);
        break;
      case Measure::CW:
        entry.score = score_CW(c, stats, *inputs.words, inputs.totals);
        break;
      case Measure::NCV:
        entry.score = score_NCV(c, stats, *inputs.nesting, *inputs.ctx);
        break;
    }
    list.entries.push_back(std::move(entry));
  }
  std::sort(list.entries.begin(), list.entries.end(),
            [](const RankedEntry& a, const RankedEntry& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.candidate.normalized < b.candidate.normalized;
            });
  return list;
}

std::vector<TermCandidate> select_top_n(const RankedTermList& list, int n) {
  if (n <= 0) {
    throw Error(ErrorKind::usage, "select_top_n: n must be >= 1");
  }
  std::vector<TermCandidate> out;
  std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(n),
                                           list.entries.size());
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.push_back(list.entries[i].candidate);
  return out;
}

std::string ranked_list_tsv(const RankedTermList& list) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < list.entries.size(); ++i) {
    const RankedEntry& e = list.entries[i];
    std::snprintf(buf, sizeof(buf), "%.6f", e.score);
    out += std::to_string(i + 1);
    out += '\t';
    out += e.candidate.normalized;
    out += '\t';
    out += buf;
    out += '\t';
    out += std::to_string(e.f_d);
    out += '\t';
    out += std::to_string(e.f_dbar);
    out += '\n';
  }
  return out;
}

RankedTermList parse_ranked_list_tsv(const std::string& text, Measure measure) {
  RankedTermList list;
  list.measure = measure;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
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
    if (fields.size() != 5) {
      throw Error(ErrorKind::parse, "ranked list: expected 5 columns at line " +
                                        std::to_string(lineno));
    }
    RankedEntry entry;
    try {
      entry.candidate = TermCandidate::from_phrase(fields[1]);
      entry.score = std::stod(fields[2]);
      entry.f_d = std::stoll(fields[3]);
      entry.f_dbar = std::stoll(fields[4]);
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse, "ranked list: bad field at line " +
                                        std::to_string(lineno));
    }
    list.entries.push_back(std::move(entry));
  }
  return list;
}

}  // namespace ontoforge
