#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ontoforge/termhood.hpp"

using namespace ontoforge;

namespace {

FrameRecord record(const std::string& a1, const std::string& conn,
                   const std::string& a2) {
  FrameRecord r;
  r.arg1 = a1;
  r.connector = conn;
  r.arg2 = a2;
  r.doc_id = "d";
  r.sentence = 1;
  return r;
}

std::vector<FrameRecord> figure_frames() {
  return {
      record("team", "identify", "several hazardous chemical"),
      record("team", "identify_in", "new process"),
      record("team", "identify_through", "process hazards analysis"),
      record("several hazardous chemical", "in", "new process"),
  };
}

TokenizedDoc doc_of(const std::string& id,
                    std::vector<std::vector<std::string>> sentences) {
  TokenizedDoc d;
  d.id = id;
  d.sentences = std::move(sentences);
  return d;
}

TermStats stats_with(long long f_d, long long f_dbar) {
  TermStats s;
  s.f_d = f_d;
  s.f_dbar = f_dbar;
  return s;
}

}  // namespace

TEST_CASE("collect_candidates") {
  SUBCASE("worked example frames give the four-candidate set") {
    auto candidates = collect_candidates(figure_frames());
    REQUIRE(candidates.size() == 4);
    std::set<std::string> names;
    for (const auto& c : candidates) names.insert(c.normalized);
    CHECK(names == std::set<std::string>{"team", "several hazardous chemical",
                                         "new process", "process hazards analysis"});
  }
  SUBCASE("empty frames give no candidates") {
    CHECK(collect_candidates({}).empty());
  }
  SUBCASE("duplicate arguments collapse") {
    auto candidates = collect_candidates(
        {record("team", "run", "plant"), record("plant", "use", "team")});
    CHECK(candidates.size() == 2);
  }
  SUBCASE("candidate parts") {
    auto c = TermCandidate::from_phrase("several hazardous chemical");
    CHECK(c.head == "chemical");
    CHECK(c.modifiers == std::vector<std::string>{"several", "hazardous"});
    CHECK(c.length() == 3);
  }
}

TEST_CASE("phrase frequency and stats") {
  std::vector<TokenizedDoc> domain = {
      doc_of("d1", {{"the", "new", "process", "works"},
                    {"a", "new", "process", "starts"}}),
      doc_of("d2", {{"this", "new", "processes", "data"}}),  // singular match
  };
  std::vector<TokenizedDoc> contrastive = {
      doc_of("c1", {{"no", "match", "here"}})};

  SUBCASE("counts contiguous occurrences with singularized heads") {
    auto c = TermCandidate::from_phrase("new process");
    auto s = compute_stats(c, domain, contrastive, {});
    CHECK(s.f_d == 3);
    CHECK(s.f_dbar == 0);
  }
  SUBCASE("absent phrase counts zero") {
    auto c = TermCandidate::from_phrase("storage tank");
    auto s = compute_stats(c, domain, contrastive, {});
    CHECK(s.f_d == 0);
    CHECK(s.f_dbar == 0);
  }
  SUBCASE("context words harvest connectors and other-argument heads") {
    auto c = TermCandidate::from_phrase("team");
    auto s = compute_stats(c, {}, {}, figure_frames());
    CHECK(s.context_words.count("identify") == 1);
    CHECK(s.context_words.count("chemical") == 1);
    CHECK(s.context_words.count("in") == 1);
    CHECK(s.context_words.count("process") == 1);
    CHECK(s.context_words.count("analysis") == 1);
  }
}

TEST_CASE("TH scoring") {
  WordStats words;
  SUBCASE("degenerate candidate scores exactly one") {
    auto c = TermCandidate::from_phrase("term");
    CHECK(score_TH(c, stats_with(0, 0), words) == doctest::Approx(1.0));
  }
  SUBCASE("worked value") {
    auto c = TermCandidate::from_phrase("term");
    double expected = std::log10(110.0) * std::log2(102.0);
    CHECK(score_TH(c, stats_with(100, 0), words) ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(score_TH(c, stats_with(100, 0), words) ==
          doctest::Approx(13.621).epsilon(1e-3));
  }
  SUBCASE("monotone in domain frequency") {
    auto c = TermCandidate::from_phrase("term");
    CHECK(score_TH(c, stats_with(100, 3), words) >
          score_TH(c, stats_with(10, 3), words));
  }
  SUBCASE("modifiers and context contribute weighted means") {
    WordStats w;
    w.f_d = {{"new", 40}, {"identify", 10}};
    w.f_dbar = {{"new", 10}, {"identify", 2}};
    auto c = TermCandidate::from_phrase("new process");
    TermStats s = stats_with(5, 1);
    s.context_words = {"identify"};
    double base = std::log10(15.0) * std::log2(6.0 / 2.0 + 1.0);
    double mod_dp = std::log10(50.0) * std::log2(41.0 / 11.0 + 1.0);
    double ctx_dt = std::log2(11.0 / 3.0 + 1.0);
    CHECK(score_TH(c, s, w) ==
          doctest::Approx(base + 0.5 * mod_dp + 0.25 * ctx_dt).epsilon(1e-12));
  }
}

TEST_CASE("OT scoring") {
  WordStats words;
  auto c = TermCandidate::from_phrase("term");
  SUBCASE("worked value") {
    CorpusTotals totals{1000, 1000};
    double expected = std::log((100.5 / 900.5) / (1.5 / 999.5));
    CHECK(score_OT(c, stats_with(100, 1), words, totals) ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(score_OT(c, stats_with(100, 1), words, totals) ==
          doctest::Approx(4.309).epsilon(1e-3));
  }
  SUBCASE("zero at the symmetric point") {
    CorpusTotals totals{500, 500};
    CHECK(score_OT(c, stats_with(25, 25), words, totals) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("increasing contrastive frequency strictly decreases OT") {
    CorpusTotals totals{1000, 1000};
    CHECK(score_OT(c, stats_with(50, 10), words, totals) >
          score_OT(c, stats_with(50, 20), words, totals));
  }
  SUBCASE("f_d above the total is an internal consistency error") {
    CorpusTotals totals{10, 10};
    try {
      score_OT(c, stats_with(11, 0), words, totals);
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::internal_consistency);
    }
  }
}

TEST_CASE("CW scoring") {
  SUBCASE("simple term with zero domain frequency scores zero") {
    WordStats words;
    CorpusTotals totals{100, 100};
    auto c = TermCandidate::from_phrase("term");
    CHECK(score_CW(c, stats_with(0, 5), words, totals) == doctest::Approx(0.0));
  }
  SUBCASE("complex term multiplies domain frequency by the head weight") {
    WordStats words;
    words.f_d = {{"analysis", 7}};
    words.f_dbar = {{"analysis", 1}};
    words.total_d = 1000;
    words.total_dbar = 1000;
    CorpusTotals totals{100, 100};
    auto c = TermCandidate::from_phrase("tree analysis");
    double head_cw = std::log(8.0) * std::log(2000.0 / 9.0 + 1.0);
    CHECK(score_CW(c, stats_with(5, 0), words, totals) ==
          doctest::Approx(5.0 * head_cw).epsilon(1e-12));
  }
  SUBCASE("doubling f_d doubles a complex term's score") {
    WordStats words;
    words.f_d = {{"analysis", 7}};
    words.total_d = 1000;
    words.total_dbar = 1000;
    CorpusTotals totals{100, 100};
    auto c = TermCandidate::from_phrase("tree analysis");
    CHECK(score_CW(c, stats_with(10, 0), words, totals) ==
          doctest::Approx(2.0 * score_CW(c, stats_with(5, 0), words, totals)));
  }
}

TEST_CASE("NCV scoring") {
  SUBCASE("un-nested worked value") {
    auto c = TermCandidate::from_phrase("new process");
    NestingMap nesting;
    ContextStats ctx;
    ctx.candidate_count = 10;
    double expected = 0.8 * std::log2(3.0) * 10.0;
    CHECK(score_NCV(c, stats_with(10, 0), nesting, ctx) ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(score_NCV(c, stats_with(10, 0), nesting, ctx) ==
          doctest::Approx(12.68).epsilon(1e-3));
  }
  SUBCASE("zero frequency with no context scores zero") {
    auto c = TermCandidate::from_phrase("new process");
    CHECK(score_NCV(c, stats_with(0, 7), NestingMap{}, ContextStats{}) ==
          doctest::Approx(0.0));
  }
  SUBCASE("contrastive counts never matter") {
    auto c = TermCandidate::from_phrase("new process");
    NestingMap nesting;
    ContextStats ctx;
    ctx.candidate_count = 4;
    TermStats a = stats_with(10, 0);
    TermStats b = stats_with(10, 9999);
    a.context_counts = b.context_counts = {{"identify", 2}};
    ctx.candidates_with = {{"identify", 3}};
    CHECK(score_NCV(c, a, nesting, ctx) == score_NCV(c, b, nesting, ctx));
  }
  SUBCASE("nested candidates are discounted by their containers") {
    auto inner = TermCandidate::from_phrase("tree analysis");
    auto outer = TermCandidate::from_phrase("fault tree analysis");
    std::map<std::string, TermStats> stats;
    stats["tree analysis"] = stats_with(12, 0);
    stats["fault tree analysis"] = stats_with(8, 0);
    auto nesting = build_nesting({inner, outer}, stats);
    REQUIRE(nesting.containers.count("tree analysis") == 1);
    CHECK(nesting.containers.at("tree analysis") == std::vector<long long>{8});
    ContextStats ctx;
    ctx.candidate_count = 2;
    double expected = 0.8 * std::log2(3.0) * (12.0 - 8.0);
    CHECK(score_NCV(inner, stats.at("tree analysis"), nesting, ctx) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("monotonicity properties over random stats") {
  std::mt19937_64 rng(99);
  WordStats words;
  auto c = TermCandidate::from_phrase("term");
  for (int trial = 0; trial < 1000; ++trial) {
    long long f_d = static_cast<long long>(rng() % 500);
    long long f_dbar = static_cast<long long>(rng() % 500);
    long long extra = 1 + static_cast<long long>(rng() % 500);

    CHECK(score_TH(c, stats_with(f_d + 1, f_dbar), words) >
          score_TH(c, stats_with(f_d, f_dbar), words));
    CHECK(score_TH(c, stats_with(f_d, f_dbar + 1), words) <
          score_TH(c, stats_with(f_d, f_dbar), words));

    CorpusTotals totals{f_d + 1 + extra, f_dbar + 1 + extra};
    CHECK(score_OT(c, stats_with(f_d + 1, f_dbar), words, totals) >
          score_OT(c, stats_with(f_d, f_dbar), words, totals));
    CHECK(score_OT(c, stats_with(f_d, f_dbar + 1), words, totals) <
          score_OT(c, stats_with(f_d, f_dbar), words, totals));
  }
}

TEST_CASE("ranking") {
  std::map<std::string, TermStats> stats;
  stats["alpha"] = stats_with(100, 0);
  stats["beta"] = stats_with(10, 0);
  stats["gamma"] = stats_with(10, 0);
  WordStats words;
  NestingMap nesting;
  ContextStats ctx;
  ScoringInputs inputs{&stats, &words, {200, 200}, &nesting, &ctx, {}};
  std::vector<TermCandidate> candidates = {
      TermCandidate::from_phrase("gamma"),
      TermCandidate::from_phrase("alpha"),
      TermCandidate::from_phrase("beta"),
  };

  SUBCASE("sorted by score, ties lexicographic") {
    auto list = rank_terms(candidates, Measure::TH, inputs);
    REQUIRE(list.entries.size() == 3);
    CHECK(list.entries[0].candidate.normalized == "alpha");
    CHECK(list.entries[1].candidate.normalized == "beta");   // tie with gamma
    CHECK(list.entries[2].candidate.normalized == "gamma");
  }
  SUBCASE("input order does not matter") {
    auto a = rank_terms(candidates, Measure::OT, inputs);
    std::reverse(candidates.begin(), candidates.end());
    auto b = rank_terms(candidates, Measure::OT, inputs);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      CHECK(a.entries[i].candidate.normalized == b.entries[i].candidate.normalized);
    }
  }
  SUBCASE("select_top_n") {
    auto list = rank_terms(candidates, Measure::TH, inputs);
    CHECK(select_top_n(list, 2).size() == 2);
    CHECK(select_top_n(list, 300).size() == 3);
    CHECK_THROWS_AS(select_top_n(list, 0), Error);
  }
  SUBCASE("tsv round trip") {
    auto list = rank_terms(candidates, Measure::TH, inputs);
    auto parsed = parse_ranked_list_tsv(ranked_list_tsv(list), Measure::TH);
    REQUIRE(parsed.entries.size() == list.entries.size());
    for (std::size_t i = 0; i < list.entries.size(); ++i) {
      CHECK(parsed.entries[i].candidate.normalized ==
            list.entries[i].candidate.normalized);
      CHECK(parsed.entries[i].f_d == list.entries[i].f_d);
    }
  }
}
