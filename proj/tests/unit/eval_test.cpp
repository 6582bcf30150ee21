#include <numeric>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tmmatch/errors.hpp"
#include "tmmatch/eval.hpp"

using namespace tmmatch;
using fixture::seg;

namespace {

std::vector<MatchResult> picks(Metric metric, const std::vector<std::size_t>& tmb, double score = 0.5) {
  std::vector<MatchResult> out;
  for (std::size_t i = 0; i < tmb.size(); ++i) out.push_back({i, tmb[i], Score{score, metric, {}}});
  return out;
}

std::vector<JudgmentRecord> ratings(std::size_t m, std::size_t t, std::vector<int> rs) {
  std::vector<JudgmentRecord> out;
  for (std::size_t i = 0; i < rs.size(); ++i) out.push_back({m, t, rs[i], "r" + std::to_string(i), 0});
  return out;
}

}  // namespace

TEST(Eval, MosIsMeanOfRatings) {
  auto j = ratings(0, 0, {5, 5, 5, 5, 5});
  for (auto& r : ratings(1, 0, {1, 2, 3, 4, 5})) j.push_back(r);
  for (auto& r : ratings(2, 3, {3, 4})) j.push_back(r);
  const auto mos = aggregate_mos(j);
  ASSERT_EQ(mos.size(), 3u);
  EXPECT_EQ(mos[0].mos, 5.0);
  EXPECT_EQ(mos[1].mos, 3.0);
  EXPECT_EQ(mos[2].mos, 3.5);
  EXPECT_EQ(mos[2].rating_count, 2u);
}

TEST(Eval, RatingOutOfRangeNamesRow) {
  const auto j = parse_judgments_csv("mtbt_index,tmb_index,rating,rater_id\n0,0,3,a\n0,0,6,b\n");
  try {
    aggregate_mos(j);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("row 3"), std::string::npos) << e.what();
  }
}

TEST(Eval, JudgmentsParseErrors) {
  EXPECT_THROW(parse_judgments_csv("mtbt_index,tmb_index,rating\n0,0,3\n"), ParseError);
  EXPECT_THROW(parse_judgments_csv("mtbt_index,tmb_index,rating,rater_id\n0,x,3,a\n"), ParseError);
  EXPECT_THROW(parse_judgments_csv("mtbt_index,tmb_index,rating,rater_id\n0,0,3.5,a\n"), ParseError);
}

TEST(Eval, AgreementMatrix) {
  ResultsByMetric r;
  r[Metric::PM] = picks(Metric::PM, {1, 2, 3, 4});
  r[Metric::ED] = picks(Metric::ED, {1, 2, 3, 9});
  const auto a = agreement_matrix(r);
  EXPECT_EQ(a.formatted(0, 0), "100.0");
  EXPECT_EQ(a.formatted(0, 1), "75.0");
  EXPECT_EQ(a.formatted(1, 0), "75.0");
  EXPECT_EQ(a.to_csv(), "metric,PM,ED\nPM,100.0,75.0\nED,75.0,100.0\n");
}

TEST(Eval, AgreementRequiresSameCoverage) {
  ResultsByMetric r;
  r[Metric::PM] = picks(Metric::PM, {1, 2, 3});
  r[Metric::ED] = picks(Metric::ED, {1, 2});
  EXPECT_THROW(agreement_matrix(r), AlignmentError);
  auto dup = picks(Metric::ED, {1, 2, 3});
  dup[2].mtbt_index = 1;
  r[Metric::ED] = dup;
  EXPECT_THROW(agreement_matrix(r), AlignmentError);
}

TEST(Eval, PercentRoundsHalfUp) {
  EXPECT_EQ(format_percent(1, 8), "12.5");
  EXPECT_EQ(format_percent(1, 16), "6.3");  // 6.25
  EXPECT_EQ(format_percent(1, 3), "33.3");
  EXPECT_EQ(format_percent(2, 3), "66.7");
  EXPECT_EQ(format_percent(7, 7), "100.0");
  EXPECT_EQ(format_percent(0, 7), "0.0");
}

TEST(Eval, FoundBestUniversalTie) {
  ResultsByMetric r;
  for (const Metric m : kAllMetrics) r[m] = picks(m, {4, 4});
  auto j = ratings(0, 4, {3});
  for (auto& x : ratings(1, 4, {2})) j.push_back(x);
  const auto fb = found_best_counts(r, aggregate_mos(j));
  for (const Metric m : kAllMetrics) EXPECT_EQ(fb.counts.at(m), 2u);
  EXPECT_EQ(fb.total, 2u);
}

TEST(Eval, FoundBestSingleWinner) {
  ResultsByMetric r;
  r[Metric::PM] = picks(Metric::PM, {1, 1});
  r[Metric::MWNGP] = picks(Metric::MWNGP, {2, 2});
  std::vector<JudgmentRecord> j;
  for (std::size_t m = 0; m < 2; ++m) {
    for (auto& x : ratings(m, 1, {2, 3})) j.push_back(x);
    for (auto& x : ratings(m, 2, {4, 5})) j.push_back(x);
  }
  const auto fb = found_best_counts(r, aggregate_mos(j));
  EXPECT_EQ(fb.counts.at(Metric::MWNGP), 2u);
  EXPECT_EQ(fb.counts.at(Metric::PM), 0u);
  EXPECT_EQ(fb.to_csv(), "metric,count,total\nPM,0,2\nMWNGP,2,2\n");
}

TEST(Eval, FoundBestMissingJudgmentsListsPairs) {
  ResultsByMetric r;
  r[Metric::PM] = picks(Metric::PM, {1, 7});
  try {
    found_best_counts(r, aggregate_mos(ratings(0, 1, {3})));
    FAIL();
  } catch (const CoverageError& e) {
    EXPECT_NE(std::string(e.what()).find("(1,7)"), std::string::npos) << e.what();
  }
}

TEST(Eval, ScatterFlagsAndCsv) {
  ResultsByMetric r;
  r[Metric::PM] = picks(Metric::PM, {1, 1}, 0.7);
  r[Metric::ED] = picks(Metric::ED, {2, 1}, 0.25);
  std::vector<JudgmentRecord> j = ratings(0, 1, {1, 2, 2, 1, 2});  // 1.6
  for (auto& x : ratings(0, 2, {4})) j.push_back(x);
  for (auto& x : ratings(1, 1, {3})) j.push_back(x);
  const auto mos = aggregate_mos(j);
  const auto flags = best_flags(r, mos);
  EXPECT_EQ(flags.at(Metric::PM), (std::vector<bool>{false, true}));
  EXPECT_EQ(flags.at(Metric::ED), (std::vector<bool>{true, true}));
  const auto rows = export_scatter(r[Metric::PM], mos, flags.at(Metric::PM));
  EXPECT_EQ(scatter_csv(rows),
            "mtbt_index,metric_score,mos,is_best\n0,0.700000,1.600000,false\n1,0.700000,3.000000,true\n");
}

TEST(Eval, ZSweepSingleCandidate) {
  const auto units = fixture::units_from({seg("a b c d e f")});
  const TmBank bank(units, build_idf(units, {}, IdfScope::Bank), "generic");
  const auto rows = z_sweep({seg("a b"), seg("q")}, bank, {}, {0.0, 0.5, 1.0});
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) EXPECT_EQ(row.average_length, 6.0);
  EXPECT_EQ(zsweep_csv(rows), "z,avg_length\n0.00,6.0000\n0.50,6.0000\n1.00,6.0000\n");
}

TEST(Eval, ZSweepLengthOnOriginalCountsRawTokens) {
  const auto units = fixture::units_from({Segment{"A b 100 c", {"a", "b", "c"}}});
  const TmBank bank(units, build_idf(units, {}, IdfScope::Bank), "french");
  EXPECT_EQ(z_sweep({seg("a")}, bank, {}, {0.5}, LengthOn::Match)[0].average_length, 3.0);
  EXPECT_EQ(z_sweep({seg("a")}, bank, {}, {0.5}, LengthOn::Original)[0].average_length, 4.0);
}

TEST(Eval, ZSweepNestedCandidatesFavourLongerAsZGrows) {
  // Short candidates are precise prefixes of the query; long ones contain it
  // plus padding. Higher Z penalizes short candidates' missing n-grams more.
  std::vector<Segment> sources{seg("a b"), seg("a b c d e f g h i j k l"), seg("x y z")};
  const auto units = fixture::units_from(sources);
  const std::vector<Segment> mtbt{seg("a b c d e f")};
  const TmBank bank(units, build_idf(units, mtbt, IdfScope::BankAndMtbt), "generic");
  const auto rows = z_sweep(mtbt, bank, {}, {0.0, 0.25, 0.5, 0.75, 1.0});
  EXPECT_EQ(rows.front().average_length, 2.0);
  EXPECT_EQ(rows.back().average_length, 12.0);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LE(rows[i - 1].average_length, rows[i].average_length);
}
