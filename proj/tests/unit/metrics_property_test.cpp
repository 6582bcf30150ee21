// Randomized checks of the metric kernels against the straight-from-definition
// oracle and the structural invariants of the scores.

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "tmmatch/metrics.hpp"

using namespace tmmatch;
using fixture::seg;

namespace {

struct Pair {
  oracle::Tokens m, c;
  std::vector<oracle::Tokens> docs;
};

Pair random_pair(std::mt19937_64& rng, std::size_t max_len = 10) {
  const std::size_t alphabet = 2 + rng() % 8;
  Pair p{oracle::random_tokens(rng, 0, max_len, alphabet), oracle::random_tokens(rng, 0, max_len, alphabet), {}};
  p.docs = {p.m, p.c};
  for (int i = 0; i < 4; ++i) p.docs.push_back(oracle::random_tokens(rng, 1, 6, alphabet + 2));
  return p;
}

IdfTable table_of(const std::vector<oracle::Tokens>& docs) {
  std::vector<Segment> segs;
  for (const auto& d : docs) segs.push_back(seg(d));
  return IdfTable::build(segs);
}

}  // namespace

TEST(MetricsProperty, AgreesWithOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const auto p = random_pair(rng);
    const auto idf = table_of(p.docs);
    const auto oidf = oracle::idf_over(p.docs);
    const auto m = seg(p.m), c = seg(p.c);
    const std::size_t n = 1 + rng() % 5;
    const double z = static_cast<double>(rng() % 101) / 100.0;
    EXPECT_DOUBLE_EQ(pm(m, c).value, oracle::pm(p.m, p.c));
    EXPECT_NEAR(wpm(m, c, idf).value, oracle::wpm(p.m, p.c, oidf), 1e-12);
    EXPECT_DOUBLE_EQ(edit_distance_score(m, c).value, oracle::ed(p.m, p.c));
    EXPECT_DOUBLE_EQ(edit_distance_score(m, c, EdDenominator::Distinct).value, oracle::ed(p.m, p.c, true));
    const MetricConfig cfg{Metric::NGP, n, z};
    EXPECT_NEAR(ngp(m, c, cfg).value, oracle::ngp(p.m, p.c, n, z), 1e-12);
    EXPECT_NEAR(wngp(m, c, cfg, idf).value, oracle::wngp(p.m, p.c, n, z, oidf), 1e-12);
    EXPECT_NEAR(mwngp(m, c, cfg, idf).value, oracle::mwngp(p.m, p.c, n, z, oidf), 1e-12);
  }
}

TEST(MetricsProperty, EveryScoreInUnitInterval) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = random_pair(rng, 14);
    const auto idf = table_of(p.docs);
    const double z = static_cast<double>(rng() % 5) / 4.0;
    for (const Metric metric : kAllMetrics) {
      const double v = score(seg(p.m), seg(p.c), {metric, 4, z}, &idf).value;
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
}

TEST(MetricsProperty, SelfMatchUnderSideConditions) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_pair(rng, 12);
    p.docs.push_back({"filler"});  // every token of m now has df < doc_count
    const auto idf = table_of(p.docs);
    const auto m = seg(p.m);
    EXPECT_EQ(score(m, m, {Metric::ED, 4, 0.75}, nullptr).value, p.m.empty() ? 0.0 : 1.0);
    EXPECT_EQ(score(m, m, {Metric::PM, 4, 0.75}, nullptr).value, p.m.empty() ? 0.0 : 1.0);
    EXPECT_EQ(score(m, m, {Metric::WPM, 4, 0.75}, &idf).value, p.m.empty() ? 0.0 : 1.0);
    if (p.m.size() >= 4) {
      for (const Metric metric : {Metric::NGP, Metric::WNGP, Metric::MWNGP}) {
        EXPECT_EQ(score(m, m, {metric, 4, 0.75}, &idf).value, 1.0) << to_string(metric);
      }
    }
  }
}

TEST(MetricsProperty, DisjointVocabulariesScoreZero) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = oracle::random_tokens(rng, 0, 10, 5, "p");
    const auto b = oracle::random_tokens(rng, 0, 10, 5, "q");
    const auto idf = table_of({a, b, {"r"}});
    for (const Metric metric : kAllMetrics) {
      EXPECT_EQ(score(seg(a), seg(b), {metric, 4, 0.75}, &idf).value, 0.0);
    }
  }
}

TEST(MetricsProperty, LogBaseInvariance) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_pair(rng);
    const auto idf = table_of(p.docs);
    for (const double factor : {2.0, 1.0 / std::log(10.0), 7.5}) {
      const auto scaled = idf.scaled(factor);
      for (const Metric metric : {Metric::WPM, Metric::WNGP, Metric::MWNGP}) {
        const MetricConfig cfg{metric, 4, 0.75};
        const double a = score(seg(p.m), seg(p.c), cfg, &idf).value;
        const double b = score(seg(p.m), seg(p.c), cfg, &scaled).value;
        EXPECT_LE(std::abs(a - b), 1e-12 * std::max(std::abs(a), 1e-300)) << a << " vs " << b;
      }
    }
  }
}

TEST(MetricsProperty, PrecisionIsMonotoneInZ) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_pair(rng);
    const std::size_t n = 1 + rng() % 3;
    const auto mg = oracle::grams(p.m, n), cg = oracle::grams(p.c, n);
    if (oracle::common(mg, cg).empty()) continue;
    double prev = ngram_precision_order(seg(p.m), seg(p.c), n, 0.0);
    for (int step = 1; step <= 10; ++step) {
      const double cur = ngram_precision_order(seg(p.m), seg(p.c), n, step / 10.0);
      if (cg.size() > mg.size()) EXPECT_GT(cur, prev);
      if (cg.size() < mg.size()) EXPECT_LT(cur, prev);
      if (cg.size() == mg.size()) EXPECT_EQ(cur, prev);
      prev = cur;
    }
  }
}

TEST(MetricsProperty, ZeroedOrderRemovesExactlyItsShare) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_pair(rng);
    const auto s = ngp(seg(p.m), seg(p.c), {Metric::NGP, 4, 0.75});
    double sum = 0;
    for (double v : s.order_precisions) sum += v;
    EXPECT_NEAR(s.value, sum / 4, 1e-15);
  }
}
