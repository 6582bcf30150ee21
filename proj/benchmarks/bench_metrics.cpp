#include <cmath>

#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "tmmatch/metrics.hpp"

using namespace tmmatch;

static void BM_ScorePair(benchmark::State& state) {
  const auto metric = kAllMetrics[static_cast<std::size_t>(state.range(0))];
  const auto segs = bench::random_segments(64, 1);
  const auto idf = IdfTable::build(segs);
  const MetricConfig cfg{metric, 4, 0.75};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(score(segs[i % 64], segs[(i + 1) % 64], cfg, &idf).value);
    ++i;
  }
  state.SetLabel(std::string(to_string(metric)));
}
BENCHMARK(BM_ScorePair)->DenseRange(0, 5);

static void BM_ScoreProfiles(benchmark::State& state) {
  const auto segs = bench::random_segments(64, 2);
  const auto idf = IdfTable::build(segs);
  Vocabulary vocab;
  std::vector<double> weights;
  std::vector<Profile> profiles;
  const IdWeight w = [&](TokenId id) { return weights[id]; };
  for (const auto& s : segs) {
    std::vector<TokenId> ids;
    for (const auto& t : s.match_tokens) {
      const auto id = vocab.intern(t);
      if (id == weights.size()) weights.push_back(idf.idf(t));
      ids.push_back(id);
    }
    profiles.push_back(make_profile(std::move(ids), 4, &w));
  }
  const MetricConfig cfg{Metric::MWNGP, 4, 0.75};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(score_profiles(profiles[i % 64], profiles[(i + 7) % 64], cfg).value);
    ++i;
  }
}
BENCHMARK(BM_ScoreProfiles);

static void BM_FrenchNormalize(benchmark::State& state) {
  const std::string text =
      "Avant d'utiliser ce médicament, consultez votre médecin ou votre pharmacien si vous avez des "
      "antécédents de maladies cardiaques ou si vous prenez 2 comprimés par jour.";
  const auto n = Normalizer::french();
  for (auto _ : state) benchmark::DoNotOptimize(n.normalize(text));
}
BENCHMARK(BM_FrenchNormalize);
