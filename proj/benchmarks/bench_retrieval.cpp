#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "tmmatch/retrieval.hpp"

using namespace tmmatch;

namespace {

TmBank make_bank(std::size_t size) {
  const auto segs = bench::random_segments(size, 3);
  std::vector<TranslationUnit> units;
  for (std::size_t i = 0; i < segs.size(); ++i) units.push_back({i, i, segs[i], Segment{}});
  return TmBank(units, IdfTable::build(segs), "generic");
}

}  // namespace

// Unigram-overlap pruning against the plain linear scan.
static void BM_MatchAll(benchmark::State& state) {
  static const TmBank bank = make_bank(10000);
  const auto mtbt = bench::random_segments(40, 4);
  const RetrievalOptions options{state.range(0) != 0, 1};
  const Matcher matcher(bank, {Metric::MWNGP, 4, 0.75}, options);
  for (auto _ : state) benchmark::DoNotOptimize(matcher.match_all(mtbt));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(mtbt.size()));
  state.SetLabel(options.prune ? "pruned" : "exhaustive");
}
BENCHMARK(BM_MatchAll)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_BuildMatcher(benchmark::State& state) {
  static const TmBank bank = make_bank(10000);
  for (auto _ : state) {
    const Matcher matcher(bank, {Metric::MWNGP, 4, 0.75});
    benchmark::DoNotOptimize(&matcher);
  }
}
BENCHMARK(BM_BuildMatcher)->Unit(benchmark::kMillisecond);
