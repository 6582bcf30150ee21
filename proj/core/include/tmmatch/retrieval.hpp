#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "tmmatch/corpus.hpp"
#include "tmmatch/idf.hpp"
#include "tmmatch/metrics.hpp"
#include "tmmatch/ngram.hpp"

namespace tmmatch {

// Immutable translation-memory bank. Unit indices are 0..size()-1 in order.
class TmBank {
 public:
  TmBank(std::vector<TranslationUnit> units, IdfTable idf, std::string normalizer);

  const std::vector<TranslationUnit>& units() const { return units_; }
  const TranslationUnit& unit(std::size_t i) const { return units_.at(i); }
  std::size_t size() const { return units_.size(); }
  bool empty() const { return units_.empty(); }
  const IdfTable& idf() const { return idf_; }
  const std::string& normalizer() const { return normalizer_; }

 private:
  std::vector<TranslationUnit> units_;
  IdfTable idf_;
  std::string normalizer_;
};

// Builds the IDF table for `bank_units`, optionally adding workload segments
// to the document set.
IdfTable build_idf(const std::vector<TranslationUnit>& bank_units, const std::vector<Segment>& mtbt, IdfScope scope);

struct MatchResult {
  std::size_t mtbt_index = 0;
  std::size_t tmb_index = 0;
  Score score;

  Metric metric() const { return score.metric; }
};

struct RetrievalOptions {
  // Skip candidates sharing no unigram with the workload segment. Every
  // metric scores such candidates exactly 0, so results are unchanged.
  bool prune = true;
  unsigned threads = 1;
};

// One retrieval configuration frozen against one bank: candidate profiles,
// per-token idf and an inverted unigram index are precomputed here. The bank
// must outlive the matcher. Const member functions are thread-safe.
class Matcher {
 public:
  Matcher(const TmBank& bank, MetricConfig cfg, RetrievalOptions options = {});

  const MetricConfig& config() const { return cfg_; }
  const RetrievalOptions& options() const { return options_; }
  const TmBank& bank() const { return *bank_; }

  // Highest score wins; exact score ties go to the lowest bank index.
  MatchResult best_match(const Segment& m, std::size_t mtbt_index = 0) const;
  // Ordered by (score desc, tmb_index asc), at most k entries.
  std::vector<MatchResult> top_k(const Segment& m, std::size_t k, std::size_t mtbt_index = 0) const;
  // Result i belongs to mtbt[i] and carries mtbt_index i.
  std::vector<MatchResult> match_all(const std::vector<Segment>& mtbt) const;
  std::vector<std::vector<MatchResult>> top_k_all(const std::vector<Segment>& mtbt, std::size_t k) const;

  Score rescore(const Segment& m, std::size_t tmb_index) const;

 private:
  Profile query_profile(const Segment& m) const;
  std::vector<std::size_t> overlapping(const Profile& query) const;
  std::vector<std::pair<double, std::size_t>> ranked(const Profile& query, std::size_t k) const;
  void require_nonempty() const;

  template <typename Fn>
  void parallel_for(std::size_t count, Fn&& fn) const;

  const TmBank* bank_;
  MetricConfig cfg_;
  RetrievalOptions options_;
  Vocabulary vocab_;
  std::vector<double> idf_by_id_;
  std::vector<Profile> candidates_;
  std::vector<std::vector<std::uint32_t>> postings_;  // token id -> ascending candidate indices
};

MatchResult best_match(const Segment& m, const TmBank& bank, const MetricConfig& cfg);
std::vector<MatchResult> top_k(const Segment& m, const TmBank& bank, const MetricConfig& cfg, std::size_t k);
std::vector<MatchResult> match_all(const std::vector<Segment>& mtbt, const TmBank& bank, const MetricConfig& cfg,
                                   RetrievalOptions options = {});

// Keeps results whose score is >= threshold.
std::vector<MatchResult> threshold_filter(const std::vector<MatchResult>& results, double threshold);

// results CSV: mtbt_index,tmb_index,metric,score,mtbt_text,tmb_source_text,tmb_target_text
// Scores are printed with 6 decimals; texts are the original strings.
std::string results_csv(const std::vector<MatchResult>& results, const std::vector<Segment>& mtbt, const TmBank& bank);
void write_results_csv(const std::filesystem::path& path, const std::vector<MatchResult>& results,
                       const std::vector<Segment>& mtbt, const TmBank& bank);
// Reads a results CSV back (score breakdowns are not stored).
std::vector<MatchResult> read_results_csv(const std::filesystem::path& path);

}  // namespace tmmatch
