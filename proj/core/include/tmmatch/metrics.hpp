#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "tmmatch/idf.hpp"
#include "tmmatch/ngram.hpp"
#include "tmmatch/normalize.hpp"

namespace tmmatch {

// The six fuzzy-match similarity kernels. Every score is in [0, 1].
enum class Metric { PM, WPM, ED, NGP, WNGP, MWNGP };

inline constexpr std::array<Metric, 6> kAllMetrics{Metric::PM,  Metric::WPM,  Metric::ED,
                                                   Metric::NGP, Metric::WNGP, Metric::MWNGP};

std::string_view to_string(Metric metric);
// Case-insensitive ("mwngp", "MWNGP").
Metric parse_metric(std::string_view name);
bool uses_idf(Metric metric);

// What the edit-distance score divides by: the workload token count
// (default) or its number of distinct unigrams.
enum class EdDenominator { Tokens, Distinct };
EdDenominator parse_ed_denominator(std::string_view name);
std::string_view to_string(EdDenominator d);

struct MetricConfig {
  Metric metric = Metric::MWNGP;
  std::size_t max_order = 4;  // N
  double z = 0.75;
  EdDenominator ed_denominator = EdDenominator::Tokens;

  // Throws ConfigError unless 0 <= z <= 1 and 1 <= max_order <= 64.
  void validate() const;
};

struct Score {
  double value = 0.0;
  Metric metric = Metric::PM;
  // Per-order precisions p_n / wp_n for the n-gram family; empty otherwise.
  std::vector<double> order_precisions;
};

// Unit-cost word-level Levenshtein distance transforming `a` into `b`.
template <typename T>
std::size_t word_levenshtein(std::span<const T> a, std::span<const T> b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = a[i - 1] == b[j - 1] ? diag : 1 + std::min({diag, up, row[j - 1]});
      diag = up;
    }
  }
  return row[b.size()];
}

Score pm(const Segment& m, const Segment& c);
Score wpm(const Segment& m, const Segment& c, const IdfTable& idf);
Score edit_distance_score(const Segment& m, const Segment& c, EdDenominator denominator = EdDenominator::Tokens);
// p_n (weights == nullptr) or wp_n for a single order n >= 1.
double ngram_precision_order(const Segment& m, const Segment& c, std::size_t n, double z,
                             const IdfTable* weights = nullptr);
Score ngp(const Segment& m, const Segment& c, const MetricConfig& cfg);
Score wngp(const Segment& m, const Segment& c, const MetricConfig& cfg, const IdfTable& idf);
Score mwngp(const Segment& m, const Segment& c, const MetricConfig& cfg, const IdfTable& idf);

// Dispatches on cfg.metric. `idf` is required for WPM, WNGP and MWNGP.
Score score(const Segment& m, const Segment& c, const MetricConfig& cfg, const IdfTable* idf);

// Kernel over prepared profiles. Both profiles must come from the same
// Vocabulary, hold at least cfg.max_order orders, and carry weights when the
// metric uses idf.
Score score_profiles(const Profile& m, const Profile& c, const MetricConfig& cfg);

}  // namespace tmmatch
