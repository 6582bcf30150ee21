#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tmmatch/metrics.hpp"
#include "tmmatch/retrieval.hpp"

namespace tmmatch {

// One human helpfulness rating on the 1 (not helpful) .. 5 (extremely
// helpful) scale.
struct JudgmentRecord {
  std::size_t mtbt_index = 0;
  std::size_t tmb_index = 0;
  int rating = 0;
  std::string rater_id;
  std::size_t row = 0;  // 1-based source line, 0 when built in code
};

struct MosEntry {
  std::size_t mtbt_index = 0;
  std::size_t tmb_index = 0;
  double mos = 0.0;
  std::size_t rating_count = 0;
};

// Header: mtbt_index,tmb_index,rating,rater_id
std::vector<JudgmentRecord> parse_judgments_csv(std::string_view text, const std::string& source = "<judgments>");
std::vector<JudgmentRecord> read_judgments_csv(const std::filesystem::path& path);

// One entry per distinct (mtbt_index, tmb_index), sorted by that pair.
// Throws ValidationError naming the row of any rating outside 1..5.
std::vector<MosEntry> aggregate_mos(const std::vector<JudgmentRecord>& judgments);

using ResultsByMetric = std::map<Metric, std::vector<MatchResult>>;

struct AgreementMatrix {
  std::vector<Metric> metrics;
  std::vector<std::vector<std::size_t>> agree;  // agree[a][b] = #segments with the same tmb_index
  std::size_t total = 0;

  double percent(std::size_t a, std::size_t b) const;
  // One decimal, rounded half up from the exact fraction.
  std::string formatted(std::size_t a, std::size_t b) const;
  std::string to_csv() const;
};

// Throws AlignmentError when metrics cover different workload index sets or
// list an index twice.
AgreementMatrix agreement_matrix(const ResultsByMetric& results);

struct FoundBest {
  std::map<Metric, std::size_t> counts;
  std::size_t total = 0;

  std::string to_csv() const;
};

// A metric is credited for a workload segment when the MOS of its retrieved
// pair equals the best MOS among all metrics' retrievals (ties credit all).
FoundBest found_best_counts(const ResultsByMetric& results, const std::vector<MosEntry>& mos);

// Per metric, per result: true iff no other metric retrieved a higher-MOS
// segment for that workload index.
std::map<Metric, std::vector<bool>> best_flags(const ResultsByMetric& results, const std::vector<MosEntry>& mos);

struct ScatterRow {
  std::size_t mtbt_index = 0;
  double metric_score = 0.0;
  double mos = 0.0;
  bool is_best = false;
};

std::vector<ScatterRow> export_scatter(const std::vector<MatchResult>& results, const std::vector<MosEntry>& mos,
                                       const std::vector<bool>& best);
// Header: mtbt_index,metric_score,mos,is_best
std::string scatter_csv(const std::vector<ScatterRow>& rows);

enum class LengthOn { Match, Original };
LengthOn parse_length_on(std::string_view name);
std::string_view to_string(LengthOn l);

struct ZSweepRow {
  double z = 0.0;
  double average_length = 0.0;
};

// For each Z, retrieves with MWNGP (other settings from `cfg`) and averages
// the source-side token count of the retrieved candidates.
std::vector<ZSweepRow> z_sweep(const std::vector<Segment>& mtbt, const TmBank& bank, const MetricConfig& cfg,
                               const std::vector<double>& z_values, LengthOn length_on = LengthOn::Match,
                               RetrievalOptions options = {});
// Header: z,avg_length
std::string zsweep_csv(const std::vector<ZSweepRow>& rows);

// Half-up rounding of 100 * num / den to one decimal, computed exactly.
std::string format_percent(std::size_t num, std::size_t den);

}  // namespace tmmatch
