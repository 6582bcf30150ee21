#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tmmatch/eval.hpp"
#include "tmmatch/idf.hpp"
#include "tmmatch/metrics.hpp"
#include "tmmatch/normalize.hpp"

namespace tmmatch::cli {

// Everything that determines a run's outputs. Written to
// <out_dir>/run_config.json by every subcommand; `tmmatch rerun` replays it.
// Thread count is an execution detail and deliberately absent.
struct RunConfig {
  std::string subcommand;

  std::string corpus_src;
  std::string corpus_tgt;
  std::string corpus_tsv;

  std::string bank_src;
  std::string bank_tgt;
  std::string mtbt;
  std::string out;  // single results file for `match` with one metric

  std::string normalizer = "generic";
  std::vector<std::string> metrics{"mwngp"};
  std::size_t ngram_max = 4;
  double z = 0.75;
  std::string ed_denominator = "tokens";
  std::string idf_scope = "bank+mtbt";

  std::uint64_t seed = 0;
  std::size_t mtbt_size = 400;
  std::size_t tmb_size = 10000;

  std::optional<double> threshold;
  std::size_t top_k = 1;
  bool explain = false;

  std::string judgments;
  std::vector<std::string> results;

  std::vector<double> z_values{0.0, 0.25, 0.5, 0.75, 1.0};
  std::string length_on = "match";

  std::string out_dir = ".";

  // Throws ConfigError for unknown names and out-of-range values.
  void validate() const;

  // "all" expands to the six metrics in canonical order; duplicates removed.
  std::vector<Metric> metric_list() const;
  MetricConfig metric_config(Metric metric) const;
};

nlohmann::ordered_json to_json(const RunConfig& cfg);
RunConfig from_json(const nlohmann::json& j);

RunConfig load_run_config(const std::filesystem::path& path);
std::string dump_run_config(const RunConfig& cfg);

}  // namespace tmmatch::cli
