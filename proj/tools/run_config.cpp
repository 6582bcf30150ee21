#include "run_config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "tmmatch/errors.hpp"

namespace tmmatch::cli {

namespace {

const std::set<std::string> kSubcommands{"sample",          "match",          "eval", "eval-agreement",
                                         "eval-found-best", "export-scatter", "zsweep"};

}  // namespace

void RunConfig::validate() const {
  if (!kSubcommands.contains(subcommand)) throw ConfigError("unknown subcommand '" + subcommand + "'");
  parse_normalizer_kind(normalizer);
  parse_idf_scope(idf_scope);
  parse_ed_denominator(ed_denominator);
  parse_length_on(length_on);
  if (metrics.empty()) throw ConfigError("at least one --metric is required");
  for (Metric m : metric_list()) metric_config(m).validate();
  if (threshold && !(*threshold >= 0.0 && *threshold <= 1.0)) {
    throw ConfigError("--threshold must lie in [0, 1]");
  }
  if (top_k == 0) throw ConfigError("--top-k must be >= 1");
  for (double zv : z_values) {
    if (!(zv >= 0.0 && zv <= 1.0)) throw ConfigError("--z-values entries must lie in [0, 1]");
  }
  if (out_dir.empty()) throw ConfigError("--out-dir must not be empty");

  const auto need = [&](const std::string& value, const char* flag) {
    if (value.empty()) throw ConfigError(subcommand + " requires " + flag);
  };
  if (subcommand == "sample") {
    if (corpus_tsv.empty()) {
      need(corpus_src, "--corpus-src (or --corpus-tsv)");
      need(corpus_tgt, "--corpus-tgt");
    } else if (!corpus_src.empty() || !corpus_tgt.empty()) {
      throw ConfigError("--corpus-tsv cannot be combined with --corpus-src/--corpus-tgt");
    }
    if (mtbt_size == 0 || tmb_size == 0) throw ConfigError("--mtbt-size and --tmb-size must be positive");
  } else if (subcommand == "match" || subcommand == "zsweep") {
    need(bank_src, "--bank-src");
    need(bank_tgt, "--bank-tgt");
    need(mtbt, "--mtbt");
    if (subcommand == "zsweep" && z_values.empty()) throw ConfigError("zsweep requires --z-values");
    if (!out.empty() && metric_list().size() != 1) throw ConfigError("--out requires exactly one metric");
  } else {
    if (results.empty()) throw ConfigError(subcommand + " requires at least one --results file");
    if (subcommand != "eval-agreement") need(judgments, "--judgments");
  }
}

std::vector<Metric> RunConfig::metric_list() const {
  std::vector<Metric> out;
  for (const auto& name : metrics) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "all") {
      out.insert(out.end(), kAllMetrics.begin(), kAllMetrics.end());
    } else {
      out.push_back(parse_metric(name));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MetricConfig RunConfig::metric_config(Metric metric) const {
  MetricConfig c;
  c.metric = metric;
  c.max_order = ngram_max;
  c.z = z;
  c.ed_denominator = parse_ed_denominator(ed_denominator);
  return c;
}

nlohmann::ordered_json to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["subcommand"] = c.subcommand;
  j["corpus_src"] = c.corpus_src;
  j["corpus_tgt"] = c.corpus_tgt;
  j["corpus_tsv"] = c.corpus_tsv;
  j["bank_src"] = c.bank_src;
  j["bank_tgt"] = c.bank_tgt;
  j["mtbt"] = c.mtbt;
  j["out"] = c.out;
  j["normalizer"] = c.normalizer;
  j["metrics"] = c.metrics;
  j["ngram_max"] = c.ngram_max;
  j["z"] = c.z;
  j["ed_denominator"] = c.ed_denominator;
  j["idf_scope"] = c.idf_scope;
  j["seed"] = c.seed;
  j["mtbt_size"] = c.mtbt_size;
  j["tmb_size"] = c.tmb_size;
  j["threshold"] = c.threshold ? nlohmann::ordered_json(*c.threshold) : nlohmann::ordered_json(nullptr);
  j["top_k"] = c.top_k;
  j["explain"] = c.explain;
  j["judgments"] = c.judgments;
  j["results"] = c.results;
  j["z_values"] = c.z_values;
  j["length_on"] = c.length_on;
  j["out_dir"] = c.out_dir;
  return j;
}

RunConfig from_json(const nlohmann::json& j) {
  RunConfig c;
  try {
    const auto get = [&](const char* key, auto& field) {
      if (j.contains(key)) j.at(key).get_to(field);
    };
    get("subcommand", c.subcommand);
    get("corpus_src", c.corpus_src);
    get("corpus_tgt", c.corpus_tgt);
    get("corpus_tsv", c.corpus_tsv);
    get("bank_src", c.bank_src);
    get("bank_tgt", c.bank_tgt);
    get("mtbt", c.mtbt);
    get("out", c.out);
    get("normalizer", c.normalizer);
    get("metrics", c.metrics);
    get("ngram_max", c.ngram_max);
    get("z", c.z);
    get("ed_denominator", c.ed_denominator);
    get("idf_scope", c.idf_scope);
    get("seed", c.seed);
    get("mtbt_size", c.mtbt_size);
    get("tmb_size", c.tmb_size);
    if (j.contains("threshold") && !j.at("threshold").is_null()) c.threshold = j.at("threshold").get<double>();
    get("top_k", c.top_k);
    get("explain", c.explain);
    get("judgments", c.judgments);
    get("results", c.results);
    get("z_values", c.z_values);
    get("length_on", c.length_on);
    get("out_dir", c.out_dir);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed run config: ") + e.what());
  }
  return c;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(with_location(path.string(), 0, "cannot open file"));
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(with_location(path.string(), 0, e.what()));
  }
  return from_json(j);
}

std::string dump_run_config(const RunConfig& cfg) { return to_json(cfg).dump(2) + "\n"; }

}  // namespace tmmatch::cli
