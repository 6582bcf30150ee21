#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <ostream>

#include "json.hpp"
#include "tmmatch/corpus.hpp"
#include "tmmatch/csv.hpp"
#include "tmmatch/errors.hpp"
#include "tmmatch/eval.hpp"
#include "tmmatch/retrieval.hpp"

namespace tmmatch::cli {

namespace fs = std::filesystem;

namespace {

void require_file(const std::string& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw IoError(with_location(path, 0, "no such file"));
}

fs::path prepare_out_dir(const RunConfig& cfg) {
  const fs::path dir(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError(with_location(dir.string(), 0, "cannot create directory: " + ec.message()));
  return dir;
}

void write_run_config(const fs::path& dir, const RunConfig& cfg) {
  csv::write_file(dir / "run_config.json", dump_run_config(cfg));
}

struct Workload {
  Normalizer normalizer;
  TmBank bank;
  std::vector<Segment> mtbt;
};

Workload load_workload(const RunConfig& cfg) {
  require_file(cfg.bank_src);
  require_file(cfg.bank_tgt);
  require_file(cfg.mtbt);
  Normalizer normalizer = Normalizer::by_name(cfg.normalizer);
  const RawCorpus bank_corpus = load_parallel(cfg.bank_src, cfg.bank_tgt);
  if (bank_corpus.size() == 0) throw RetrievalError(cfg.bank_src + ": TM bank is empty");
  std::vector<TranslationUnit> units = make_units(bank_corpus, normalizer);
  std::vector<Segment> mtbt;
  for (auto& line : read_lines(cfg.mtbt)) mtbt.push_back(normalizer.segment(std::move(line)));
  IdfTable idf = build_idf(units, mtbt, parse_idf_scope(cfg.idf_scope));
  return Workload{std::move(normalizer), TmBank(std::move(units), std::move(idf), cfg.normalizer), std::move(mtbt)};
}

ResultsByMetric load_results(const RunConfig& cfg) {
  ResultsByMetric out;
  for (const auto& path : cfg.results) {
    require_file(path);
    auto rows = read_results_csv(path);
    if (rows.empty()) throw ParseError(with_location(path, 0, "results file has no rows"));
    const Metric metric = rows.front().metric();
    for (const auto& r : rows) {
      if (r.metric() != metric) throw ParseError(with_location(path, 0, "results file mixes metrics"));
    }
    if (!out.emplace(metric, std::move(rows)).second) {
      throw ConfigError("more than one results file for metric " + std::string(to_string(metric)));
    }
  }
  return out;
}

std::vector<MosEntry> load_mos(const RunConfig& cfg) {
  require_file(cfg.judgments);
  return aggregate_mos(read_judgments_csv(cfg.judgments));
}

std::string explain_line(const MatchResult& r) {
  std::string line = "mtbt " + std::to_string(r.mtbt_index) + " -> tmb " + std::to_string(r.tmb_index) + " " +
                     std::string(to_string(r.metric())) + " " + csv::fixed(r.score.value, 6);
  for (std::size_t n = 0; n < r.score.order_precisions.size(); ++n) {
    line += " p" + std::to_string(n + 1) + "=" + csv::fixed(r.score.order_precisions[n], 6);
  }
  return line;
}

}  // namespace

std::string metric_file_stem(Metric metric) {
  std::string s(to_string(metric));
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string explain_normalizer(const std::string& name) {
  const Normalizer n = Normalizer::by_name(name);
  std::string out = "normalizer " + n.name() + "\n";
  const auto ids = n.stage_ids();
  for (std::size_t i = 0; i < ids.size(); ++i) out += "  " + std::to_string(i + 1) + ". " + ids[i] + "\n";
  return out;
}

void cmd_sample(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  RawCorpus corpus;
  if (!cfg.corpus_tsv.empty()) {
    require_file(cfg.corpus_tsv);
    corpus = load_tsv(cfg.corpus_tsv);
  } else {
    require_file(cfg.corpus_src);
    require_file(cfg.corpus_tgt);
    corpus = load_parallel(cfg.corpus_src, cfg.corpus_tgt);
  }
  const Normalizer normalizer = Normalizer::by_name(cfg.normalizer);
  const auto units = filter_valid(corpus, normalizer);
  const Sample sample = sample_mtbt_tmb(units, SampleSpec{cfg.mtbt_size, cfg.tmb_size, cfg.seed});

  const fs::path dir = prepare_out_dir(cfg);
  const auto side = [](const std::vector<TranslationUnit>& list, bool source) {
    std::vector<std::string> lines;
    lines.reserve(list.size());
    for (const auto& u : list) lines.push_back(source ? u.source.original_text : u.target.original_text);
    return lines;
  };
  write_lines(dir / "mtbt.src", side(sample.mtbt, true));
  write_lines(dir / "mtbt.tgt", side(sample.mtbt, false));
  write_lines(dir / "tmb.src", side(sample.tmb, true));
  write_lines(dir / "tmb.tgt", side(sample.tmb, false));

  const auto lines_of = [](const std::vector<TranslationUnit>& list) {
    std::vector<std::size_t> out;
    out.reserve(list.size());
    for (const auto& u : list) out.push_back(u.source_line);
    return out;
  };
  nlohmann::ordered_json manifest;
  manifest["sampler"] = kSamplerName;
  manifest["seed"] = cfg.seed;
  manifest["normalizer"] = cfg.normalizer;
  manifest["corpus_lines"] = corpus.size();
  manifest["valid_units"] = units.size();
  manifest["valid_token_range"] = {kMinValidTokens, kMaxValidTokens};
  manifest["mtbt_size"] = sample.mtbt.size();
  manifest["tmb_size"] = sample.tmb.size();
  manifest["mtbt_corpus_lines"] = lines_of(sample.mtbt);
  manifest["tmb_corpus_lines"] = lines_of(sample.tmb);
  csv::write_file(dir / "manifest.json", manifest.dump(2) + "\n");
  write_run_config(dir, cfg);

  log << "sampled " << sample.mtbt.size() << " MTBT + " << sample.tmb.size() << " TMB units from "
      << units.size() << " valid of " << corpus.size() << " lines into " << dir.string() << "\n";
}

void cmd_match(const RunConfig& cfg, const ExecOptions& exec, std::ostream& log) {
  cfg.validate();
  const Workload w = load_workload(cfg);
  const auto metrics = cfg.metric_list();

  std::vector<std::pair<Metric, std::vector<MatchResult>>> outputs;
  for (Metric metric : metrics) {
    const Matcher matcher(w.bank, cfg.metric_config(metric), RetrievalOptions{true, exec.threads});
    std::vector<MatchResult> results;
    if (cfg.top_k > 1) {
      for (auto& list : matcher.top_k_all(w.mtbt, cfg.top_k)) {
        std::move(list.begin(), list.end(), std::back_inserter(results));
      }
    } else {
      results = matcher.match_all(w.mtbt);
    }
    if (cfg.threshold) results = threshold_filter(results, *cfg.threshold);
    outputs.emplace_back(metric, std::move(results));
  }

  const fs::path dir = prepare_out_dir(cfg);
  w.bank.idf().write_tsv(dir / "idf.tsv");
  for (const auto& [metric, results] : outputs) {
    const fs::path path = cfg.out.empty() ? dir / ("results_" + metric_file_stem(metric) + ".csv") : fs::path(cfg.out);
    write_results_csv(path, results, w.mtbt, w.bank);
    if (cfg.explain) {
      for (const auto& r : results) log << explain_line(r) << "\n";
    }
    log << to_string(metric) << ": " << results.size() << " result row(s) -> " << path.string() << "\n";
  }
  write_run_config(dir, cfg);
}

void cmd_eval_agreement(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const auto results = load_results(cfg);
  const AgreementMatrix m = agreement_matrix(results);
  const fs::path dir = prepare_out_dir(cfg);
  csv::write_file(dir / "agreement.csv", m.to_csv());
  write_run_config(dir, cfg);
  log << "agreement over " << m.total << " MTBT segment(s) -> " << (dir / "agreement.csv").string() << "\n";
}

void cmd_eval_found_best(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const auto results = load_results(cfg);
  const auto mos = load_mos(cfg);
  const FoundBest fb = found_best_counts(results, mos);
  const fs::path dir = prepare_out_dir(cfg);
  csv::write_file(dir / "found_best.csv", fb.to_csv());
  write_run_config(dir, cfg);
  log << "found-best counts -> " << (dir / "found_best.csv").string() << "\n";
}

void cmd_export_scatter(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const auto results = load_results(cfg);
  const auto mos = load_mos(cfg);
  const auto flags = best_flags(results, mos);
  std::vector<std::pair<std::string, std::string>> files;
  for (const auto& [metric, list] : results) {
    files.emplace_back("scatter_" + metric_file_stem(metric) + ".csv",
                       scatter_csv(export_scatter(list, mos, flags.at(metric))));
  }
  const fs::path dir = prepare_out_dir(cfg);
  for (const auto& [name, body] : files) {
    csv::write_file(dir / name, body);
    log << "scatter -> " << (dir / name).string() << "\n";
  }
  write_run_config(dir, cfg);
}

void cmd_eval(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const auto results = load_results(cfg);
  const auto mos = load_mos(cfg);
  const AgreementMatrix agreement = agreement_matrix(results);
  const FoundBest fb = found_best_counts(results, mos);
  const auto flags = best_flags(results, mos);
  std::vector<std::pair<std::string, std::string>> files{{"agreement.csv", agreement.to_csv()},
                                                         {"found_best.csv", fb.to_csv()}};
  for (const auto& [metric, list] : results) {
    files.emplace_back("scatter_" + metric_file_stem(metric) + ".csv",
                       scatter_csv(export_scatter(list, mos, flags.at(metric))));
  }
  const fs::path dir = prepare_out_dir(cfg);
  for (const auto& [name, body] : files) csv::write_file(dir / name, body);
  write_run_config(dir, cfg);
  log << "evaluated " << results.size() << " metric(s) over " << agreement.total << " MTBT segment(s) -> "
      << dir.string() << "\n";
}

void cmd_zsweep(const RunConfig& cfg, const ExecOptions& exec, std::ostream& log) {
  cfg.validate();
  const Workload w = load_workload(cfg);
  const auto rows = z_sweep(w.mtbt, w.bank, cfg.metric_config(Metric::MWNGP), cfg.z_values,
                            parse_length_on(cfg.length_on), RetrievalOptions{true, exec.threads});
  const fs::path dir = prepare_out_dir(cfg);
  csv::write_file(dir / "zsweep.csv", zsweep_csv(rows));
  write_run_config(dir, cfg);
  log << "z-sweep over " << rows.size() << " Z value(s) -> " << (dir / "zsweep.csv").string() << "\n";
}

void run(const RunConfig& cfg, const ExecOptions& exec, std::ostream& log) {
  const std::string& s = cfg.subcommand;
  if (s == "sample") return cmd_sample(cfg, log);
  if (s == "match") return cmd_match(cfg, exec, log);
  if (s == "eval") return cmd_eval(cfg, log);
  if (s == "eval-agreement") return cmd_eval_agreement(cfg, log);
  if (s == "eval-found-best") return cmd_eval_found_best(cfg, log);
  if (s == "export-scatter") return cmd_export_scatter(cfg, log);
  if (s == "zsweep") return cmd_zsweep(cfg, exec, log);
  throw ConfigError("unknown subcommand '" + s + "'");
}

}  // namespace tmmatch::cli
