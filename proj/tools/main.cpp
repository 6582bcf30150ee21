#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "commands.hpp"
#include "run_config.hpp"
#include "tmmatch/errors.hpp"

namespace {

using tmmatch::cli::RunConfig;

void add_normalizer(CLI::App* app, RunConfig& cfg, bool& explain_normalizer) {
  app->add_option("--normalizer", cfg.normalizer, "french | chinese | generic")
      ->check(CLI::IsMember({"french", "chinese", "generic"}))
      ->capture_default_str();
  app->add_flag("--explain-normalizer", explain_normalizer, "Print the normalizer's stage list and exit");
}

void add_metric_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--metric", cfg.metrics, "pm|wpm|ed|ngp|wngp|mwngp|all (repeatable or comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  app->add_option("--ngram-max", cfg.ngram_max, "Maximum n-gram order N")->capture_default_str();
  app->add_option("--z", cfg.z, "Length normalization weight Z in [0,1]")->capture_default_str();
  app->add_option("--ed-denominator", cfg.ed_denominator, "tokens | distinct")
      ->check(CLI::IsMember({"tokens", "distinct"}))
      ->capture_default_str();
  app->add_option("--idf-scope", cfg.idf_scope, "bank | bank+mtbt")
      ->check(CLI::IsMember({"bank", "bank+mtbt"}))
      ->capture_default_str();
}

void add_bank_options(CLI::App* app, RunConfig& cfg, std::vector<std::string>& bank_pair) {
  app->add_option("--bank-src", cfg.bank_src, "TM bank source side, one segment per line");
  app->add_option("--bank-tgt", cfg.bank_tgt, "TM bank target side, aligned with --bank-src");
  app->add_option("--bank", bank_pair, "Shorthand for --bank-src <src> --bank-tgt <tgt>")->expected(2);
  app->add_option("--mtbt", cfg.mtbt, "Workload segments, one per line");
}

void add_eval_options(CLI::App* app, RunConfig& cfg, bool judgments) {
  app->add_option("--results", cfg.results, "results CSV produced by `match` (repeatable)")->required();
  if (judgments) app->add_option("--judgments", cfg.judgments, "CSV: mtbt_index,tmb_index,rating,rater_id")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translation-memory fuzzy matching and evaluation"};
  app.require_subcommand(0, 1);

  RunConfig cfg;
  bool explain_normalizer = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::string> bank_pair;
  std::string rerun_path;

  app.add_option("--threads", threads, "Worker threads for retrieval (outputs do not depend on it)")
      ->check(CLI::PositiveNumber);
  std::string top_normalizer = "generic";
  app.add_option("--normalizer", top_normalizer, "Normalizer for --explain-normalizer")
      ->check(CLI::IsMember({"french", "chinese", "generic"}));
  bool top_explain = false;
  app.add_flag("--explain-normalizer", top_explain, "Print the normalizer's stage list and exit");

  auto* sample = app.add_subcommand("sample", "Filter a parallel corpus and sample disjoint MTBT/TMB sets");
  sample->add_option("--corpus-src", cfg.corpus_src, "Source side of the parallel corpus");
  sample->add_option("--corpus-tgt", cfg.corpus_tgt, "Target side of the parallel corpus");
  sample->add_option("--corpus-tsv", cfg.corpus_tsv, "Single source<TAB>target file instead of two files");
  sample->add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();
  sample->add_option("--mtbt-size", cfg.mtbt_size, "Workload segments to draw")->capture_default_str();
  sample->add_option("--tmb-size", cfg.tmb_size, "TM bank units to draw")->capture_default_str();
  sample->add_option("--out-dir", cfg.out_dir)->capture_default_str();
  add_normalizer(sample, cfg, explain_normalizer);

  auto* match = app.add_subcommand("match", "Retrieve the best TM bank match for every workload segment");
  add_bank_options(match, cfg, bank_pair);
  add_metric_options(match, cfg);
  add_normalizer(match, cfg, explain_normalizer);
  match->add_option("--top-k", cfg.top_k, "Candidates per workload segment")->capture_default_str();
  match->add_option("--threshold", cfg.threshold, "Drop results scoring below this value");
  match->add_option("--out", cfg.out, "Results file (single metric only)");
  match->add_option("--out-dir", cfg.out_dir)->capture_default_str();
  match->add_flag("--explain", cfg.explain, "Print per-order precisions for every result");

  auto* zsweep = app.add_subcommand("zsweep", "Average retrieved length under MWNGP for several Z values");
  add_bank_options(zsweep, cfg, bank_pair);
  add_normalizer(zsweep, cfg, explain_normalizer);
  zsweep->add_option("--ngram-max", cfg.ngram_max)->capture_default_str();
  zsweep->add_option("--idf-scope", cfg.idf_scope)
      ->check(CLI::IsMember({"bank", "bank+mtbt"}))
      ->capture_default_str();
  zsweep->add_option("--z-values", cfg.z_values, "Comma separated Z grid")->delimiter(',');
  zsweep->add_option("--length-on", cfg.length_on, "match | original")
      ->check(CLI::IsMember({"match", "original"}))
      ->capture_default_str();
  zsweep->add_option("--out-dir", cfg.out_dir)->capture_default_str();

  auto* eval = app.add_subcommand("eval", "Agreement matrix, found-best counts and scatter data");
  add_eval_options(eval, cfg, true);
  eval->add_option("--out-dir", cfg.out_dir)->capture_default_str();

  auto* agreement = app.add_subcommand("eval-agreement", "Pairwise metric agreement matrix");
  add_eval_options(agreement, cfg, false);
  agreement->add_option("--out-dir", cfg.out_dir)->capture_default_str();

  auto* found_best = app.add_subcommand("eval-found-best", "How often each metric retrieved the best-judged segment");
  add_eval_options(found_best, cfg, true);
  found_best->add_option("--out-dir", cfg.out_dir)->capture_default_str();

  auto* scatter = app.add_subcommand("export-scatter", "Plot-ready metric score vs MOS rows");
  add_eval_options(scatter, cfg, true);
  scatter->add_option("--out-dir", cfg.out_dir)->capture_default_str();

  auto* rerun = app.add_subcommand("rerun", "Replay a run_config.json written by an earlier run");
  rerun->add_option("config", rerun_path, "Path to run_config.json")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (top_explain || explain_normalizer) {
      std::cout << tmmatch::cli::explain_normalizer(top_explain ? top_normalizer : cfg.normalizer);
      return 0;
    }
    const tmmatch::cli::ExecOptions exec{threads};
    if (*rerun) {
      tmmatch::cli::run(tmmatch::cli::load_run_config(rerun_path), exec, std::cout);
      return 0;
    }
    const auto subs = app.get_subcommands();
    if (subs.empty()) {
      std::cout << app.help();
      return 2;
    }
    cfg.subcommand = subs.front()->get_name();
    if (!bank_pair.empty()) {
      cfg.bank_src = bank_pair[0];
      cfg.bank_tgt = bank_pair[1];
    }
    tmmatch::cli::run(cfg, exec, std::cout);
  } catch (const tmmatch::ConfigError& e) {
    std::cerr << "tmmatch: " << e.what() << "\n";
    return 2;
  } catch (const tmmatch::Error& e) {
    std::cerr << "tmmatch: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
