#pragma once

#include <iosfwd>
#include <string>

#include "run_config.hpp"

namespace tmmatch::cli {

struct ExecOptions {
  unsigned threads = 1;
};

// Each command validates its configuration and loads every input before
// creating the output directory, so a failing run leaves no files behind.
void cmd_sample(const RunConfig& cfg, std::ostream& log);
void cmd_match(const RunConfig& cfg, const ExecOptions& exec, std::ostream& log);
void cmd_eval_agreement(const RunConfig& cfg, std::ostream& log);
void cmd_eval_found_best(const RunConfig& cfg, std::ostream& log);
void cmd_export_scatter(const RunConfig& cfg, std::ostream& log);
// agreement + found-best + scatter in one pass.
void cmd_eval(const RunConfig& cfg, std::ostream& log);
void cmd_zsweep(const RunConfig& cfg, const ExecOptions& exec, std::ostream& log);

// Dispatches on cfg.subcommand.
void run(const RunConfig& cfg, const ExecOptions& exec, std::ostream& log);

std::string explain_normalizer(const std::string& name);

// results_<metric>.csv / scatter_<metric>.csv naming.
std::string metric_file_stem(Metric metric);

}  // namespace tmmatch::cli
