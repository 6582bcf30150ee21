#include "tmmatch/eval.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "tmmatch/csv.hpp"
#include "tmmatch/errors.hpp"
#include "tmmatch/unicode.hpp"

namespace tmmatch {

namespace {

using PairKey = std::pair<std::size_t, std::size_t>;

std::map<PairKey, double> mos_lookup(const std::vector<MosEntry>& mos) {
  std::map<PairKey, double> out;
  for (const auto& e : mos) out[{e.mtbt_index, e.tmb_index}] = e.mos;
  return out;
}

void require_coverage(const ResultsByMetric& results, const std::map<PairKey, double>& mos) {
  std::set<PairKey> missing;
  for (const auto& [metric, list] : results) {
    for (const auto& r : list) {
      if (!mos.contains({r.mtbt_index, r.tmb_index})) missing.insert({r.mtbt_index, r.tmb_index});
    }
  }
  if (missing.empty()) return;
  std::string msg = "no judgments for retrieved pair(s) (mtbt_index, tmb_index):";
  for (const auto& [m, t] : missing) msg += " (" + std::to_string(m) + "," + std::to_string(t) + ")";
  throw CoverageError(msg);
}

// mtbt_index -> tmb_index for one metric; duplicates are an alignment error.
std::map<std::size_t, std::size_t> by_mtbt(Metric metric, const std::vector<MatchResult>& list) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& r : list) {
    if (!out.emplace(r.mtbt_index, r.tmb_index).second) {
      throw AlignmentError(std::string(to_string(metric)) + " lists mtbt_index " + std::to_string(r.mtbt_index) +
                           " more than once");
    }
  }
  return out;
}

std::vector<std::map<std::size_t, std::size_t>> aligned(const ResultsByMetric& results) {
  std::vector<std::map<std::size_t, std::size_t>> maps;
  for (const auto& [metric, list] : results) maps.push_back(by_mtbt(metric, list));
  for (std::size_t i = 1; i < maps.size(); ++i) {
    const bool same = maps[i].size() == maps[0].size() &&
                      std::equal(maps[i].begin(), maps[i].end(), maps[0].begin(),
                                 [](const auto& a, const auto& b) { return a.first == b.first; });
    if (!same) {
      throw AlignmentError(std::string(to_string(std::next(results.begin(), static_cast<std::ptrdiff_t>(i))->first)) +
                           " covers a different set of MTBT segments than " +
                           std::string(to_string(results.begin()->first)));
    }
  }
  return maps;
}

// Best MOS per workload index over every metric's retrieval.
std::map<std::size_t, double> best_mos(const ResultsByMetric& results, const std::map<PairKey, double>& mos) {
  std::map<std::size_t, double> best;
  for (const auto& [metric, list] : results) {
    for (const auto& r : list) {
      const double v = mos.at({r.mtbt_index, r.tmb_index});
      auto [it, inserted] = best.emplace(r.mtbt_index, v);
      if (!inserted) it->second = std::max(it->second, v);
    }
  }
  return best;
}

std::size_t parse_size(const std::string& text, const std::string& source, std::size_t line, const char* what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(with_location(source, line, std::string("bad ") + what + " '" + text + "'"));
  }
  return v;
}

}  // namespace

std::vector<JudgmentRecord> parse_judgments_csv(std::string_view text, const std::string& source) {
  const csv::Table table = csv::parse(text, source);
  const std::size_t c_mtbt = csv::column(table, "mtbt_index", source);
  const std::size_t c_tmb = csv::column(table, "tmb_index", source);
  const std::size_t c_rating = csv::column(table, "rating", source);
  const std::size_t c_rater = csv::column(table, "rater_id", source);
  std::vector<JudgmentRecord> out;
  out.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t line = table.row_lines[r];
    JudgmentRecord j;
    j.mtbt_index = parse_size(row[c_mtbt], source, line, "mtbt_index");
    j.tmb_index = parse_size(row[c_tmb], source, line, "tmb_index");
    const std::string& rating = row[c_rating];
    const auto [ptr, ec] = std::from_chars(rating.data(), rating.data() + rating.size(), j.rating);
    if (rating.empty() || ec != std::errc() || ptr != rating.data() + rating.size()) {
      throw ParseError(with_location(source, line, "bad rating '" + rating + "'"));
    }
    j.rater_id = row[c_rater];
    j.row = line;
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<JudgmentRecord> read_judgments_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(with_location(path.string(), 0, "cannot open file"));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_judgments_csv(buf.str(), path.string());
}

std::vector<MosEntry> aggregate_mos(const std::vector<JudgmentRecord>& judgments) {
  std::map<PairKey, std::pair<long long, std::size_t>> sums;
  for (std::size_t i = 0; i < judgments.size(); ++i) {
    const auto& j = judgments[i];
    if (j.rating < 1 || j.rating > 5) {
      const std::size_t row = j.row != 0 ? j.row : i + 1;
      throw ValidationError("judgment row " + std::to_string(row) + ": rating " + std::to_string(j.rating) +
                            " outside 1..5");
    }
    auto& [sum, count] = sums[{j.mtbt_index, j.tmb_index}];
    sum += j.rating;
    ++count;
  }
  std::vector<MosEntry> out;
  out.reserve(sums.size());
  for (const auto& [key, acc] : sums) {
    out.push_back(MosEntry{key.first, key.second, static_cast<double>(acc.first) / static_cast<double>(acc.second),
                           acc.second});
  }
  return out;
}

std::string format_percent(std::size_t num, std::size_t den) {
  if (den == 0) return "0.0";
  // tenths = floor(1000 * num / den + 1/2)
  const unsigned long long tenths = (2000ULL * num + den) / (2ULL * den);
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

double AgreementMatrix::percent(std::size_t a, std::size_t b) const {
  if (total == 0) return 0.0;
  return 100.0 * static_cast<double>(agree[a][b]) / static_cast<double>(total);
}

std::string AgreementMatrix::formatted(std::size_t a, std::size_t b) const {
  if (total == 0) return a == b ? "100.0" : "0.0";
  return format_percent(agree[a][b], total);
}

std::string AgreementMatrix::to_csv() const {
  csv::Row header{"metric"};
  for (Metric m : metrics) header.emplace_back(to_string(m));
  std::string out = csv::format_row(header);
  for (std::size_t a = 0; a < metrics.size(); ++a) {
    csv::Row row{std::string(to_string(metrics[a]))};
    for (std::size_t b = 0; b < metrics.size(); ++b) row.push_back(formatted(a, b));
    out += csv::format_row(row);
  }
  return out;
}

AgreementMatrix agreement_matrix(const ResultsByMetric& results) {
  const auto maps = aligned(results);
  AgreementMatrix m;
  for (const auto& [metric, list] : results) m.metrics.push_back(metric);
  m.total = maps.empty() ? 0 : maps[0].size();
  m.agree.assign(maps.size(), std::vector<std::size_t>(maps.size(), 0));
  for (std::size_t a = 0; a < maps.size(); ++a) {
    for (std::size_t b = 0; b < maps.size(); ++b) {
      std::size_t same = 0;
      for (const auto& [mtbt, tmb] : maps[a]) same += maps[b].at(mtbt) == tmb ? 1 : 0;
      m.agree[a][b] = same;
    }
  }
  return m;
}

std::string FoundBest::to_csv() const {
  std::string out = csv::format_row({"metric", "count", "total"});
  for (const auto& [metric, count] : counts) {
    out += csv::format_row({std::string(to_string(metric)), std::to_string(count), std::to_string(total)});
  }
  return out;
}

std::map<Metric, std::vector<bool>> best_flags(const ResultsByMetric& results, const std::vector<MosEntry>& mos) {
  aligned(results);
  const auto lookup = mos_lookup(mos);
  require_coverage(results, lookup);
  const auto best = best_mos(results, lookup);
  std::map<Metric, std::vector<bool>> flags;
  for (const auto& [metric, list] : results) {
    auto& f = flags[metric];
    f.reserve(list.size());
    for (const auto& r : list) f.push_back(lookup.at({r.mtbt_index, r.tmb_index}) == best.at(r.mtbt_index));
  }
  return flags;
}

FoundBest found_best_counts(const ResultsByMetric& results, const std::vector<MosEntry>& mos) {
  const auto flags = best_flags(results, mos);
  FoundBest fb;
  fb.total = results.empty() ? 0 : results.begin()->second.size();
  for (const auto& [metric, f] : flags) {
    fb.counts[metric] = static_cast<std::size_t>(std::count(f.begin(), f.end(), true));
  }
  return fb;
}

std::vector<ScatterRow> export_scatter(const std::vector<MatchResult>& results, const std::vector<MosEntry>& mos,
                                       const std::vector<bool>& best) {
  if (best.size() != results.size()) throw AlignmentError("best flags and results differ in length");
  const auto lookup = mos_lookup(mos);
  std::vector<ScatterRow> rows;
  rows.reserve(results.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const auto it = lookup.find({r.mtbt_index, r.tmb_index});
    if (it == lookup.end()) {
      throw CoverageError("no judgments for retrieved pair (" + std::to_string(r.mtbt_index) + "," +
                          std::to_string(r.tmb_index) + ")");
    }
    rows.push_back(ScatterRow{r.mtbt_index, r.score.value, it->second, best[i]});
  }
  return rows;
}

std::string scatter_csv(const std::vector<ScatterRow>& rows) {
  std::string out = csv::format_row({"mtbt_index", "metric_score", "mos", "is_best"});
  for (const auto& r : rows) {
    out += csv::format_row({std::to_string(r.mtbt_index), csv::fixed(r.metric_score, 6), csv::fixed(r.mos, 6),
                            r.is_best ? "true" : "false"});
  }
  return out;
}

LengthOn parse_length_on(std::string_view name) {
  if (name == "match") return LengthOn::Match;
  if (name == "original") return LengthOn::Original;
  throw ConfigError("unknown --length-on '" + std::string(name) + "' (expected match|original)");
}

std::string_view to_string(LengthOn l) { return l == LengthOn::Match ? "match" : "original"; }

std::vector<ZSweepRow> z_sweep(const std::vector<Segment>& mtbt, const TmBank& bank, const MetricConfig& cfg,
                               const std::vector<double>& z_values, LengthOn length_on, RetrievalOptions options) {
  std::vector<std::size_t> lengths(bank.size());
  for (std::size_t i = 0; i < bank.size(); ++i) {
    const Segment& s = bank.unit(i).source;
    lengths[i] = length_on == LengthOn::Match ? s.match_tokens.size()
                                              : unicode::split_whitespace(s.original_text).size();
  }
  std::vector<ZSweepRow> rows;
  rows.reserve(z_values.size());
  for (double z : z_values) {
    MetricConfig run = cfg;
    run.metric = Metric::MWNGP;
    run.z = z;
    const auto results = Matcher(bank, run, options).match_all(mtbt);
    std::size_t total = 0;
    for (const auto& r : results) total += lengths[r.tmb_index];
    const double avg = results.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(results.size());
    rows.push_back(ZSweepRow{z, avg});
  }
  return rows;
}

std::string zsweep_csv(const std::vector<ZSweepRow>& rows) {
  std::string out = csv::format_row({"z", "avg_length"});
  for (const auto& r : rows) out += csv::format_row({csv::fixed(r.z, 2), csv::fixed(r.average_length, 4)});
  return out;
}

}  // namespace tmmatch
