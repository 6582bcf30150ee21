#include "tmmatch/retrieval.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "tmmatch/csv.hpp"
#include "tmmatch/errors.hpp"

namespace tmmatch {

TmBank::TmBank(std::vector<TranslationUnit> units, IdfTable idf, std::string normalizer)
    : units_(std::move(units)), idf_(std::move(idf)), normalizer_(std::move(normalizer)) {
  for (std::size_t i = 0; i < units_.size(); ++i) units_[i].index = i;
}

IdfTable build_idf(const std::vector<TranslationUnit>& bank_units, const std::vector<Segment>& mtbt, IdfScope scope) {
  std::vector<const Tokens*> docs;
  docs.reserve(bank_units.size() + mtbt.size());
  for (const auto& u : bank_units) docs.push_back(&u.source.match_tokens);
  if (scope == IdfScope::BankAndMtbt) {
    for (const auto& s : mtbt) docs.push_back(&s.match_tokens);
  }
  return IdfTable::build(docs);
}

Matcher::Matcher(const TmBank& bank, MetricConfig cfg, RetrievalOptions options)
    : bank_(&bank), cfg_(cfg), options_(options) {
  cfg_.validate();
  if (options_.threads == 0) options_.threads = 1;
  const bool weighted = uses_idf(cfg_.metric);
  // Only the n-gram family needs orders beyond unigrams.
  const bool ngram_family =
      cfg_.metric == Metric::NGP || cfg_.metric == Metric::WNGP || cfg_.metric == Metric::MWNGP;
  const std::size_t orders = ngram_family ? cfg_.max_order : 1;

  std::vector<std::vector<TokenId>> ids(bank.size());
  for (std::size_t i = 0; i < bank.size(); ++i) {
    for (const auto& t : bank.unit(i).source.match_tokens) ids[i].push_back(vocab_.intern(t));
  }
  if (weighted) {
    idf_by_id_.resize(vocab_.size());
    for (TokenId id = 0; id < vocab_.size(); ++id) idf_by_id_[id] = bank.idf().idf(vocab_.token(id));
  }
  const IdWeight weight = [this](TokenId id) { return idf_by_id_[id]; };

  candidates_.reserve(bank.size());
  postings_.resize(vocab_.size());
  for (std::size_t i = 0; i < bank.size(); ++i) {
    candidates_.push_back(make_profile(std::move(ids[i]), orders, weighted ? &weight : nullptr));
    const NGramSet& unigrams = candidates_.back().orders[0];
    for (std::size_t g = 0; g < unigrams.size(); ++g) {
      postings_[unigrams.gram(g)[0]].push_back(static_cast<std::uint32_t>(i));
    }
  }
}

void Matcher::require_nonempty() const {
  if (bank_->empty()) throw RetrievalError("cannot retrieve from an empty TM bank");
}

Profile Matcher::query_profile(const Segment& m) const {
  const bool weighted = uses_idf(cfg_.metric);
  const std::size_t orders = candidates_.empty() ? cfg_.max_order : candidates_.front().max_order();
  // Unknown tokens get ids past the bank vocabulary; they cannot match any
  // candidate but still carry idf weight.
  std::unordered_map<std::string_view, TokenId> extra;
  std::vector<double> extra_idf;
  std::vector<TokenId> ids;
  ids.reserve(m.match_tokens.size());
  for (const auto& t : m.match_tokens) {
    if (const auto id = vocab_.find(t)) {
      ids.push_back(*id);
      continue;
    }
    const auto [it, inserted] = extra.try_emplace(t, static_cast<TokenId>(vocab_.size() + extra.size()));
    if (inserted && weighted) extra_idf.push_back(bank_->idf().idf(t));
    ids.push_back(it->second);
  }
  if (!weighted) return make_profile(std::move(ids), orders);
  const std::size_t base = vocab_.size();
  const IdWeight weight = [&](TokenId id) { return id < base ? idf_by_id_[id] : extra_idf[id - base]; };
  return make_profile(std::move(ids), orders, &weight);
}

std::vector<std::size_t> Matcher::overlapping(const Profile& query) const {
  std::vector<std::size_t> out;
  const NGramSet& unigrams = query.orders[0];
  for (std::size_t g = 0; g < unigrams.size(); ++g) {
    const TokenId id = unigrams.gram(g)[0];
    if (id >= postings_.size()) continue;
    out.insert(out.end(), postings_[id].begin(), postings_[id].end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// (score, index) of the best k candidates, ordered by score desc, index asc.
std::vector<std::pair<double, std::size_t>> Matcher::ranked(const Profile& query, std::size_t k) const {
  const auto better = [](const std::pair<double, std::size_t>& a, const std::pair<double, std::size_t>& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  };
  std::vector<std::pair<double, std::size_t>> scored;
  if (!options_.prune) {
    scored.reserve(candidates_.size());
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      scored.emplace_back(score_profiles(query, candidates_[i], cfg_).value, i);
    }
  } else {
    for (std::size_t i : overlapping(query)) {
      const double v = score_profiles(query, candidates_[i], cfg_).value;
      if (v > 0.0) scored.emplace_back(v, i);
    }
    // Everything not kept scores exactly 0; pad with the lowest indices.
    if (scored.size() < k) {
      std::vector<std::size_t> taken;
      taken.reserve(scored.size());
      for (const auto& s : scored) taken.push_back(s.second);
      std::sort(taken.begin(), taken.end());
      const std::size_t want = std::min(k, candidates_.size());
      for (std::size_t i = 0; i < candidates_.size() && scored.size() < want; ++i) {
        if (!std::binary_search(taken.begin(), taken.end(), i)) scored.emplace_back(0.0, i);
      }
    }
  }
  const std::size_t keep = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(keep), scored.end(), better);
  scored.resize(keep);
  return scored;
}

MatchResult Matcher::best_match(const Segment& m, std::size_t mtbt_index) const {
  require_nonempty();
  const Profile query = query_profile(m);
  std::size_t best = 0;
  double best_value = -1.0;
  const auto consider = [&](std::size_t i) {
    const double v = score_profiles(query, candidates_[i], cfg_).value;
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  };
  if (options_.prune) {
    for (std::size_t i : overlapping(query)) consider(i);
    // Non-overlapping candidates score 0, so a zero best resolves to index 0.
    if (!(best_value > 0.0)) best = 0;
  } else {
    for (std::size_t i = 0; i < candidates_.size(); ++i) consider(i);
  }
  return MatchResult{mtbt_index, best, score_profiles(query, candidates_[best], cfg_)};
}

std::vector<MatchResult> Matcher::top_k(const Segment& m, std::size_t k, std::size_t mtbt_index) const {
  require_nonempty();
  if (k == 0) throw ConfigError("top-k requires k >= 1");
  const Profile query = query_profile(m);
  std::vector<MatchResult> out;
  for (const auto& [value, index] : ranked(query, k)) {
    out.push_back(MatchResult{mtbt_index, index, score_profiles(query, candidates_[index], cfg_)});
  }
  return out;
}

template <typename Fn>
void Matcher::parallel_for(std::size_t count, Fn&& fn) const {
  const std::size_t workers = std::min<std::size_t>(options_.threads, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            const std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

std::vector<MatchResult> Matcher::match_all(const std::vector<Segment>& mtbt) const {
  if (!mtbt.empty()) require_nonempty();
  std::vector<MatchResult> results(mtbt.size());
  parallel_for(mtbt.size(), [&](std::size_t i) { results[i] = best_match(mtbt[i], i); });
  return results;
}

std::vector<std::vector<MatchResult>> Matcher::top_k_all(const std::vector<Segment>& mtbt, std::size_t k) const {
  if (!mtbt.empty()) require_nonempty();
  std::vector<std::vector<MatchResult>> results(mtbt.size());
  parallel_for(mtbt.size(), [&](std::size_t i) { results[i] = top_k(mtbt[i], k, i); });
  return results;
}

Score Matcher::rescore(const Segment& m, std::size_t tmb_index) const {
  if (tmb_index >= candidates_.size()) throw RetrievalError("tmb_index out of range");
  return score_profiles(query_profile(m), candidates_[tmb_index], cfg_);
}

MatchResult best_match(const Segment& m, const TmBank& bank, const MetricConfig& cfg) {
  return Matcher(bank, cfg).best_match(m);
}

std::vector<MatchResult> top_k(const Segment& m, const TmBank& bank, const MetricConfig& cfg, std::size_t k) {
  return Matcher(bank, cfg).top_k(m, k);
}

std::vector<MatchResult> match_all(const std::vector<Segment>& mtbt, const TmBank& bank, const MetricConfig& cfg,
                                   RetrievalOptions options) {
  return Matcher(bank, cfg, options).match_all(mtbt);
}

std::vector<MatchResult> threshold_filter(const std::vector<MatchResult>& results, double threshold) {
  std::vector<MatchResult> out;
  std::copy_if(results.begin(), results.end(), std::back_inserter(out),
               [threshold](const MatchResult& r) { return r.score.value >= threshold; });
  return out;
}

std::string results_csv(const std::vector<MatchResult>& results, const std::vector<Segment>& mtbt, const TmBank& bank) {
  std::string out = csv::format_row(
      {"mtbt_index", "tmb_index", "metric", "score", "mtbt_text", "tmb_source_text", "tmb_target_text"});
  for (const auto& r : results) {
    const TranslationUnit& u = bank.unit(r.tmb_index);
    out += csv::format_row({std::to_string(r.mtbt_index), std::to_string(r.tmb_index),
                            std::string(to_string(r.metric())), csv::fixed(r.score.value, 6),
                            mtbt.at(r.mtbt_index).original_text, u.source.original_text, u.target.original_text});
  }
  return out;
}

void write_results_csv(const std::filesystem::path& path, const std::vector<MatchResult>& results,
                       const std::vector<Segment>& mtbt, const TmBank& bank) {
  csv::write_file(path, results_csv(results, mtbt, bank));
}

std::vector<MatchResult> read_results_csv(const std::filesystem::path& path) {
  const std::string source = path.string();
  const csv::Table table = csv::read(path);
  const std::size_t c_mtbt = csv::column(table, "mtbt_index", source);
  const std::size_t c_tmb = csv::column(table, "tmb_index", source);
  const std::size_t c_metric = csv::column(table, "metric", source);
  const std::size_t c_score = csv::column(table, "score", source);

  const auto parse_index = [&](const std::string& text, std::size_t line) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ParseError(with_location(source, line, "bad index '" + text + "'"));
    }
    return v;
  };

  std::vector<MatchResult> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t line = table.row_lines[r];
    MatchResult m;
    m.mtbt_index = parse_index(row[c_mtbt], line);
    m.tmb_index = parse_index(row[c_tmb], line);
    try {
      m.score.metric = parse_metric(row[c_metric]);
    } catch (const ConfigError& e) {
      throw ParseError(with_location(source, line, e.what()));
    }
    const std::string& s = row[c_score];
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), m.score.value);
    if (ec != std::errc() || ptr != s.data() + s.size() || m.score.value < 0.0 || m.score.value > 1.0) {
      throw ParseError(with_location(source, line, "bad score '" + s + "'"));
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace tmmatch
