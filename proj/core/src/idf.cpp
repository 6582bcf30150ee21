#include "tmmatch/idf.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "tmmatch/corpus.hpp"
#include "tmmatch/errors.hpp"

namespace tmmatch {

IdfTable::IdfTable(std::size_t doc_count, std::unordered_map<std::string, std::size_t> df, double scale)
    : doc_count_(doc_count), df_(std::move(df)), scale_(scale) {}

IdfTable IdfTable::build(const std::vector<const Tokens*>& documents) {
  if (documents.empty()) throw ValidationError("cannot build IDF table from zero documents");
  std::unordered_map<std::string, std::size_t> df;
  std::unordered_set<std::string_view> seen;
  for (const Tokens* doc : documents) {
    seen.clear();
    for (const auto& t : *doc) {
      if (seen.insert(t).second) ++df[t];
    }
  }
  return IdfTable(documents.size(), std::move(df), 1.0);
}

IdfTable IdfTable::build(const std::vector<Segment>& segments) {
  std::vector<const Tokens*> docs;
  docs.reserve(segments.size());
  for (const auto& s : segments) docs.push_back(&s.match_tokens);
  return build(docs);
}

IdfTable IdfTable::from_counts(std::size_t doc_count, std::unordered_map<std::string, std::size_t> df) {
  if (doc_count == 0) throw ValidationError("doc_count must be positive");
  for (const auto& [token, count] : df) {
    if (count == 0 || count > doc_count) {
      throw ValidationError("df('" + token + "') = " + std::to_string(count) + " outside 1.." +
                            std::to_string(doc_count));
    }
  }
  return IdfTable(doc_count, std::move(df), 1.0);
}

std::size_t IdfTable::df(std::string_view token) const {
  const auto it = df_.find(std::string(token));
  return it == df_.end() ? 0 : it->second;
}

double IdfTable::idf(std::string_view token) const {
  const std::size_t d = std::max<std::size_t>(df(token), 1);
  return scale_ * std::log(static_cast<double>(doc_count_) / static_cast<double>(d));
}

IdfTable IdfTable::scaled(double factor) const {
  if (!(factor > 0.0)) throw ValidationError("idf scale factor must be positive");
  return IdfTable(doc_count_, df_, scale_ * factor);
}

std::string IdfTable::to_tsv() const {
  std::vector<std::pair<std::string_view, std::size_t>> rows(df_.begin(), df_.end());
  std::sort(rows.begin(), rows.end());
  std::string out = "#doc_count\t" + std::to_string(doc_count_) + "\n";
  for (const auto& [token, count] : rows) {
    out += token;
    out += '\t';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

void IdfTable::write_tsv(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(with_location(path.string(), 0, "cannot open file for writing"));
  out << to_tsv();
}

IdfTable IdfTable::read_tsv(const std::filesystem::path& path) {
  const auto lines = read_lines(path);
  const auto parse_count = [&](std::string_view text, std::size_t line) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ParseError(with_location(path.string(), line, "bad count '" + std::string(text) + "'"));
    }
    return value;
  };
  if (lines.empty() || !lines[0].starts_with("#doc_count\t")) {
    throw ParseError(with_location(path.string(), 1, "missing #doc_count header"));
  }
  const std::size_t doc_count = parse_count(std::string_view(lines[0]).substr(11), 1);
  std::unordered_map<std::string, std::size_t> df;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t tab = lines[i].rfind('\t');
    if (tab == std::string::npos) throw ParseError(with_location(path.string(), i + 1, "expected token<TAB>df"));
    df[lines[i].substr(0, tab)] = parse_count(std::string_view(lines[i]).substr(tab + 1), i + 1);
  }
  return from_counts(doc_count, std::move(df));
}

double idf_of(const IdfTable& table, std::string_view token) { return table.idf(token); }

IdfScope parse_idf_scope(std::string_view name) {
  if (name == "bank") return IdfScope::Bank;
  if (name == "bank+mtbt") return IdfScope::BankAndMtbt;
  throw ConfigError("unknown idf scope '" + std::string(name) + "' (expected bank|bank+mtbt)");
}

std::string_view to_string(IdfScope scope) {
  return scope == IdfScope::Bank ? "bank" : "bank+mtbt";
}

}  // namespace tmmatch
