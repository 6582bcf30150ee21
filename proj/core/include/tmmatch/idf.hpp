#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tmmatch/normalize.hpp"

namespace tmmatch {

// Document frequencies over a frozen set of source sentences, each sentence
// being one document. idf(t) = scale * ln(doc_count / df(t)); tokens never
// seen get df = 1.
class IdfTable {
 public:
  // Throws ValidationError when `documents` is empty.
  static IdfTable build(const std::vector<const Tokens*>& documents);
  static IdfTable build(const std::vector<Segment>& segments);
  static IdfTable from_counts(std::size_t doc_count, std::unordered_map<std::string, std::size_t> df);

  std::size_t doc_count() const { return doc_count_; }
  std::size_t df(std::string_view token) const;
  double idf(std::string_view token) const;
  double scale() const { return scale_; }
  const std::unordered_map<std::string, std::size_t>& frequencies() const { return df_; }

  // Every idf multiplied by `factor` (> 0). Equivalent to a change of log base.
  IdfTable scaled(double factor) const;

  // "#doc_count<TAB>N" header, then token<TAB>df sorted by token bytes.
  void write_tsv(const std::filesystem::path& path) const;
  std::string to_tsv() const;
  static IdfTable read_tsv(const std::filesystem::path& path);

 private:
  IdfTable(std::size_t doc_count, std::unordered_map<std::string, std::size_t> df, double scale);

  std::size_t doc_count_ = 0;
  std::unordered_map<std::string, std::size_t> df_;
  double scale_ = 1.0;
};

double idf_of(const IdfTable& table, std::string_view token);

enum class IdfScope { Bank, BankAndMtbt };
IdfScope parse_idf_scope(std::string_view name);
std::string_view to_string(IdfScope scope);

}  // namespace tmmatch
