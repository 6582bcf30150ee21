#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tmmatch {

using TokenId = std::uint32_t;

// Dense token interning. Ids are assigned in first-seen order.
class Vocabulary {
 public:
  TokenId intern(std::string_view token);
  std::optional<TokenId> find(std::string_view token) const;
  const std::string& token(TokenId id) const { return tokens_[id]; }
  std::size_t size() const { return tokens_.size(); }

 private:
  std::unordered_map<std::string, TokenId> ids_;
  std::vector<std::string> tokens_;
};

// The distinct contiguous n-grams of one order, sorted lexicographically by
// id and stored flat with stride `order`.
class NGramSet {
 public:
  NGramSet() = default;
  NGramSet(std::span<const TokenId> tokens, std::size_t order);

  std::size_t order() const { return order_; }
  std::size_t size() const { return order_ == 0 ? 0 : flat_.size() / order_; }
  bool empty() const { return flat_.empty(); }
  std::span<const TokenId> gram(std::size_t i) const {
    return std::span<const TokenId>(flat_).subspan(i * order_, order_);
  }

 private:
  std::size_t order_ = 0;
  std::vector<TokenId> flat_;
};

using IdWeight = std::function<double(TokenId)>;

// Everything the metric kernels need from one segment. Per-gram weights are
// present only when the profile was built with an IdWeight.
struct Profile {
  std::vector<TokenId> tokens;
  std::vector<NGramSet> orders;              // orders[n - 1]
  std::vector<std::vector<double>> weights;  // weights[n - 1][gram], sum of unigram idf
  std::vector<double> mass;                  // mass[n - 1] = sum of weights[n - 1]

  bool weighted() const { return !mass.empty(); }
  std::size_t max_order() const { return orders.size(); }
};

Profile make_profile(std::vector<TokenId> tokens, std::size_t max_order, const IdWeight* weight = nullptr);

}  // namespace tmmatch
