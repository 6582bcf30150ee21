#include "tmmatch/ngram.hpp"

#include <algorithm>
#include <numeric>

namespace tmmatch {

TokenId Vocabulary::intern(std::string_view token) {
  const auto [it, inserted] = ids_.try_emplace(std::string(token), static_cast<TokenId>(tokens_.size()));
  if (inserted) tokens_.emplace_back(token);
  return it->second;
}

std::optional<TokenId> Vocabulary::find(std::string_view token) const {
  const auto it = ids_.find(std::string(token));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

NGramSet::NGramSet(std::span<const TokenId> tokens, std::size_t order) : order_(order) {
  if (order == 0 || tokens.size() < order) return;
  const std::size_t count = tokens.size() - order + 1;
  std::vector<std::size_t> starts(count);
  std::iota(starts.begin(), starts.end(), std::size_t{0});
  const auto at = [&](std::size_t s) { return tokens.subspan(s, order); };
  std::sort(starts.begin(), starts.end(), [&](std::size_t a, std::size_t b) {
    const auto ga = at(a), gb = at(b);
    return std::lexicographical_compare(ga.begin(), ga.end(), gb.begin(), gb.end());
  });
  starts.erase(std::unique(starts.begin(), starts.end(),
                           [&](std::size_t a, std::size_t b) {
                             const auto ga = at(a), gb = at(b);
                             return std::equal(ga.begin(), ga.end(), gb.begin());
                           }),
               starts.end());
  flat_.reserve(starts.size() * order);
  for (std::size_t s : starts) {
    const auto g = at(s);
    flat_.insert(flat_.end(), g.begin(), g.end());
  }
}

Profile make_profile(std::vector<TokenId> tokens, std::size_t max_order, const IdWeight* weight) {
  Profile p;
  p.tokens = std::move(tokens);
  const std::size_t orders = std::max<std::size_t>(max_order, 1);
  p.orders.reserve(orders);
  for (std::size_t n = 1; n <= orders; ++n) p.orders.emplace_back(p.tokens, n);

  if (weight != nullptr) {
    p.weights.resize(orders);
    p.mass.resize(orders, 0.0);
    for (std::size_t n = 0; n < orders; ++n) {
      const NGramSet& set = p.orders[n];
      auto& w = p.weights[n];
      w.reserve(set.size());
      double mass = 0.0;
      for (std::size_t i = 0; i < set.size(); ++i) {
        double gram_weight = 0.0;
        for (TokenId id : set.gram(i)) gram_weight += (*weight)(id);
        w.push_back(gram_weight);
        mass += gram_weight;
      }
      p.mass[n] = mass;
    }
  }
  return p;
}

}  // namespace tmmatch
