#include "tmmatch/metrics.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "tmmatch/errors.hpp"

namespace tmmatch {

namespace {

int compare_grams(std::span<const TokenId> a, std::span<const TokenId> b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  }
  return 0;
}

struct Overlap {
  std::size_t count = 0;
  double weight = 0.0;
};

// Merge-intersection of two sorted gram sets. Weights are taken from `m`, in
// m's order, so a full overlap reproduces m's mass bit for bit.
Overlap intersect(const Profile& m, const Profile& c, std::size_t order_index, bool weighted) {
  const NGramSet& a = m.orders[order_index];
  const NGramSet& b = c.orders[order_index];
  Overlap out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const auto ga = a.gram(i), gb = b.gram(j);
    const int cmp = compare_grams(a.gram(i), b.gram(j));
    if (cmp < 0) {
      ++i;
    } else if (cmp > 0) {
      ++j;
    } else {
      ++out.count;
      if (weighted) out.weight += m.weights[order_index][i];
      ++i;
      ++j;
    }
  }
  return out;
}

double ratio(double num, double den) {
  if (!(den > 0.0)) return 0.0;
  return std::clamp(num / den, 0.0, 1.0);
}

// Z * |M| + (1 - Z) * |C|, written so that |M| == |C| yields exactly |C|.
double z_mix(double m_mass, double c_mass, double z) { return c_mass + z * (m_mass - c_mass); }

double order_precision(const Profile& m, const Profile& c, std::size_t n, double z, bool weighted) {
  const std::size_t k = n - 1;
  const Overlap o = intersect(m, c, k, weighted);
  if (weighted) return ratio(o.weight, z_mix(m.mass[k], c.mass[k], z));
  return ratio(static_cast<double>(o.count),
               z_mix(static_cast<double>(m.orders[k].size()), static_cast<double>(c.orders[k].size()), z));
}

std::vector<double> order_precisions(const Profile& m, const Profile& c, const MetricConfig& cfg, bool weighted) {
  std::vector<double> p(cfg.max_order);
  for (std::size_t n = 1; n <= cfg.max_order; ++n) p[n - 1] = order_precision(m, c, n, cfg.z, weighted);
  return p;
}

struct Pair {
  Profile m;
  Profile c;
};

Pair profile_pair(const Segment& m, const Segment& c, std::size_t max_order, const IdfTable* idf) {
  Vocabulary vocab;
  const auto ids = [&](const Tokens& tokens) {
    std::vector<TokenId> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(vocab.intern(t));
    return out;
  };
  auto m_ids = ids(m.match_tokens);
  auto c_ids = ids(c.match_tokens);
  if (idf == nullptr) return {make_profile(std::move(m_ids), max_order), make_profile(std::move(c_ids), max_order)};
  std::vector<double> by_id(vocab.size());
  for (TokenId id = 0; id < vocab.size(); ++id) by_id[id] = idf->idf(vocab.token(id));
  const IdWeight weight = [&by_id](TokenId id) { return by_id[id]; };
  return {make_profile(std::move(m_ids), max_order, &weight), make_profile(std::move(c_ids), max_order, &weight)};
}

const IdfTable& require_idf(const IdfTable* idf, Metric metric) {
  if (idf == nullptr) throw ConfigError(std::string(to_string(metric)) + " requires an IDF table");
  return *idf;
}

}  // namespace

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::PM: return "PM";
    case Metric::WPM: return "WPM";
    case Metric::ED: return "ED";
    case Metric::NGP: return "NGP";
    case Metric::WNGP: return "WNGP";
    case Metric::MWNGP: return "MWNGP";
  }
  return "?";
}

Metric parse_metric(std::string_view name) {
  std::string upper(name);
  for (char& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (Metric m : kAllMetrics) {
    if (to_string(m) == upper) return m;
  }
  throw ConfigError("unknown metric '" + std::string(name) + "' (expected pm|wpm|ed|ngp|wngp|mwngp)");
}

bool uses_idf(Metric metric) {
  return metric == Metric::WPM || metric == Metric::WNGP || metric == Metric::MWNGP;
}

EdDenominator parse_ed_denominator(std::string_view name) {
  if (name == "tokens") return EdDenominator::Tokens;
  if (name == "distinct") return EdDenominator::Distinct;
  throw ConfigError("unknown ed denominator '" + std::string(name) + "' (expected tokens|distinct)");
}

std::string_view to_string(EdDenominator d) { return d == EdDenominator::Tokens ? "tokens" : "distinct"; }

void MetricConfig::validate() const {
  if (!(z >= 0.0 && z <= 1.0)) throw ConfigError("Z must lie in [0, 1], got " + std::to_string(z));
  if (max_order < 1 || max_order > 64) {
    throw ConfigError("N (max n-gram order) must lie in [1, 64], got " + std::to_string(max_order));
  }
}

Score score_profiles(const Profile& m, const Profile& c, const MetricConfig& cfg) {
  Score s;
  s.metric = cfg.metric;
  switch (cfg.metric) {
    case Metric::PM: {
      const Overlap o = intersect(m, c, 0, false);
      s.value = ratio(static_cast<double>(o.count), static_cast<double>(m.orders[0].size()));
      break;
    }
    case Metric::WPM: {
      const Overlap o = intersect(m, c, 0, true);
      s.value = ratio(o.weight, m.mass[0]);
      break;
    }
    case Metric::ED: {
      const std::size_t len =
          cfg.ed_denominator == EdDenominator::Tokens ? m.tokens.size() : m.orders[0].size();
      if (len == 0) break;
      const std::size_t dist = word_levenshtein<TokenId>(m.tokens, c.tokens);
      s.value = std::max(1.0 - static_cast<double>(dist) / static_cast<double>(len), 0.0);
      break;
    }
    case Metric::NGP:
    case Metric::WNGP: {
      s.order_precisions = order_precisions(m, c, cfg, cfg.metric == Metric::WNGP);
      double sum = 0.0;
      for (double p : s.order_precisions) sum += p;
      s.value = std::clamp(sum / static_cast<double>(cfg.max_order), 0.0, 1.0);
      break;
    }
    case Metric::MWNGP: {
      s.order_precisions = order_precisions(m, c, cfg, true);
      // 2^N / (2^N - 1) * sum wp_n / 2^n, evaluated as
      // sum wp_n * 2^(N-n) / (2^N - 1) so equal precisions reproduce exactly.
      const int big_n = static_cast<int>(cfg.max_order);
      double sum = 0.0;
      for (std::size_t n = 1; n <= cfg.max_order; ++n) {
        sum += std::ldexp(s.order_precisions[n - 1], big_n - static_cast<int>(n));
      }
      s.value = std::clamp(sum / (std::ldexp(1.0, big_n) - 1.0), 0.0, 1.0);
      break;
    }
  }
  return s;
}

Score pm(const Segment& m, const Segment& c) {
  MetricConfig cfg;
  cfg.metric = Metric::PM;
  cfg.max_order = 1;
  const Pair p = profile_pair(m, c, 1, nullptr);
  return score_profiles(p.m, p.c, cfg);
}

Score wpm(const Segment& m, const Segment& c, const IdfTable& idf) {
  MetricConfig cfg;
  cfg.metric = Metric::WPM;
  cfg.max_order = 1;
  const Pair p = profile_pair(m, c, 1, &idf);
  return score_profiles(p.m, p.c, cfg);
}

Score edit_distance_score(const Segment& m, const Segment& c, EdDenominator denominator) {
  MetricConfig cfg;
  cfg.metric = Metric::ED;
  cfg.max_order = 1;
  cfg.ed_denominator = denominator;
  const Pair p = profile_pair(m, c, 1, nullptr);
  return score_profiles(p.m, p.c, cfg);
}

double ngram_precision_order(const Segment& m, const Segment& c, std::size_t n, double z, const IdfTable* weights) {
  if (n == 0) throw ConfigError("n-gram order must be >= 1");
  const Pair p = profile_pair(m, c, n, weights);
  return order_precision(p.m, p.c, n, z, weights != nullptr);
}

Score ngp(const Segment& m, const Segment& c, const MetricConfig& cfg) {
  MetricConfig local = cfg;
  local.metric = Metric::NGP;
  local.validate();
  const Pair p = profile_pair(m, c, local.max_order, nullptr);
  return score_profiles(p.m, p.c, local);
}

Score wngp(const Segment& m, const Segment& c, const MetricConfig& cfg, const IdfTable& idf) {
  MetricConfig local = cfg;
  local.metric = Metric::WNGP;
  local.validate();
  const Pair p = profile_pair(m, c, local.max_order, &idf);
  return score_profiles(p.m, p.c, local);
}

Score mwngp(const Segment& m, const Segment& c, const MetricConfig& cfg, const IdfTable& idf) {
  MetricConfig local = cfg;
  local.metric = Metric::MWNGP;
  local.validate();
  const Pair p = profile_pair(m, c, local.max_order, &idf);
  return score_profiles(p.m, p.c, local);
}

Score score(const Segment& m, const Segment& c, const MetricConfig& cfg, const IdfTable* idf) {
  switch (cfg.metric) {
    case Metric::PM: return pm(m, c);
    case Metric::WPM: return wpm(m, c, require_idf(idf, cfg.metric));
    case Metric::ED: return edit_distance_score(m, c, cfg.ed_denominator);
    case Metric::NGP: return ngp(m, c, cfg);
    case Metric::WNGP: return wngp(m, c, cfg, require_idf(idf, cfg.metric));
    case Metric::MWNGP: return mwngp(m, c, cfg, require_idf(idf, cfg.metric));
  }
  return {};
}

}  // namespace tmmatch
