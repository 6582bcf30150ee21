#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "tmmatch/normalize.hpp"

namespace bench {

// Zipf-ish vocabulary so idf and posting lists look like real text.
inline tmmatch::Segment random_segment(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len,
                                       std::size_t vocab) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  tmmatch::Segment s;
  for (std::size_t i = 0, n = len(rng); i < n; ++i) {
    const auto id = static_cast<std::size_t>(std::pow(static_cast<double>(vocab), u(rng))) - 1;
    s.match_tokens.push_back("w" + std::to_string(id));
    s.original_text += (i ? " " : "") + s.match_tokens.back();
  }
  return s;
}

inline std::vector<tmmatch::Segment> random_segments(std::size_t count, std::uint64_t seed, std::size_t vocab = 5000) {
  std::mt19937_64 rng(seed);
  std::vector<tmmatch::Segment> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_segment(rng, 5, 40, vocab));
  return out;
}

}  // namespace bench
