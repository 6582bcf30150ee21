#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "tmmatch/normalize.hpp"

namespace tmmatch {

// Sentence-aligned parallel text; line i of each side belongs to unit i.
struct RawCorpus {
  std::vector<std::string> source_lines;
  std::vector<std::string> target_lines;
  std::string language_pair;

  std::size_t size() const { return source_lines.size(); }
};

struct TranslationUnit {
  std::size_t index = 0;        // dense ordinal; ties resolve to the lowest
  std::size_t source_line = 0;  // 0-based line in the file it was loaded from
  Segment source;
  Segment target;
};

struct SampleSpec {
  std::size_t mtbt_size = 0;
  std::size_t tmb_size = 0;
  std::uint64_t seed = 0;
};

struct Sample {
  // Both lists are in original corpus order. TMB indices are 0..tmb_size-1;
  // MTBT indices are 0..mtbt_size-1.
  std::vector<TranslationUnit> mtbt;
  std::vector<TranslationUnit> tmb;
};

inline constexpr std::size_t kMinValidTokens = 5;
inline constexpr std::size_t kMaxValidTokens = 100;

// One segment per line, LF or CRLF, optional UTF-8 BOM. A trailing newline
// does not create an extra empty line.
std::vector<std::string> read_lines(const std::filesystem::path& path);
void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines);

RawCorpus load_parallel(const std::filesystem::path& source_path, const std::filesystem::path& target_path);
// source<TAB>target per line.
RawCorpus load_tsv(const std::filesystem::path& path);

bool is_valid_length(std::size_t token_count);

// Keeps units whose tokenized source has 5..100 tokens (inclusive) and
// renumbers them densely in corpus order. Targets use generic normalization.
std::vector<TranslationUnit> filter_valid(const RawCorpus& corpus, const Normalizer& normalizer);

// Units in order with no validity filtering; index == source_line.
std::vector<TranslationUnit> make_units(const RawCorpus& corpus, const Normalizer& normalizer);

// Uniform sampling without replacement, fully determined by `spec.seed`.
// Throws CapacityError when mtbt_size + tmb_size exceeds the unit count.
Sample sample_mtbt_tmb(const std::vector<TranslationUnit>& units, const SampleSpec& spec);

// Name of the sampling generator, recorded in manifests.
inline constexpr const char* kSamplerName = "mt19937_64+fisher-yates(rejection)";

// Partial Fisher-Yates over 0..population-1, returning the first `count`
// draws in draw order. Bounded integers use rejection sampling on raw
// mt19937_64 output so results do not depend on the standard library.
std::vector<std::size_t> draw_without_replacement(std::size_t population, std::size_t count, std::uint64_t seed);

}  // namespace tmmatch
