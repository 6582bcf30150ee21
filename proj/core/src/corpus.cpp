#include "tmmatch/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "tmmatch/errors.hpp"
#include "tmmatch/unicode.hpp"

namespace tmmatch {

namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  // Largest multiple of `bound` representable; draws at or above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(with_location(path.string(), 0, "cannot open file"));
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string data = std::move(buf).str();

  std::string_view view(data);
  if (view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);

  std::vector<std::string> lines;
  std::size_t line_no = 0;
  while (!view.empty()) {
    ++line_no;
    const std::size_t nl = view.find('\n');
    std::string_view line = view.substr(0, nl);
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (const auto bad = unicode::find_invalid(line)) {
      throw EncodingError(with_location(path.string(), line_no,
                                        "invalid UTF-8 at byte " + std::to_string(*bad)));
    }
    lines.emplace_back(line);
    if (nl == std::string_view::npos) break;
    view.remove_prefix(nl + 1);
  }
  return lines;
}

void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(with_location(path.string(), 0, "cannot open file for writing"));
  for (const auto& l : lines) out << l << '\n';
  if (!out) throw IoError(with_location(path.string(), 0, "write failed"));
}

RawCorpus load_parallel(const std::filesystem::path& source_path, const std::filesystem::path& target_path) {
  RawCorpus corpus;
  corpus.source_lines = read_lines(source_path);
  corpus.target_lines = read_lines(target_path);
  if (corpus.source_lines.size() != corpus.target_lines.size()) {
    throw AlignmentError(source_path.string() + " has " + std::to_string(corpus.source_lines.size()) +
                         " lines but " + target_path.string() + " has " +
                         std::to_string(corpus.target_lines.size()));
  }
  corpus.language_pair = source_path.extension().string() + "-" + target_path.extension().string();
  return corpus;
}

RawCorpus load_tsv(const std::filesystem::path& path) {
  RawCorpus corpus;
  const auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(with_location(path.string(), i + 1, "expected exactly one TAB (source<TAB>target)"));
    }
    corpus.source_lines.push_back(line.substr(0, tab));
    corpus.target_lines.push_back(line.substr(tab + 1));
  }
  corpus.language_pair = "tsv";
  return corpus;
}

bool is_valid_length(std::size_t token_count) {
  return token_count >= kMinValidTokens && token_count <= kMaxValidTokens;
}

std::vector<TranslationUnit> filter_valid(const RawCorpus& corpus, const Normalizer& normalizer) {
  if (corpus.source_lines.size() != corpus.target_lines.size()) {
    throw AlignmentError("corpus sides differ in length");
  }
  static const Normalizer target_normalizer = Normalizer::generic();
  std::vector<TranslationUnit> units;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::string& src = corpus.source_lines[i];
    if (!is_valid_length(normalizer.tokenize(src).size())) continue;
    TranslationUnit u;
    u.index = units.size();
    u.source_line = i;
    u.source = normalizer.segment(src);
    u.target = target_normalizer.segment(corpus.target_lines[i]);
    units.push_back(std::move(u));
  }
  return units;
}

std::vector<TranslationUnit> make_units(const RawCorpus& corpus, const Normalizer& normalizer) {
  if (corpus.source_lines.size() != corpus.target_lines.size()) {
    throw AlignmentError("corpus sides differ in length");
  }
  static const Normalizer target_normalizer = Normalizer::generic();
  std::vector<TranslationUnit> units(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    units[i].index = i;
    units[i].source_line = i;
    units[i].source = normalizer.segment(corpus.source_lines[i]);
    units[i].target = target_normalizer.segment(corpus.target_lines[i]);
  }
  return units;
}

std::vector<std::size_t> draw_without_replacement(std::size_t population, std::size_t count, std::uint64_t seed) {
  if (count > population) {
    throw CapacityError("cannot draw " + std::to_string(count) + " of " + std::to_string(population));
  }
  std::vector<std::size_t> perm(population);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(bounded(rng, population - i));
    std::swap(perm[i], perm[j]);
  }
  perm.resize(count);
  return perm;
}

Sample sample_mtbt_tmb(const std::vector<TranslationUnit>& units, const SampleSpec& spec) {
  if (spec.mtbt_size == 0 || spec.tmb_size == 0) {
    throw ConfigError("sample sizes must be positive");
  }
  const std::size_t wanted = spec.mtbt_size + spec.tmb_size;
  if (wanted > units.size()) {
    throw CapacityError("sample needs " + std::to_string(wanted) + " units (" + std::to_string(spec.mtbt_size) +
                        " MTBT + " + std::to_string(spec.tmb_size) + " TMB) but only " +
                        std::to_string(units.size()) + " are available");
  }
  const auto draws = draw_without_replacement(units.size(), wanted, spec.seed);
  std::vector<std::size_t> mtbt_pos(draws.begin(), draws.begin() + static_cast<std::ptrdiff_t>(spec.mtbt_size));
  std::vector<std::size_t> tmb_pos(draws.begin() + static_cast<std::ptrdiff_t>(spec.mtbt_size), draws.end());
  std::sort(mtbt_pos.begin(), mtbt_pos.end());
  std::sort(tmb_pos.begin(), tmb_pos.end());

  Sample out;
  const auto take = [&](const std::vector<std::size_t>& positions, std::vector<TranslationUnit>& dst) {
    dst.reserve(positions.size());
    for (std::size_t p : positions) {
      TranslationUnit u = units[p];
      u.index = dst.size();
      dst.push_back(std::move(u));
    }
  };
  take(mtbt_pos, out.mtbt);
  take(tmb_pos, out.tmb);
  return out;
}

}  // namespace tmmatch
