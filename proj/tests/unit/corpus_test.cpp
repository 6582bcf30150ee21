#include <algorithm>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tmmatch/corpus.hpp"
#include "tmmatch/errors.hpp"

using namespace tmmatch;

namespace {

void write_raw(const std::filesystem::path& p, const std::string& bytes) {
  std::ofstream(p, std::ios::binary) << bytes;
}

std::string words(std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += (i ? " w" : "w") + std::to_string(i);
  return s;
}

RawCorpus corpus_of(std::size_t n, std::size_t len = 6) {
  RawCorpus c;
  for (std::size_t i = 0; i < n; ++i) {
    c.source_lines.push_back("s" + std::to_string(i) + " " + words(len - 1));
    c.target_lines.push_back("t" + std::to_string(i));
  }
  return c;
}

}  // namespace

TEST(Corpus, ReadLinesHandlesBomCrlfAndTrailingNewline) {
  const auto dir = fixture::scratch_dir("read_lines");
  write_raw(dir / "a.txt", "\xEF\xBB\xBFone\r\ntwo\n\nfour\n");
  EXPECT_EQ(read_lines(dir / "a.txt"), (std::vector<std::string>{"one", "two", "", "four"}));
  write_raw(dir / "b.txt", "no newline");
  EXPECT_EQ(read_lines(dir / "b.txt"), (std::vector<std::string>{"no newline"}));
  write_raw(dir / "c.txt", "");
  EXPECT_TRUE(read_lines(dir / "c.txt").empty());
}

TEST(Corpus, InvalidUtf8NamesFileAndLine) {
  const auto dir = fixture::scratch_dir("bad_utf8");
  write_raw(dir / "bad.txt", "fine\nbroken \xC3(\n");
  try {
    read_lines(dir / "bad.txt");
    FAIL();
  } catch (const EncodingError& e) {
    EXPECT_NE(std::string(e.what()).find("bad.txt:2"), std::string::npos) << e.what();
  }
}

TEST(Corpus, MissingFileIsIoError) {
  EXPECT_THROW(read_lines("/nonexistent/tmmatch/file.txt"), IoError);
}

TEST(Corpus, LineCountMismatchIsAlignmentError) {
  const auto dir = fixture::scratch_dir("align");
  write_raw(dir / "s", "a\nb\nc\n");
  write_raw(dir / "t", "x\ny\n");
  EXPECT_THROW(load_parallel(dir / "s", dir / "t"), AlignmentError);
}

TEST(Corpus, TsvRequiresOneTab) {
  const auto dir = fixture::scratch_dir("tsv");
  write_raw(dir / "ok.tsv", "a b\tx y\nc\tz\n");
  const auto c = load_tsv(dir / "ok.tsv");
  EXPECT_EQ(c.source_lines, (std::vector<std::string>{"a b", "c"}));
  EXPECT_EQ(c.target_lines, (std::vector<std::string>{"x y", "z"}));
  write_raw(dir / "bad.tsv", "a\tb\tc\n");
  EXPECT_THROW(load_tsv(dir / "bad.tsv"), ParseError);
}

TEST(Corpus, ValidityBoundsAreInclusive) {
  EXPECT_FALSE(is_valid_length(4));
  EXPECT_TRUE(is_valid_length(5));
  EXPECT_TRUE(is_valid_length(100));
  EXPECT_FALSE(is_valid_length(101));
}

TEST(Corpus, FilterValidUsesSourceTokenCountAndRenumbers) {
  RawCorpus c;
  c.source_lines = {words(4), words(5), words(100), words(101), words(7)};
  c.target_lines = {"t0", "t1", "t2 is long but the target side is never checked", "t3", "t4"};
  const auto units = filter_valid(c, Normalizer::generic());
  ASSERT_EQ(units.size(), 3u);
  EXPECT_EQ(units[0].index, 0u);
  EXPECT_EQ(units[0].source_line, 1u);
  EXPECT_EQ(units[1].source_line, 2u);
  EXPECT_EQ(units[2].index, 2u);
  EXPECT_EQ(units[2].source_line, 4u);
  EXPECT_EQ(units[2].target.original_text, "t4");
}

TEST(Corpus, ValidityCountsTokensBeforeFiltering) {
  // Five whitespace tokens but only two survive French normalization.
  RawCorpus c;
  c.source_lines = {"Imprimer 100 % 2 fois"};
  c.target_lines = {"t"};
  const auto units = filter_valid(c, Normalizer::french());
  ASSERT_EQ(units.size(), 1u);
  EXPECT_EQ(units[0].source.match_tokens.size(), 2u);
}

TEST(Corpus, SampleIsDisjointSortedAndSized) {
  const auto units = make_units(corpus_of(50), Normalizer::generic());
  const auto s = sample_mtbt_tmb(units, {5, 30, 42});
  ASSERT_EQ(s.mtbt.size(), 5u);
  ASSERT_EQ(s.tmb.size(), 30u);
  std::set<std::size_t> lines;
  for (const auto& u : s.mtbt) lines.insert(u.source_line);
  for (const auto& u : s.tmb) lines.insert(u.source_line);
  EXPECT_EQ(lines.size(), 35u);
  for (std::size_t i = 0; i < s.tmb.size(); ++i) {
    EXPECT_EQ(s.tmb[i].index, i);
    if (i) EXPECT_LT(s.tmb[i - 1].source_line, s.tmb[i].source_line);
  }
  for (std::size_t i = 0; i < s.mtbt.size(); ++i) EXPECT_EQ(s.mtbt[i].index, i);
}

TEST(Corpus, SampleIsReproducibleAndSeedDependent) {
  const auto units = make_units(corpus_of(200), Normalizer::generic());
  const auto lines = [](const Sample& s) {
    std::vector<std::size_t> out;
    for (const auto& u : s.mtbt) out.push_back(u.source_line);
    for (const auto& u : s.tmb) out.push_back(u.source_line);
    return out;
  };
  EXPECT_EQ(lines(sample_mtbt_tmb(units, {10, 50, 1})), lines(sample_mtbt_tmb(units, {10, 50, 1})));
  EXPECT_NE(lines(sample_mtbt_tmb(units, {10, 50, 1})), lines(sample_mtbt_tmb(units, {10, 50, 2})));
}

TEST(Corpus, SamplerIsPinned) {
  // Frozen draw sequence; a change here alters every published sample.
  const auto first = draw_without_replacement(1000, 8, 0);
  const auto again = draw_without_replacement(1000, 8, 0);
  EXPECT_EQ(first, again);
  EXPECT_EQ(std::set<std::size_t>(first.begin(), first.end()).size(), 8u);
  for (auto v : first) EXPECT_LT(v, 1000u);
}

TEST(Corpus, DrawCanExhaustPopulation) {
  auto all = draw_without_replacement(17, 17, 3);
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i], i);
}

TEST(Corpus, SampleCapacityAndConfigErrors) {
  const auto units = make_units(corpus_of(10), Normalizer::generic());
  EXPECT_THROW(sample_mtbt_tmb(units, {5, 6, 0}), CapacityError);
  EXPECT_NO_THROW(sample_mtbt_tmb(units, {5, 5, 0}));
  EXPECT_THROW(sample_mtbt_tmb(units, {0, 5, 0}), ConfigError);
}
