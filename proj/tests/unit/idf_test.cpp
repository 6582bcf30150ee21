#include <cmath>
#include <fstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tmmatch/errors.hpp"
#include "tmmatch/idf.hpp"

using namespace tmmatch;
using fixture::seg;

TEST(Idf, CountsDocumentFrequency) {
  const auto t = IdfTable::build(std::vector<Segment>{seg("a b"), seg("a c")});
  EXPECT_EQ(t.doc_count(), 2u);
  EXPECT_EQ(t.df("a"), 2u);
  EXPECT_EQ(t.df("b"), 1u);
  EXPECT_EQ(t.df("c"), 1u);
  EXPECT_DOUBLE_EQ(t.idf("a"), 0.0);
  EXPECT_DOUBLE_EQ(t.idf("b"), std::log(2.0));
}

TEST(Idf, SingleDocumentGivesZero) {
  const auto t = IdfTable::build(std::vector<Segment>{seg("a")});
  EXPECT_EQ(t.doc_count(), 1u);
  EXPECT_EQ(idf_of(t, "a"), 0.0);
}

TEST(Idf, RepeatedTokenCountsOncePerDocument) {
  const auto t = IdfTable::build(std::vector<Segment>{seg("a a a"), seg("b")});
  EXPECT_EQ(t.df("a"), 1u);
}

TEST(Idf, UnseenTokenClampsToDfOne) {
  const auto t = IdfTable::build(std::vector<Segment>{seg("a b"), seg("a c"), seg("a")});
  EXPECT_EQ(t.df("zzz"), 0u);
  EXPECT_DOUBLE_EQ(t.idf("zzz"), std::log(3.0));
  EXPECT_DOUBLE_EQ(t.idf("zzz"), t.idf("b"));
}

TEST(Idf, EmptyDocumentListIsAnError) {
  EXPECT_THROW(IdfTable::build(std::vector<Segment>{}), ValidationError);
}

TEST(Idf, MonotoneInDf) {
  const auto t = IdfTable::build(std::vector<Segment>{seg("a b c"), seg("a b"), seg("a"), seg("d")});
  EXPECT_GT(t.idf("c"), t.idf("b"));
  EXPECT_GT(t.idf("b"), t.idf("a"));
  for (const auto& [tok, df] : t.frequencies()) EXPECT_GE(t.idf(tok), 0.0);
}

TEST(Idf, ScaledMultipliesEveryValue) {
  const auto t = IdfTable::build(std::vector<Segment>{seg("a b"), seg("a c"), seg("d")});
  const auto s = t.scaled(2.0);
  for (const char* tok : {"a", "b", "c", "d", "unseen"}) EXPECT_DOUBLE_EQ(s.idf(tok), 2.0 * t.idf(tok));
  EXPECT_THROW(t.scaled(0.0), ValidationError);
  EXPECT_THROW(t.scaled(-1.0), ValidationError);
}

TEST(Idf, TsvRoundTrip) {
  const auto t = IdfTable::build(std::vector<Segment>{seg("b a"), seg("a c"), seg("é")});
  EXPECT_EQ(t.to_tsv(), "#doc_count\t3\na\t2\nb\t1\nc\t1\n\xC3\xA9\t1\n");
  const auto dir = fixture::scratch_dir("idf_tsv");
  t.write_tsv(dir / "idf.tsv");
  const auto back = IdfTable::read_tsv(dir / "idf.tsv");
  EXPECT_EQ(back.doc_count(), 3u);
  EXPECT_EQ(back.frequencies(), t.frequencies());
}

TEST(Idf, MalformedTsvIsParseError) {
  const auto dir = fixture::scratch_dir("idf_bad");
  std::ofstream(dir / "a.tsv") << "a\t1\n";
  EXPECT_THROW(IdfTable::read_tsv(dir / "a.tsv"), ParseError);
  std::ofstream(dir / "b.tsv") << "#doc_count\t2\na\tx\n";
  EXPECT_THROW(IdfTable::read_tsv(dir / "b.tsv"), ParseError);
  std::ofstream(dir / "c.tsv") << "#doc_count\t2\na\t3\n";
  EXPECT_THROW(IdfTable::read_tsv(dir / "c.tsv"), ValidationError);
}

TEST(Idf, ScopeNames) {
  EXPECT_EQ(parse_idf_scope("bank"), IdfScope::Bank);
  EXPECT_EQ(parse_idf_scope("bank+mtbt"), IdfScope::BankAndMtbt);
  EXPECT_EQ(to_string(IdfScope::BankAndMtbt), "bank+mtbt");
  EXPECT_THROW(parse_idf_scope("all"), ConfigError);
}
