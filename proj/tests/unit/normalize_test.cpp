#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "tmmatch/errors.hpp"
#include "tmmatch/normalize.hpp"

using tmmatch::Normalizer;
using tmmatch::Tokens;

TEST(Normalize, ChineseKeepsOnlyTokensWithChineseCharacters) {
  EXPECT_EQ(tmmatch::normalize_chinese("软件 100 OpenOffice"), (Tokens{"软件"}));
  EXPECT_EQ(tmmatch::normalize_chinese("OpenOffice软件 abc"), (Tokens{"OpenOffice软件"}));
  EXPECT_TRUE(tmmatch::normalize_chinese("100 % OpenOffice").empty());
}

TEST(Normalize, ChineseRangesAreInclusive) {
  const auto r = tmmatch::default_chinese_ranges();
  ASSERT_EQ(r.size(), 3u);
  EXPECT_TRUE(tmmatch::contains_code_point_in("\xE4\xB8\x80", r));   // U+4E00
  EXPECT_TRUE(tmmatch::contains_code_point_in("\xE9\xBF\xBF", r));   // U+9FFF
  EXPECT_TRUE(tmmatch::contains_code_point_in("\xE4\x80\x80", r));   // U+4000
  EXPECT_TRUE(tmmatch::contains_code_point_in("\xEF\xA4\x80", r));   // U+F900
  EXPECT_FALSE(tmmatch::contains_code_point_in("\xE3\x81\x82", r));  // U+3042 hiragana
}

TEST(Normalize, FrenchCasefoldsDropsAndStems) {
  const auto toks = tmmatch::normalize_french("Utiliser 100 % des Chevaux");
  EXPECT_EQ(toks, (Tokens{"util", "de", "cheval"}));
}

TEST(Normalize, FrenchKeepsTokensWithAnyLetter) {
  const auto toks = tmmatch::normalize_french("F12 2025 ---");
  ASSERT_EQ(toks.size(), 1u);
  EXPECT_EQ(toks[0], "f12");
}

TEST(Normalize, FrenchAcceptsCustomStemmer) {
  const auto n = Normalizer::french([](std::string_view w) { return std::string(w.substr(0, 3)); });
  EXPECT_EQ(n.normalize("Documents IMPRIMER"), (Tokens{"doc", "imp"}));
  EXPECT_EQ(n.stage_ids().back(), "stem(custom)");
}

TEST(Normalize, GenericCasefoldsOnly) {
  EXPECT_EQ(tmmatch::normalize_generic("Click OK, then 100%"), (Tokens{"click", "ok,", "then", "100%"}));
}

TEST(Normalize, StagesAreListedInOrder) {
  EXPECT_EQ(Normalizer::french().stage_ids(),
            (std::vector<std::string>{"nfc", "whitespace-tokenize", "casefold", "drop-non-alphabetic",
                                      "stem(french-snowball)"}));
  EXPECT_EQ(Normalizer::generic().stage_ids(), (std::vector<std::string>{"nfc", "whitespace-tokenize", "casefold"}));
  const auto zh = Normalizer::chinese().stage_ids();
  ASSERT_EQ(zh.size(), 3u);
  EXPECT_EQ(zh[2].rfind("keep-code-point-ranges(", 0), 0u);
}

TEST(Normalize, ByNameAndUnknownName) {
  EXPECT_EQ(Normalizer::by_name("french").name(), "french");
  EXPECT_EQ(Normalizer::by_name("chinese").name(), "chinese");
  EXPECT_THROW(Normalizer::by_name("klingon"), tmmatch::ConfigError);
}

TEST(Normalize, SegmentKeepsOriginalText) {
  const auto s = Normalizer::french().segment("  Imprimer le Document ");
  EXPECT_EQ(s.original_text, "  Imprimer le Document ");
  EXPECT_EQ(s.match_tokens.size(), 3u);
}

TEST(Normalize, NfcMakesComposedAndDecomposedEqual) {
  EXPECT_EQ(tmmatch::normalize_french("cr\xC3\xA9" "er"), tmmatch::normalize_french("cre\xCC\x81" "er"));
}

TEST(Normalize, InvalidUtf8IsRejected) {
  EXPECT_THROW(tmmatch::normalize_generic("bad \xFF byte"), tmmatch::EncodingError);
}

// Property: normalizing the space-joined output again changes nothing.
TEST(NormalizeProperty, Idempotent) {
  const std::vector<std::string> pieces{"Imprimer", "documents", "été", "créées", "Chevaux", "100", "%",
                                        "软件", "OpenOffice", "naïve", "NOËL", "utilisations", "l'écran",
                                        "e\xCC\x81t\xC3\xA9", "\xE3\x80\x80", "Fenêtres", "x2"};
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1), len(0, 12);
  for (const auto& n : {Normalizer::french(), Normalizer::chinese(), Normalizer::generic()}) {
    for (int trial = 0; trial < 300; ++trial) {
      std::string text;
      for (std::size_t i = 0, k = len(rng); i < k; ++i) text += pieces[pick(rng)] + " ";
      const auto once = n.normalize(text);
      std::string joined;
      for (const auto& t : once) joined += t + " ";
      EXPECT_EQ(n.normalize(joined), once) << n.name() << ": " << text;
    }
  }
}

// Property: same input, same tokens, across fresh normalizer instances.
TEST(NormalizeProperty, Deterministic) {
  const std::string text = "Cliquez sur Fichier puis Imprimer pour utiliser l'imprimante";
  EXPECT_EQ(Normalizer::french().normalize(text), Normalizer::french().normalize(text));
}
