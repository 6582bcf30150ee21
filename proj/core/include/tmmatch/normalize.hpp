#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace tmmatch {

using Tokens = std::vector<std::string>;

// A segment of text as it appears in the corpus, together with the token
// sequence the metrics operate on. Display always uses `original_text`.
struct Segment {
  std::string original_text;
  Tokens match_tokens;
};

struct CodePointRange {
  char32_t first;
  char32_t last;  // inclusive
};

// The three default ranges treated as Chinese characters. 0x4000-0x4DFF is
// kept verbatim even though it does not align with a Unicode block.
std::vector<CodePointRange> default_chinese_ranges();

// A token-level transformation applied after whitespace tokenization. Stages
// may rewrite tokens or drop them by returning an empty list.
struct Stage {
  std::string id;
  std::function<Tokens(Tokens)> apply;
};

enum class NormalizerKind { French, Chinese, Generic };

NormalizerKind parse_normalizer_kind(std::string_view name);
std::string_view to_string(NormalizerKind kind);

// Deterministic, immutable text-to-token pipeline:
// NFC -> whitespace tokenization -> stages in order.
class Normalizer {
 public:
  using Stemmer = std::function<std::string(std::string_view)>;

  static Normalizer french(Stemmer stemmer = {});
  static Normalizer chinese(std::vector<CodePointRange> ranges = default_chinese_ranges());
  static Normalizer generic();
  static Normalizer by_name(std::string_view name);

  const std::string& name() const { return name_; }
  // Stage identifiers including the fixed nfc/tokenize prefix.
  std::vector<std::string> stage_ids() const;

  // The tokenization stage alone (NFC + whitespace split). Segment validity
  // is judged on this count.
  Tokens tokenize(std::string_view text) const;
  Tokens normalize(std::string_view text) const;
  Segment segment(std::string text) const;

 private:
  Normalizer(std::string name, std::vector<Stage> stages);

  std::string name_;
  std::vector<Stage> stages_;
};

Tokens normalize_french(std::string_view text);
Tokens normalize_chinese(std::string_view text);
Tokens normalize_generic(std::string_view text);

bool contains_code_point_in(std::string_view token, const std::vector<CodePointRange>& ranges);
bool has_alphabetic(std::string_view token);

}  // namespace tmmatch
