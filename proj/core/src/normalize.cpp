#include "tmmatch/normalize.hpp"

#include <algorithm>
#include <cstdio>

#include "tmmatch/errors.hpp"
#include "tmmatch/french_stemmer.hpp"
#include "tmmatch/unicode.hpp"

namespace tmmatch {

namespace {

Stage casefold_stage() {
  return {"casefold", [](Tokens tokens) {
            for (auto& t : tokens) t = unicode::nfc(unicode::fold_case(t));
            return tokens;
          }};
}

Stage drop_non_alphabetic_stage() {
  return {"drop-non-alphabetic", [](Tokens tokens) {
            std::erase_if(tokens, [](const std::string& t) { return !has_alphabetic(t); });
            return tokens;
          }};
}

Stage stem_stage(std::string id, Normalizer::Stemmer stemmer) {
  return {std::move(id), [stemmer = std::move(stemmer)](Tokens tokens) {
            for (auto& t : tokens) t = stemmer(t);
            return tokens;
          }};
}

Stage keep_ranges_stage(std::vector<CodePointRange> ranges) {
  std::string id = "keep-code-point-ranges(";
  char buf[32];
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%s0x%04X-0x%04X", i ? "," : "",
                  static_cast<unsigned>(ranges[i].first), static_cast<unsigned>(ranges[i].last));
    id += buf;
  }
  id += ')';
  return {std::move(id), [ranges = std::move(ranges)](Tokens tokens) {
            std::erase_if(tokens, [&](const std::string& t) { return !contains_code_point_in(t, ranges); });
            return tokens;
          }};
}

}  // namespace

std::vector<CodePointRange> default_chinese_ranges() {
  return {{0x4E00, 0x9FFF}, {0x4000, 0x4DFF}, {0xF900, 0xFAFF}};
}

NormalizerKind parse_normalizer_kind(std::string_view name) {
  if (name == "french") return NormalizerKind::French;
  if (name == "chinese") return NormalizerKind::Chinese;
  if (name == "generic") return NormalizerKind::Generic;
  throw ConfigError("unknown normalizer '" + std::string(name) + "' (expected french|chinese|generic)");
}

std::string_view to_string(NormalizerKind kind) {
  switch (kind) {
    case NormalizerKind::French: return "french";
    case NormalizerKind::Chinese: return "chinese";
    case NormalizerKind::Generic: return "generic";
  }
  return "generic";
}

Normalizer::Normalizer(std::string name, std::vector<Stage> stages)
    : name_(std::move(name)), stages_(std::move(stages)) {}

Normalizer Normalizer::french(Stemmer stemmer) {
  std::string stem_id = "stem(french-snowball)";
  if (!stemmer) {
    stemmer = [](std::string_view w) { return french_stem(w); };
  } else {
    stem_id = "stem(custom)";
  }
  return Normalizer("french", {casefold_stage(), drop_non_alphabetic_stage(),
                               stem_stage(std::move(stem_id), std::move(stemmer))});
}

Normalizer Normalizer::chinese(std::vector<CodePointRange> ranges) {
  return Normalizer("chinese", {keep_ranges_stage(std::move(ranges))});
}

Normalizer Normalizer::generic() { return Normalizer("generic", {casefold_stage()}); }

Normalizer Normalizer::by_name(std::string_view name) {
  switch (parse_normalizer_kind(name)) {
    case NormalizerKind::French: return french();
    case NormalizerKind::Chinese: return chinese();
    case NormalizerKind::Generic: return generic();
  }
  return generic();
}

std::vector<std::string> Normalizer::stage_ids() const {
  std::vector<std::string> ids{"nfc", "whitespace-tokenize"};
  for (const auto& s : stages_) ids.push_back(s.id);
  return ids;
}

Tokens Normalizer::tokenize(std::string_view text) const {
  return unicode::split_whitespace(unicode::nfc(text));
}

Tokens Normalizer::normalize(std::string_view text) const {
  Tokens tokens = tokenize(text);
  for (const auto& stage : stages_) tokens = stage.apply(std::move(tokens));
  return tokens;
}

Segment Normalizer::segment(std::string text) const {
  Tokens tokens = normalize(text);
  return Segment{std::move(text), std::move(tokens)};
}

Tokens normalize_french(std::string_view text) {
  static const Normalizer n = Normalizer::french();
  return n.normalize(text);
}

Tokens normalize_chinese(std::string_view text) {
  static const Normalizer n = Normalizer::chinese();
  return n.normalize(text);
}

Tokens normalize_generic(std::string_view text) {
  static const Normalizer n = Normalizer::generic();
  return n.normalize(text);
}

bool contains_code_point_in(std::string_view token, const std::vector<CodePointRange>& ranges) {
  const std::u32string cps = unicode::decode(token);
  return std::any_of(cps.begin(), cps.end(), [&](char32_t cp) {
    return std::any_of(ranges.begin(), ranges.end(),
                       [cp](const CodePointRange& r) { return cp >= r.first && cp <= r.last; });
  });
}

bool has_alphabetic(std::string_view token) {
  const std::u32string cps = unicode::decode(token);
  return std::any_of(cps.begin(), cps.end(), unicode::is_alphabetic);
}

}  // namespace tmmatch
