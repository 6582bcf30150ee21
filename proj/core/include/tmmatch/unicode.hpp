#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tmmatch::unicode {

// Strict UTF-8 decoding: rejects overlong forms, surrogates and code points
// above U+10FFFF. Throws EncodingError.
std::u32string decode(std::string_view utf8);
std::string encode(std::u32string_view text);

// Byte offset of the first invalid sequence, or nullopt when `utf8` is valid.
std::optional<std::size_t> find_invalid(std::string_view utf8);

std::string nfc(std::string_view utf8);
std::string fold_case(std::string_view utf8);

bool is_alphabetic(char32_t cp);
// Unicode White_Space plus the ASCII information separators U+001C..U+001F.
bool is_separator(char32_t cp);

std::vector<std::string> split_whitespace(std::string_view utf8);

}  // namespace tmmatch::unicode
