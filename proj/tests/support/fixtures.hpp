#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tmmatch/corpus.hpp"
#include "tmmatch/normalize.hpp"

namespace tmmatch::fixture {

inline Segment seg(const std::vector<std::string>& tokens) {
  std::string text;
  for (const auto& t : tokens) text += (text.empty() ? "" : " ") + t;
  return Segment{text, tokens};
}

inline Segment seg(const std::string& text) { return Segment{text, normalize_generic(text)}; }

inline std::vector<TranslationUnit> units_from(const std::vector<Segment>& sources) {
  std::vector<TranslationUnit> out;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    out.push_back(TranslationUnit{i, i, sources[i], Segment{"tgt " + std::to_string(i), {}}});
  }
  return out;
}

inline std::filesystem::path data_dir() { return TMMATCH_TEST_DATA_DIR; }

// Fresh, empty scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("tmmatch_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace tmmatch::fixture
