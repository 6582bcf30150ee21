#include "tmmatch/errors.hpp"

namespace tmmatch {

std::string with_location(const std::string& path, std::size_t line, const std::string& what) {
  std::string out = path;
  if (line != 0) {
    out += ':';
    out += std::to_string(line);
  }
  out += ": ";
  out += what;
  return out;
}

}  // namespace tmmatch
