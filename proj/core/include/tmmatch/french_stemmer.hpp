#pragma once

#include <string>
#include <string_view>

namespace tmmatch {

// Snowball-style French suffix stripper operating on lowercase UTF-8 words.
//
// The algorithm follows the classic Snowball French stemmer: a prelude marks
// consonantal u/i/y, the RV/R1/R2 regions are computed, and then standard,
// i-verb, verb and residual suffixes are removed, followed by undoubling and
// un-accenting. The result is iterated to a fixed point, so
// stem(stem(w)) == stem(w) for every input.
std::string french_stem(std::string_view word);

// A single pass of the algorithm, without fixed-point iteration.
std::string french_stem_once(std::string_view word);

}  // namespace tmmatch
