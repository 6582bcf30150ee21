#pragma once

#include <stdexcept>
#include <string>

namespace tmmatch {

// Root of every error raised by the library. Subclasses name the failure
// category so callers (and the CLI's exit codes) can distinguish them.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Source and target files disagree on the number of segments, or result
// sets disagree on which workload segments they cover.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

class EncodingError : public Error {
 public:
  using Error::Error;
};

// A sample asks for more units than the corpus can supply.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class RetrievalError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// A retrieved (workload, bank) pair has no human judgment.
class CoverageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Prefixes `what` with "path:line: " (line is 1-based, omitted when 0).
std::string with_location(const std::string& path, std::size_t line, const std::string& what);

}  // namespace tmmatch
