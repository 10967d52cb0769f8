#pragma once

#include <stdexcept>
#include <string>

namespace charnet {

// Raised for malformed or inconsistent input (bad CSV, unknown ids,
// invalid parameters). The CLI maps it to exit code 3.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an internal invariant is violated. CLI exit code 4.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

// Shortest decimal string that parses back to exactly the same double.
// Used everywhere a weight or score is serialized, so that re-loading a
// file we wrote reproduces the value bit for bit.
std::string format_double(double value);

}  // namespace charnet
