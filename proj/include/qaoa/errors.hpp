#pragma once

#include <stdexcept>
#include <string>

namespace qaoa {

// Raised for malformed graph documents. line() is 1-based for the edge-list
// text format and 0 when the error is not tied to a specific line (e.g. a
// structurally invalid JSON document).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace qaoa
