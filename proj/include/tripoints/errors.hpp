#pragma once

#include <stdexcept>
#include <string>

namespace tripoints {

/// Error raised by the text-file readers. Carries the 1-based line number
/// of the offending input line (0 when the error is not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace tripoints
