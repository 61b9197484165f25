#pragma once

#include <stdexcept>
#include <string>

namespace hgs {

// Thrown when materializing a group would exceed the element cap.
// Callers that only need the order fall back to the stabilizer chain.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotRegular : std::invalid_argument {
  explicit NotRegular(const std::string& what) : std::invalid_argument(what) {}
};

struct DegreeMismatch : std::invalid_argument {
  explicit DegreeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// No catalogue entry matches; impossible for genuine groups of order <= 11.
struct NoMatch : std::logic_error {
  explicit NoMatch(const std::string& what) : std::logic_error(what) {}
};

struct NonIntegralCount : std::logic_error {
  explicit NonIntegralCount(const std::string& what) : std::logic_error(what) {}
};

struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct ValidationError : std::runtime_error {
  ValidationError(const std::string& entry, const std::string& what)
      : std::runtime_error(entry + ": " + what), entry(entry) {}
  std::string entry;
};

}  // namespace hgs
