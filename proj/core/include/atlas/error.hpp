#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace atlas {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (CSV, config, JSON document).
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t row, const std::string& message)
      : Error(source + (row ? ":" + std::to_string(row) : std::string()) + ": " + message),
        source_(std::move(source)),
        row_(row) {}

  const std::string& source() const noexcept { return source_; }
  // 1-based row, 0 when the error is not tied to a row.
  std::size_t row() const noexcept { return row_; }

 private:
  std::string source_;
  std::size_t row_;
};

// Caller-supplied argument that cannot be honoured (bad grouping, excluded keyword, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class SimulationError : public Error {
 public:
  SimulationError(int tick, const std::string& message)
      : Error("tick " + std::to_string(tick) + ": " + message), tick_(tick) {}
  int tick() const noexcept { return tick_; }

 private:
  int tick_;
};

}  // namespace atlas
