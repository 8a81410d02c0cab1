#pragma once

#include <stdexcept>
#include <string>

namespace latmed {

/// Thrown when an operation that requires a distributive carrier detects a
/// violation. The message names a witness triple (or the offending tuple).
class DistributivityError : public std::runtime_error {
 public:
  explicit DistributivityError(std::string what) : std::runtime_error(std::move(what)) {}
};

/// Thrown by cost guards: exhaustive strategies on infinite carriers,
/// enumeration sizes beyond the documented caps, exceeded check budgets.
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(std::string what) : std::runtime_error(std::move(what)) {}
};

/// Term parser failure; `offset` is 1-based within the source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string what, std::size_t offset)
      : std::runtime_error(std::move(what)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace latmed
