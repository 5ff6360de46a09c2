#pragma once

#include <stdexcept>
#include <string>

namespace unarb {

/// Malformed input file (CSV or JSON). Line/column are 1-based; 0 = unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line = 0, int column = 0)
      : std::runtime_error(message), line(line), column(column) {}

  int line;
  int column;
};

/// Structurally well-formed input that violates a domain invariant
/// (riskless row not all ones, dimension mismatch, ranking not total, ...).
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed result failed its own re-verification. Always a bug, never
/// an input problem.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace unarb
