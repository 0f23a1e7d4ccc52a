#pragma once

#include <stdexcept>
#include <string>

namespace poisonrl {

// Invalid caller input: shape mismatches, bad configuration values.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A state-action pair required by an estimator is absent from the batch.
class CoverageError : public std::runtime_error {
 public:
  explicit CoverageError(const std::string& pair_name)
      : std::runtime_error("no training item covers state-action pair " + pair_name),
        pair(pair_name) {}
  std::string pair;
};

class IterationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Conic solve failed (infeasible problem or tolerance not reached).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Least-squares system identification has a rank-deficient design.
class NotIdentifiableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line_number)
      : std::runtime_error(what + " (line " + std::to_string(line_number) + ")"),
        line(line_number) {}
  int line;
};

}  // namespace poisonrl
