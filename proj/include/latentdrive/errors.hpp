#pragma once

#include <stdexcept>
#include <string>

namespace latentdrive {

/// Invalid configuration value or file; carries the offending line when known.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Operation invoked in a state where it is not allowed (step after done, push after seal...).
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Shape or dimension mismatch between arguments.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PlacementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotReadyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite loss during optimisation; `term` names the offending quantity.
class TrainingFault : public std::runtime_error {
 public:
  TrainingFault(const std::string& term, const std::string& detail)
      : std::runtime_error("non-finite " + term + ": " + detail), term_(term) {}
  const std::string& term() const { return term_; }

 private:
  std::string term_;
};

}  // namespace latentdrive
