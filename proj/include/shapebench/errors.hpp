#pragma once

#include <stdexcept>
#include <string>

namespace shapebench {

/// Invalid design, space declaration or vector passed to a space operation.
class SpaceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Precondition of a numeric routine violated by the caller.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An evaluator could not produce metrics for a design.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad task catalog, optimizer configuration or method/task pairing.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shapebench
