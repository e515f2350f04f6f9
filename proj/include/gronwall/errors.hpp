#pragma once

#include <stdexcept>
#include <string>

namespace gronwall {

/// A documented hypothesis failed on concrete data (negative rate at a grid
/// node, violated inequality, ...). The message names the first offending
/// node.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A signal, trajectory or state evaluated to a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally invalid call: index out of range, mismatched grids,
/// inconsistent dimensions.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace gronwall
