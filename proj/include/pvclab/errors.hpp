#ifndef PVCLAB_ERRORS_HPP
#define PVCLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pvclab {

/// An operation was called on inputs that violate its preconditions
/// (invalid vertex, disconnected graph where connectivity is required,
/// k outside 1..kappa, factors a theorem does not cover, ...).
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A desk-scale cap (vertex count or palette size) was exceeded.
class cap_exceeded : public std::runtime_error {
 public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// An exact backtracking search ran out of its node budget before reaching
/// a verdict.
class budget_exceeded : public std::runtime_error {
 public:
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pvclab

#endif  // PVCLAB_ERRORS_HPP
