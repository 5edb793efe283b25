#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace embsum {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Malformed structured input (graphs, class vectors, choice tables).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Geometric precondition violated (chamfer too large, colliding offsets,
// self-intersecting curves).
class GeometryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Two curves meet tangentially, at a vertex, or along an overlap.
class NonTransversalError : public GeometryError {
public:
  NonTransversalError(const std::string& what, std::array<double, 2> where)
      : GeometryError(what), location_(where) {}

  std::array<double, 2> location() const { return location_; }

private:
  std::array<double, 2> location_;
};

// An oracle found data that cannot come from a well-formed diagram.
class IntegrityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace embsum
