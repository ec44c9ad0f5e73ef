#pragma once

#include <stdexcept>
#include <string>

namespace qloci {

/// Malformed or inconsistent user input (bad shapes, field mismatch, invalid arrays).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured enumeration ceiling would be exceeded.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must hold failed; indicates a bug.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qloci
