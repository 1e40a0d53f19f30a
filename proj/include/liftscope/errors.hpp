#pragma once

#include <stdexcept>
#include <string>

namespace liftscope {

/// Bad user input: malformed polynomial text, violated preconditions on
/// arguments supplied from outside the library.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check failed. Seeing one of these means a bug, or an
/// input that breaks an assumption the library relies on.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace liftscope
