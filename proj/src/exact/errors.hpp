#pragma once

#include <stdexcept>
#include <string>

namespace netlts {

/// Malformed or inconsistent input: bad shapes, unparsable data, failed
/// preconditions of an operation.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A guarantee that must hold for valid inputs did not hold. Signals a bug in
/// the library rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace netlts
