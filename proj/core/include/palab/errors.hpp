#pragma once

#include <stdexcept>

namespace palab {

/// Invalid input: bad parameters, out-of-domain points, malformed requests.
/// The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed persisted data; the message carries file/field context.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// Requested work exceeds a hard solver cap (e.g. the exact-search budget).
/// The CLI maps this to exit code 2.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace palab
