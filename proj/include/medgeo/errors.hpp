#pragma once

#include <stdexcept>
#include <string>

namespace medgeo {

/// Malformed input or a violated precondition. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap or enumeration budget was exceeded. Exit code 3.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A guaranteed property failed to hold. Always a bug signal.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Requested norm/model is not supported by the routine.
class UnsupportedModel : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace medgeo
