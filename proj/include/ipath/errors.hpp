#pragma once

#include <stdexcept>
#include <string>

namespace ipath {

// Base of every error the library throws. The CLI maps the subclasses
// onto exit codes (input/validation problems -> 2, internal -> 3).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed caller input: out-of-range ids, bad JSON, bad parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public InputError {
 public:
  using InputError::InputError;
};

// Two vertices lie in different components.
class NoPathError : public Error {
 public:
  using Error::Error;
};

// A supplied Hamiltonian path does not verify.
class WitnessError : public InputError {
 public:
  using InputError::InputError;
};

// A representation violates one of its defining conditions or a width bound.
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

// A graph is rejected by an extractor's class-membership predicate.
class ClassError : public InputError {
 public:
  using InputError::InputError;
};

// A torso kind has no extractor available.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Exact search refused: instance larger than the configured cap.
class CapExceededError : public InputError {
 public:
  using InputError::InputError;
};

// A post-condition that the construction guarantees failed to hold.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ipath
