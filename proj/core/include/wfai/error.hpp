#pragma once

#include <stdexcept>
#include <string>

namespace wfai {

// Base class for every error raised by the library. Precondition violations
// are reported through these types, never through NaN results.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter lies outside its documented domain (N < 2, s <= -1, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// A closed-form information quantity was requested at i = 0 or i = N,
// where the neutral probability is degenerate.
class BoundaryEvent : public Error {
 public:
  using Error::Error;
};

// Both the null and the alternative probability of an event are zero.
class UndefinedEvent : public Error {
 public:
  using Error::Error;
};

// The operation exists only for a restricted parameter family
// (e.g. mutation-free chains).
class UnsupportedParameters : public Error {
 public:
  using Error::Error;
};

// The request exceeds a configured solver size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace wfai
