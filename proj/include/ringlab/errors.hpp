#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring/group/element text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed spec that does not describe a valid ring (non-prime p, zero ring, ...).
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the configured order cap.
class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A group computation would exceed its size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NotCommutative : public Error {
 public:
  using Error::Error;
};

/// Fine/t-fine decompositions are only defined for non-zero elements.
class ZeroNotEligible : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// The base ring failed a t-fine decomposition during matrix recursion.
class NotTFineBase : public Error {
 public:
  using Error::Error;
};

class ZeroMatrix : public Error {
 public:
  using Error::Error;
};

}  // namespace ringlab
