#pragma once

#include <stdexcept>
#include <string>

namespace chebms {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An explicit sequence was evaluated past its last stored term.
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A 2F1 series was requested whose numerator parameter is not a non-positive integer.
class NonTerminating : public Error {
 public:
  using Error::Error;
};

/// A zero factor appeared in the rising factorial of the 2F1 denominator parameter.
class PoleInC : public Error {
 public:
  using Error::Error;
};

class DegenerateInterval : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace chebms
