#pragma once

#include <stdexcept>
#include <string>

namespace qflagk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// A division that the construction guarantees to be exact left a remainder.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// Two members of a W_G coset share the maximal length.
class MaxNotUnique : public Error {
 public:
  using Error::Error;
};

class RankBoundExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

/// Flags that are individually valid but cannot be combined.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace qflagk
