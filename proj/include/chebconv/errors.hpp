#pragma once

#include <stdexcept>

namespace chebconv {

// Every failure raised by the library derives from Error, so callers that
// only care about "the request was invalid" can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NegativeIndex : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class MalformedCF : public Error {
 public:
  using Error::Error;
};

class UnknownSequence : public Error {
 public:
  using Error::Error;
};

}  // namespace chebconv
