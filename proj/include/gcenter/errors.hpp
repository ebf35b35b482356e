#ifndef GCENTER_ERRORS_HPP
#define GCENTER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gcenter {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// An exact monomial division was requested but some term is not divisible.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class DegreeTooLow : public Error {
 public:
  using Error::Error;
};

class NotEquilibrium : public Error {
 public:
  using Error::Error;
};

class ZeroAlpha : public Error {
 public:
  using Error::Error;
};

class ChainTooDeep : public Error {
 public:
  using Error::Error;
};

class NotSemiHyperbolic : public Error {
 public:
  using Error::Error;
};

class HypothesesViolated : public Error {
 public:
  using Error::Error;
};

class NotConserved : public Error {
 public:
  using Error::Error;
};

class StepUnderflow : public Error {
 public:
  using Error::Error;
};

}  // namespace gcenter

#endif
