#pragma once

#include <stdexcept>
#include <string>

namespace lawson {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (negative n in a
// binomial, p beyond the dimension in a chi query, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// L_rH_k is only defined for k >= 2r; raised for r >= 1 queries below that line.
class OutsideLawsonRange : public DomainError {
 public:
  OutsideLawsonRange(long long r, long long k)
      : DomainError("outside the Lawson range: k = " + std::to_string(k) +
                    " < 2r = " + std::to_string(2 * r)) {}
};

// A well-formed expression that does not describe a supported variety.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class InconsistentConeCounts : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// The expression is valid but the requested quantity is not computable from
// the available formulas (full tables of non-smooth toric varieties, ...).
class UnsupportedQuery : public Error {
 public:
  using Error::Error;
};

}  // namespace lawson
