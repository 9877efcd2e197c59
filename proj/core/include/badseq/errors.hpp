#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace badseq {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed literal, grammar or JSON input.
class ParseError : public Error {
public:
  using Error::Error;
};

// Monomials or ideals of different exponent-vector lengths were mixed.
class LengthMismatchError : public Error {
public:
  using Error::Error;
};

// fund_seq was asked for a non-limit ordinal.
class NotALimitError : public Error {
public:
  using Error::Error;
};

// An ordinal does not fit below omega^(d+1) for the requested dimension d.
class DimensionTooSmallError : public Error {
public:
  using Error::Error;
};

// A fast-growing value needed by a computation exceeds the configured cap.
class CapExceededError : public Error {
public:
  using Error::Error;
};

// An enumeration or construction would exceed the configured budget.
class BudgetExceededError : public Error {
public:
  using Error::Error;
};

// inverse_eval detected a decrease while scanning a supposedly
// nondecreasing function.
class NotMonotoneError : public Error {
public:
  using Error::Error;
};

// bound_slow requires B(l) > 2^(l+2).
class BoundPreconditionError : public Error {
public:
  using Error::Error;
};

// A verifier needed provenance data the sequence does not carry.
class MissingMetaError : public Error {
public:
  using Error::Error;
};

// verify_length was handed an overflowed target.
class TargetOverflowError : public Error {
public:
  using Error::Error;
};

// A coloring was queried outside its domain.
class OutOfDomainError : public Error {
public:
  using Error::Error;
};

// reduce_to_coloring found a containment pair; carries the witness.
class NotBadError : public Error {
public:
  NotBadError(std::size_t i, std::size_t j)
      : Error("sequence is not bad: ideal " + std::to_string(i) +
              " contains ideal " + std::to_string(j)),
        i(i),
        j(j) {}
  std::size_t i;
  std::size_t j;
};

}  // namespace badseq
