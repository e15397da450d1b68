#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace conres {

/// Bad input: an argument outside the domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal identity failed (inexact division, negative rank, parity
/// violation). Signals a bug or a falsified sign convention, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured computational budget was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Coeff = std::int64_t;

namespace detail {

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("conres: integer overflow in addition");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("conres: integer overflow in multiplication");
  return r;
}

}  // namespace detail
}  // namespace conres
