#pragma once

#include <cstdint>

#include "aarf/errors.hpp"

namespace aarf {

using Int = std::int64_t;

// All arithmetic on semigroup elements goes through these. The contract asks
// for arbitrary-precision semantics; 64-bit words are acceptable only because
// every overflow is detected and rejected.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer overflow in multiplication");
  return r;
}

}  // namespace aarf
