#pragma once

#include <cstdint>
#include <stdexcept>

namespace newtonjump {

using integer = std::int64_t;

/// Coordinates and formula inputs are bounded by this; products of two
/// bounded values and their sums stay far inside int64.
inline constexpr integer kCoordinateBound = integer{1} << 30;

inline integer checked_add(integer a, integer b) {
  integer out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
  return out;
}

inline integer checked_sub(integer a, integer b) {
  integer out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in subtraction");
  return out;
}

inline integer checked_mul(integer a, integer b) {
  integer out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
  return out;
}

}  // namespace newtonjump
