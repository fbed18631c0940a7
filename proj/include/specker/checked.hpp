#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "specker/error.hpp"

// Overflow-checked integer arithmetic. Every operation either returns the
// exact result or throws specker::overflow_error.
namespace specker::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw overflow_error("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw overflow_error("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
  }
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw overflow_error("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw overflow_error("multiplicity overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

/// lcm(a, b) for positive a, b.
inline std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  return mul(a / g, b);
}

/// Narrow a positive count into the signed element domain.
inline std::int64_t to_signed(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(INT64_MAX)) {
    throw overflow_error("value " + std::to_string(v) + " exceeds the signed 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace specker::checked
