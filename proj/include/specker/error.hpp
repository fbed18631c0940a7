#pragma once

#include <stdexcept>
#include <string>

namespace specker {

/// Root of all library exceptions.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed values: duplicate labels, length or dimension mismatches,
/// unknown labels, operands living in different objects.
class structure_error : public error {
 public:
  using error::error;
};

/// The input is well formed but violates a mathematical constraint
/// (divisibility, unit preservation, singularity, interval membership).
class domain_error : public error {
 public:
  using error::error;
};

/// Checked machine arithmetic left the representable range.
class overflow_error : public domain_error {
 public:
  using domain_error::domain_error;
};

}  // namespace specker
