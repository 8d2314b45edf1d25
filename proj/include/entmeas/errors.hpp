#pragma once

#include <stdexcept>
#include <string>

namespace entmeas {

/// Which validation rule an input violated.
enum class Violation {
  kNonFinite,
  kNonHermitian,
  kNegativeEigenvalue,
  kTraceNotOne,
  kNotNormalized,
  kOffUnitDiagonal,
  kNotPositiveSemidefinite,
  kOutOfRange,
  kSingularBasis,
};

const char* to_string(Violation v);

/// Raised when a value fails a domain validation rule.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(Violation violation, const std::string& what)
      : std::invalid_argument(what), violation_(violation) {}

  Violation violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

/// Raised when operand shapes or subsystem dimensions do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace entmeas
