/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace avsym {

// Numeric values are part of the C API (avsym_status) and must stay stable.
enum class ErrorCode : int {
  kOk = 0,
  kInvalidArgument = 1,
  kDimensionMismatch = 2,
  kParseError = 3,
  kValidationError = 4,
  kInfiniteCokernel = 5,
  kDegeneratePairing = 6,
  kSourceTargetMismatch = 7,
  kNotAnIsogeny = 8,
  kNotIsotropic = 9,
  kNotSymmetric = 10,
  kInfiniteIntersection = 11,
  kSearchExhausted = 12,
  kNotDivisible = 13,
  kNotInjective = 14,
  kNotSymplecticIso = 15,
  kTheoremViolation = 16,
  kInternal = 17,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

// Internal invariant; a violation is a bug, never a user error.
inline void ensure(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::kInternal, what);
}

}  // namespace avsym
