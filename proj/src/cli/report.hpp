/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "common/error.hpp"
#include "json.hpp"

namespace avsym::cli {

using Json = nlohmann::json;

enum class Format { kText, kJson };

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitSearchExhausted = 3;
inline constexpr int kExitInternal = 4;

int exit_code_for(ErrorCode code) noexcept;

struct ReportError {
  ErrorCode code = ErrorCode::kOk;
  std::string message;
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::optional<bool> verdict;
  int exit_code = kExitOk;
  Json result = Json::object();
  std::optional<ReportError> error;
  /// Wall time in microseconds; only set when requested.
  std::optional<std::uint64_t> timing_us;
};

Json report_to_json(const Report& r);
/// Deterministic rendering; json keys are sorted, numbers are exact strings.
std::string emit_report(const Report& r, Format format);

}  // namespace avsym::cli
