/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace avsym::selftest {

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::uint64_t micros = 0;
  std::uint64_t limit_ms = 0;  // 0: no runtime limit
};

/// Runs every acceptance criterion in a fixed order. A criterion fails on
/// the first broken check or when it exceeds its runtime limit.
std::vector<CriterionResult> run_acceptance();

/// Pinned documents compiled into the library: fixtures/<name> and
/// golden/<name>. Returns nullptr when absent.
const char* embedded_file(const std::string& path);

struct GoldenCase {
  const char* fixture;  // "" for commands without input
  const char* command;
  const char* format;   // "json" or "text"
  const char* golden;
};

/// The pinned command runs whose reports are compared byte for byte.
const std::vector<GoldenCase>& golden_cases();

}  // namespace avsym::selftest
