/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <cstdio>

#include "selftest/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& r : avsym::selftest::run_acceptance()) {
    std::printf("%s  %-42s %8.1f ms  %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                static_cast<double>(r.micros) / 1000.0, r.detail.c_str());
    failed += r.passed ? 0 : 1;
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
