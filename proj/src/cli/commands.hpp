/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cli/instance.hpp"
#include "cli/report.hpp"

namespace avsym::cli {

struct Options {
  std::optional<std::uint64_t> seed;
  std::optional<Integer> m_max;
  std::optional<long> trials;
  bool timing = false;
};

/// Seed used when none is given.
inline constexpr std::uint64_t kDefaultSeed = 20261016;

const std::vector<std::string>& command_names();

/// Runs one command on an instance document (which may be absent for
/// `random` and `selftest`). Never throws for user errors: they are reported
/// with exit code 2 and a machine-readable error code.
Report run_command(const std::string& command,
                   const std::optional<std::string>& input,
                   const Options& options);

/// The same on an already parsed instance.
Report run_command(const std::string& command, const InstanceFile* instance,
                   const Options& options);

}  // namespace avsym::cli
