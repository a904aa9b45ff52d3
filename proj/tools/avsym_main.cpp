/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "avsym/avsym.h"

namespace {

constexpr int kExitInputError = 2;

bool needs_input(const std::string& command) {
  return command != "random" && command != "selftest";
}

std::optional<std::string> slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice models of twisted derived equivalence for abelian varieties"};
  app.set_version_flag("--version", std::string("avsym ") + avsym_version());

  std::string command, input_path, format = "text", m_max;
  std::uint64_t seed = 0;
  long trials = 0;
  bool timing = false;
  app.add_option("command", command,
                 "snf, group-shape, heisenberg, build-a, lagrangian-check, pair-lagrangians, "
                 "find-m, kernel-test, pipeline, random, selftest; normalize prints the "
                 "normalized instance document")
      ->required();
  app.add_option("-i,--input", input_path, "Instance document (JSON); stdin when omitted");
  app.add_option("-f,--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  auto* seed_opt = app.add_option("--seed", seed, "Random seed (default 20261016)");
  app.add_option("--m-max", m_max, "Upper bound for the transverse multiplier search");
  app.add_option("--trials", trials, "Number of generated instances for `random`")
      ->check(CLI::Range(1L, 1000L));
  app.add_flag("--timing", timing, "Include wall time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  std::optional<std::string> text;
  if (!input_path.empty()) {
    std::ifstream in(input_path, std::ios::binary);
    if (in) text = slurp(in);
    if (!text) {
      std::cerr << "avsym: cannot read " << input_path << "\n";
      return kExitInputError;
    }
  } else if (needs_input(command)) {
    text = slurp(std::cin);
    if (!text) {
      std::cerr << "avsym: cannot read standard input\n";
      return kExitInputError;
    }
  }

  if (command == "normalize") {
    avsym_instance* inst = nullptr;
    char* doc = nullptr;
    if (avsym_instance_parse(text->c_str(), &inst) != AVSYM_OK ||
        avsym_instance_normalize(inst, &doc) != AVSYM_OK) {
      std::cerr << "avsym: " << avsym_last_error() << "\n";
      avsym_instance_free(inst);
      return kExitInputError;
    }
    std::fputs(doc, stdout);
    avsym_string_free(doc);
    avsym_instance_free(inst);
    return 0;
  }

  avsym_options opt{};
  opt.has_seed = seed_opt->count() > 0;
  opt.seed = seed;
  opt.m_max = m_max.empty() ? nullptr : m_max.c_str();
  opt.trials = trials;
  opt.timing = timing;

  avsym_report* report = nullptr;
  if (avsym_run_text(command.c_str(), text ? text->c_str() : nullptr, &opt, &report) != AVSYM_OK) {
    std::cerr << "avsym: " << avsym_last_error() << "\n";
    return kExitInputError;
  }
  char* out = avsym_report_render(report, format == "json" ? AVSYM_FORMAT_JSON : AVSYM_FORMAT_TEXT);
  int code = avsym_report_exit_code(report);
  if (out) std::fputs(out, stdout);
  avsym_string_free(out);
  avsym_report_free(report);
  return code;
}
