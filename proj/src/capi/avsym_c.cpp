/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "avsym/avsym.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "cli/commands.hpp"

struct avsym_instance {
  avsym::cli::InstanceFile file;
};

struct avsym_report {
  avsym::cli::Report report;
};

namespace {

thread_local std::string last_error;

avsym_status status_of(avsym::ErrorCode c) { return static_cast<avsym_status>(c); }

avsym_status set_error(avsym::ErrorCode c, const std::string& message) {
  last_error = message;
  return status_of(c);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Converts C options; throws avsym::Error for a malformed m_max.
avsym::cli::Options options_of(const avsym_options* o) {
  avsym::cli::Options opt;
  if (!o) return opt;
  if (o->has_seed) opt.seed = o->seed;
  if (o->m_max) {
    auto q = avsym::lattice::parse_rational(o->m_max);
    if (!q || q->get_den() != 1 || q->get_num() < 1)
      avsym::fail(avsym::ErrorCode::kInvalidArgument, "--m-max: expected a positive integer");
    opt.m_max = q->get_num();
  }
  if (o->trials) opt.trials = o->trials;
  opt.timing = o->timing != 0;
  return opt;
}

template <class F>
avsym_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const avsym::Error& e) {
    return set_error(e.code(), e.what());
  } catch (const std::exception& e) {
    return set_error(avsym::ErrorCode::kInternal, e.what());
  }
}

}  // namespace

extern "C" {

const char* avsym_version(void) { return AVSYM_VERSION; }

const char* avsym_status_name(avsym_status status) {
  if (status < AVSYM_OK || status > AVSYM_INTERNAL) return "Unknown";
  // Names are string literals, so data() is NUL-terminated.
  return avsym::error_code_name(static_cast<avsym::ErrorCode>(status)).data();
}

const char* avsym_last_error(void) { return last_error.c_str(); }

avsym_status avsym_instance_parse(const char* text, avsym_instance** out) {
  if (!out) return set_error(avsym::ErrorCode::kInvalidArgument, "out is NULL");
  *out = nullptr;
  if (!text) return set_error(avsym::ErrorCode::kInvalidArgument, "text is NULL");
  return guarded([&] {
    auto inst = new avsym_instance{avsym::cli::parse_instance(text)};
    *out = inst;
    return AVSYM_OK;
  });
}

avsym_status avsym_instance_normalize(const avsym_instance* instance, char** out) {
  if (!instance || !out) return set_error(avsym::ErrorCode::kInvalidArgument, "NULL argument");
  return guarded([&] {
    *out = dup(avsym::cli::emit_instance(instance->file));
    return AVSYM_OK;
  });
}

void avsym_instance_free(avsym_instance* instance) { delete instance; }

avsym_status avsym_run(const char* command, const avsym_instance* instance,
                       const avsym_options* options, avsym_report** out) {
  if (!out) return set_error(avsym::ErrorCode::kInvalidArgument, "out is NULL");
  *out = nullptr;
  if (!command) return set_error(avsym::ErrorCode::kInvalidArgument, "command is NULL");
  return guarded([&] {
    auto opt = options_of(options);
    *out = new avsym_report{
        avsym::cli::run_command(command, instance ? &instance->file : nullptr, opt)};
    return AVSYM_OK;
  });
}

avsym_status avsym_run_text(const char* command, const char* text,
                            const avsym_options* options, avsym_report** out) {
  if (!out) return set_error(avsym::ErrorCode::kInvalidArgument, "out is NULL");
  *out = nullptr;
  if (!command) return set_error(avsym::ErrorCode::kInvalidArgument, "command is NULL");
  return guarded([&] {
    auto opt = options_of(options);
    std::optional<std::string> input;
    if (text) input = text;
    *out = new avsym_report{avsym::cli::run_command(command, input, opt)};
    return AVSYM_OK;
  });
}

int avsym_report_exit_code(const avsym_report* report) {
  return report ? report->report.exit_code : avsym::cli::kExitInternal;
}

avsym_status avsym_report_status(const avsym_report* report) {
  if (!report) return AVSYM_INVALID_ARGUMENT;
  return report->report.error ? status_of(report->report.error->code) : AVSYM_OK;
}

char* avsym_report_render(const avsym_report* report, avsym_format format) {
  if (!report) return nullptr;
  try {
    return dup(avsym::cli::emit_report(report->report, format == AVSYM_FORMAT_JSON
                                                           ? avsym::cli::Format::kJson
                                                           : avsym::cli::Format::kText));
  } catch (const std::exception& e) {
    last_error = e.what();
    return nullptr;
  }
}

void avsym_report_free(avsym_report* report) { delete report; }

void avsym_string_free(char* s) { std::free(s); }

int avsym_selftest(char** out) {
  auto r = avsym::cli::run_command("selftest", std::optional<std::string>(), {});
  int failing = 0;
  for (const auto& c : r.result["criteria"]) failing += c["passed"].get<bool>() ? 0 : 1;
  if (r.error) failing = failing ? failing : 1;
  if (out) *out = dup(avsym::cli::emit_report(r, avsym::cli::Format::kJson));
  return failing;
}

}  // extern "C"
