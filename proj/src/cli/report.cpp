/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace avsym::cli {

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return kExitOk;
    case ErrorCode::kSearchExhausted: return kExitSearchExhausted;
    case ErrorCode::kTheoremViolation:
    case ErrorCode::kInternal: return kExitInternal;
    default: return kExitInputError;
  }
}

Json report_to_json(const Report& r) {
  Json j = Json::object();
  j["tool"] = "avsym";
  j["version"] = AVSYM_VERSION;
  j["command"] = r.command;
  j["seed"] = std::to_string(r.seed);
  j["exit_code"] = r.exit_code;
  j["verdict"] = r.verdict ? Json(*r.verdict) : Json(nullptr);
  j["result"] = r.result;
  if (r.error)
    j["error"] = {{"code", std::string(error_code_name(r.error->code))},
                  {"message", r.error->message}};
  if (r.timing_us) j["timing_us"] = std::to_string(*r.timing_us);
  return j;
}

namespace {

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

bool is_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j) {
    if (!row.is_array()) return false;
    for (const auto& e : row)
      if (!is_scalar(e)) return false;
  }
  return true;
}

void render(std::ostringstream& out, const std::string& key, const Json& j) {
  if (is_scalar(j)) {
    out << key << ": " << scalar(j) << "\n";
  } else if (is_matrix(j)) {
    std::size_t width = 1;
    for (const auto& row : j)
      for (const auto& e : row) width = std::max(width, scalar(e).size());
    out << key << ":\n";
    for (const auto& row : j) {
      out << "  [";
      for (std::size_t c = 0; c < row.size(); ++c) {
        std::string s = scalar(row[c]);
        out << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
      }
      out << "]\n";
    }
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), is_scalar)) {
    out << key << ": (";
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << scalar(j[i]);
    out << ")\n";
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) render(out, key + "[" + std::to_string(i) + "]", j[i]);
  } else {
    if (j.empty()) out << key << ": {}\n";
    for (auto it = j.begin(); it != j.end(); ++it)
      render(out, key.empty() ? it.key() : key + "." + it.key(), it.value());
  }
}

}  // namespace

std::string emit_report(const Report& r, Format format) {
  Json j = report_to_json(r);
  if (format == Format::kJson) return j.dump(2) + "\n";
  std::ostringstream out;
  out << "avsym " << AVSYM_VERSION << "\n";
  out << "command: " << r.command << "\n";
  out << "seed: " << r.seed << "\n";
  out << "verdict: " << scalar(j["verdict"]) << "\n";
  out << "exit_code: " << r.exit_code << "\n";
  if (r.error)
    out << "error: " << error_code_name(r.error->code) << ": " << r.error->message << "\n";
  for (auto it = r.result.begin(); it != r.result.end(); ++it) render(out, it.key(), it.value());
  if (r.timing_us) out << "timing_us: " << *r.timing_us << "\n";
  return out.str();
}

}  // namespace avsym::cli
