/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <map>
#include <string>
#include <string_view>

#include "json.hpp"
#include "symplectic/symplectic.hpp"

namespace avsym::cli {

using Json = nlohmann::json;
using lattice::Integer;
using lattice::IntMatrix;
using lattice::RatMatrix;

struct VarietyEntry {
  av::AbelianVarietyModel model;
};

struct BrauerEntry {
  std::string variety;
  av::BrauerRepresentative rep;
};

struct PolarizationEntry {
  std::string variety;
  av::Polarization pol;
};

/// A_(X,α) referenced by names; an empty brauer name means the trivial class.
struct AmbientRef {
  std::string variety;
  std::string brauer;
};

struct MorphismEntry {
  enum class Kind { kHomomorphism, kSymplectic };
  Kind kind = Kind::kHomomorphism;
  std::string source;  // variety name (homomorphism)
  std::string target;
  AmbientRef source_ambient;  // symplectic
  AmbientRef target_ambient;
  IntMatrix matrix;
  Integer multiplier = 1;
};

/// Fully validated instance document. Morphisms are checked against their
/// source and target when parsed.
struct InstanceFile {
  std::map<std::string, VarietyEntry> varieties;
  std::map<std::string, BrauerEntry> brauer;
  std::map<std::string, PolarizationEntry> polarizations;
  std::map<std::string, MorphismEntry> morphisms;
  Json params = Json::object();
};

/// Throws kParseError for malformed text or structure (message carries a
/// line/column or a JSON pointer) and kValidationError for mathematical
/// invariants and unresolved names.
InstanceFile parse_instance(std::string_view text);

/// Normalized document: matrices as strings in lowest terms, varieties by
/// their complex structure, all numbers inside params as strings.
Json instance_to_json(const InstanceFile& f);
std::string emit_instance(const InstanceFile& f);

// Codecs shared with the command layer. `where` is a JSON pointer used in
// diagnostics.
Json matrix_to_json(const IntMatrix& m);
Json matrix_to_json(const RatMatrix& m);
Json integers_to_json(const std::vector<Integer>& v);
IntMatrix int_matrix_from_json(const Json& j, const std::string& where);
RatMatrix rat_matrix_from_json(const Json& j, const std::string& where);
Integer integer_from_json(const Json& j, const std::string& where);
std::vector<Integer> integers_from_json(const Json& j, const std::string& where);

av::BrauerRepresentative brauer_or_trivial(const InstanceFile& f,
                                           const AmbientRef& ref);
symplectic::TwistedSymplecticModel resolve_ambient(const InstanceFile& f,
                                                   const AmbientRef& ref);
AmbientRef ambient_from_json(const InstanceFile& f, const Json& j,
                             const std::string& where);
Json ambient_to_json(const AmbientRef& r);

const av::AbelianVarietyModel& variety_named(const InstanceFile& f,
                                             const std::string& name,
                                             const std::string& where);

}  // namespace avsym::cli
