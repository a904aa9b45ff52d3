/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "cli/instance.hpp"

#include <set>

namespace avsym::cli {

using lattice::Rational;
using lattice::to_string;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  fail(ErrorCode::kParseError, where + ": " + what);
}

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  fail(ErrorCode::kValidationError, where + ": " + what);
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<std::uint64_t>())));
    return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_number_float()) parse_fail(where, "floating-point values are not allowed");
  if (!j.is_string()) parse_fail(where, "expected an integer or a fraction string");
  auto q = lattice::parse_rational(j.get<std::string>());
  if (!q) parse_fail(where, "malformed number \"" + j.get<std::string>() + "\"");
  return *q;
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_member(const Json& obj, const char* key, const std::string& where) {
  const Json& v = member(obj, key, where);
  if (!v.is_string()) parse_fail(where + "/" + key, "expected a string");
  return v.get<std::string>();
}

void only_keys(const Json& obj, std::initializer_list<const char*> keys,
               const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) parse_fail(where, "unknown field \"" + it.key() + "\"");
}

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// Strings for every number below params, so normalization is idempotent.
Json normalize_numbers(const Json& j) {
  if (j.is_number_integer()) return Json(to_string(rational_from_json(j, "")));
  if (j.is_string()) {
    if (auto q = lattice::parse_rational(j.get<std::string>())) return Json(to_string(*q));
    return j;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& e : j) out.push_back(normalize_numbers(e));
    return out;
  }
  if (j.is_object()) {
    Json out = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = normalize_numbers(it.value());
    return out;
  }
  return j;
}

void reject_floats(const Json& j, const std::string& where) {
  if (j.is_number_float()) parse_fail(where, "floating-point values are not allowed");
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) reject_floats(j[i], where + "/" + std::to_string(i));
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) reject_floats(it.value(), where + "/" + it.key());
  }
}

class Resolver {
 public:
  Resolver(const Json& section, InstanceFile& f) : section_(section), f_(f) {}

  void resolve(const std::string& name, std::set<std::string>& stack) {
    if (f_.varieties.count(name)) return;
    const std::string where = "/varieties/" + name;
    auto it = section_.find(name);
    if (it == section_.end()) invalid(where, "unknown variety \"" + name + "\"");
    const Json& v = *it;
    only_keys(v, {"J", "product_elliptic", "dual_of", "g"}, where);
    int forms = v.contains("J") + v.contains("product_elliptic") + v.contains("dual_of");
    if (forms != 1)
      parse_fail(where, "exactly one of \"J\", \"product_elliptic\", \"dual_of\" is required");

    av::AbelianVarietyModel model;
    if (v.contains("J")) {
      RatMatrix j = rat_matrix_from_json(v["J"], where + "/J");
      if (j.rows() != j.cols() || j.rows() % 2 != 0 || j.rows() == 0)
        invalid(where + "/J", "J must be square of even rank");
      model = build(j, where + "/J");
    } else if (v.contains("product_elliptic")) {
      Integer g = integer_from_json(v["product_elliptic"], where + "/product_elliptic");
      if (g < 1 || g > 64) invalid(where + "/product_elliptic", "dimension must be in [1, 64]");
      model = av::product_elliptic(g.get_ui());
    } else {
      if (!v["dual_of"].is_string()) parse_fail(where + "/dual_of", "expected a variety name");
      std::string base = v["dual_of"].get<std::string>();
      if (stack.count(name)) invalid(where, "cyclic dual_of reference");
      stack.insert(name);
      resolve(base, stack);
      stack.erase(name);
      model = av::dual_av(f_.varieties.at(base).model);
    }
    if (v.contains("g")) {
      Integer g = integer_from_json(v["g"], where + "/g");
      if (g != static_cast<long>(model.dimension()))
        invalid(where, "declared g = " + to_string(g) + " but the lattice has rank " +
                           std::to_string(model.lattice_rank()));
    }
    f_.varieties[name] = {model};
  }

 private:
  static av::AbelianVarietyModel build(const RatMatrix& j, const std::string& where) {
    try {
      return av::AbelianVarietyModel(j);
    } catch (const Error& e) {
      invalid(where, e.what());
    }
  }

  const Json& section_;
  InstanceFile& f_;
};

template <class F>
auto checked(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    fail(ErrorCode::kValidationError, where + ": " + e.what());
  }
}

}  // namespace

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json integers_to_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(to_string(z));
  return out;
}

RatMatrix rat_matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array of rows");
  const std::size_t r = j.size();
  std::size_t c = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array()) parse_fail(where + "/" + std::to_string(i), "expected a row array");
    if (i == 0) c = j[i].size();
    if (j[i].size() != c)
      invalid(where + "/" + std::to_string(i), "ragged matrix: rows have different lengths");
  }
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < c; ++k)
      m(i, k) = rational_from_json(j[i][k], where + "/" + std::to_string(i) + "/" + std::to_string(k));
  return m;
}

IntMatrix int_matrix_from_json(const Json& j, const std::string& where) {
  RatMatrix m = rat_matrix_from_json(j, where);
  if (!lattice::is_integral(m)) invalid(where, "expected an integer matrix");
  return lattice::to_integer(m);
}

Integer integer_from_json(const Json& j, const std::string& where) {
  Rational q = rational_from_json(j, where);
  if (q.get_den() != 1) invalid(where, "expected an integer");
  return q.get_num();
}

std::vector<Integer> integers_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array");
  std::vector<Integer> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(integer_from_json(j[i], where + "/" + std::to_string(i)));
  return out;
}

const av::AbelianVarietyModel& variety_named(const InstanceFile& f,
                                             const std::string& name,
                                             const std::string& where) {
  auto it = f.varieties.find(name);
  if (it == f.varieties.end()) invalid(where, "unknown variety \"" + name + "\"");
  return it->second.model;
}

av::BrauerRepresentative brauer_or_trivial(const InstanceFile& f, const AmbientRef& ref) {
  const auto& x = variety_named(f, ref.variety, "ambient");
  if (ref.brauer.empty()) return av::trivial_brauer(x);
  auto it = f.brauer.find(ref.brauer);
  if (it == f.brauer.end()) invalid("ambient", "unknown Brauer class \"" + ref.brauer + "\"");
  if (it->second.variety != ref.variety)
    invalid("ambient", "Brauer class \"" + ref.brauer + "\" lives on \"" + it->second.variety + "\"");
  return it->second.rep;
}

symplectic::TwistedSymplecticModel resolve_ambient(const InstanceFile& f,
                                                   const AmbientRef& ref) {
  return symplectic::quotient_by_isotropic(variety_named(f, ref.variety, "ambient"),
                                           brauer_or_trivial(f, ref));
}

AmbientRef ambient_from_json(const InstanceFile& f, const Json& j, const std::string& where) {
  AmbientRef r;
  if (j.is_string()) {
    r.variety = j.get<std::string>();
  } else {
    only_keys(j, {"variety", "brauer"}, where);
    r.variety = string_member(j, "variety", where);
    if (j.contains("brauer")) r.brauer = string_member(j, "brauer", where);
  }
  variety_named(f, r.variety, where + "/variety");
  if (!r.brauer.empty()) {
    auto it = f.brauer.find(r.brauer);
    if (it == f.brauer.end()) invalid(where + "/brauer", "unknown Brauer class \"" + r.brauer + "\"");
    if (it->second.variety != r.variety)
      invalid(where + "/brauer", "Brauer class lives on \"" + it->second.variety + "\"");
  }
  return r;
}

Json ambient_to_json(const AmbientRef& r) {
  Json j = {{"variety", r.variety}};
  if (!r.brauer.empty()) j["brauer"] = r.brauer;
  return j;
}

InstanceFile parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::string what = e.what();
    auto pos = what.find("syntax error");
    fail(ErrorCode::kParseError, location(text, e.byte) + ": " +
                                     (pos == std::string::npos ? what : what.substr(pos)));
  }
  only_keys(doc, {"format", "varieties", "brauer", "polarizations", "morphisms", "params"}, "");
  reject_floats(doc, "");
  const Json& fmt = member(doc, "format", "/");
  if (!fmt.is_number_integer() || fmt.get<long>() != 1)
    parse_fail("/format", "unsupported format (expected 1)");

  InstanceFile f;
  const Json empty = Json::object();
  auto section = [&](const char* key) -> const Json& {
    auto it = doc.find(key);
    if (it == doc.end()) return empty;
    if (!it->is_object()) parse_fail(std::string("/") + key, "expected an object");
    return *it;
  };

  const Json& vs = section("varieties");
  Resolver res(vs, f);
  for (auto it = vs.begin(); it != vs.end(); ++it) {
    std::set<std::string> stack;
    res.resolve(it.key(), stack);
  }

  const Json& bs = section("brauer");
  for (auto it = bs.begin(); it != bs.end(); ++it) {
    const std::string where = "/brauer/" + it.key();
    const Json& b = it.value();
    only_keys(b, {"variety", "n", "e_alpha"}, where);
    std::string vname = string_member(b, "variety", where);
    const auto& x = variety_named(f, vname, where + "/variety");
    Integer n = integer_from_json(member(b, "n", where), where + "/n");
    if (n < 1) invalid(where + "/n", "n must be positive");
    IntMatrix e = b.contains("e_alpha") ? int_matrix_from_json(b["e_alpha"], where + "/e_alpha")
                                        : IntMatrix(x.lattice_rank(), x.lattice_rank());
    if (e.rows() != x.lattice_rank() || e.cols() != x.lattice_rank())
      invalid(where + "/e_alpha", "e_alpha must be " + std::to_string(x.lattice_rank()) + "x" +
                                      std::to_string(x.lattice_rank()));
    av::BrauerRepresentative rep{x, n, e};
    if (!av::validate_brauer_rep(rep))
      invalid(where + "/e_alpha",
              "e_alpha must be alternating mod n with entries in [0, n) and zero diagonal");
    f.brauer[it.key()] = {vname, rep};
  }

  const Json& ps = section("polarizations");
  for (auto it = ps.begin(); it != ps.end(); ++it) {
    const std::string where = "/polarizations/" + it.key();
    const Json& p = it.value();
    only_keys(p, {"variety", "E"}, where);
    std::string vname = string_member(p, "variety", where);
    const auto& x = variety_named(f, vname, where + "/variety");
    IntMatrix e = int_matrix_from_json(member(p, "E", where), where + "/E");
    if (e.rows() != x.lattice_rank() || e.cols() != x.lattice_rank())
      invalid(where + "/E", "E must be " + std::to_string(x.lattice_rank()) + "x" +
                                std::to_string(x.lattice_rank()));
    av::Polarization pol = checked(where, [&] { return av::Polarization(x, e); });
    f.polarizations[it.key()] = {vname, pol};
  }

  const Json& ms = section("morphisms");
  for (auto it = ms.begin(); it != ms.end(); ++it) {
    const std::string where = "/morphisms/" + it.key();
    const Json& m = it.value();
    only_keys(m, {"kind", "source", "target", "matrix", "multiplier"}, where);
    std::string kind = string_member(m, "kind", where);
    MorphismEntry e;
    e.matrix = int_matrix_from_json(member(m, "matrix", where), where + "/matrix");
    if (kind == "homomorphism") {
      if (m.contains("multiplier")) parse_fail(where, "a homomorphism has no multiplier");
      e.kind = MorphismEntry::Kind::kHomomorphism;
      e.source = string_member(m, "source", where);
      e.target = string_member(m, "target", where);
      const auto& s = variety_named(f, e.source, where + "/source");
      const auto& t = variety_named(f, e.target, where + "/target");
      checked(where, [&] { return av::Homomorphism(s, t, e.matrix); });
    } else if (kind == "symplectic") {
      e.kind = MorphismEntry::Kind::kSymplectic;
      e.source_ambient = ambient_from_json(f, member(m, "source", where), where + "/source");
      e.target_ambient = ambient_from_json(f, member(m, "target", where), where + "/target");
      e.multiplier = m.contains("multiplier")
                         ? integer_from_json(m["multiplier"], where + "/multiplier")
                         : Integer(1);
      const std::size_t d = 2 * variety_named(f, e.source_ambient.variety, where).lattice_rank();
      if (e.matrix.rows() != d || e.matrix.cols() != d)
        invalid(where + "/matrix", "matrix must be " + std::to_string(d) + "x" + std::to_string(d));
      checked(where, [&] {
        auto s = resolve_ambient(f, e.source_ambient);
        auto t = resolve_ambient(f, e.target_ambient);
        return symplectic::SymplecticMorphism(s.A, t.A, e.matrix, e.multiplier);
      });
    } else {
      parse_fail(where + "/kind", "expected \"homomorphism\" or \"symplectic\"");
    }
    f.morphisms[it.key()] = e;
  }

  if (doc.contains("params")) {
    if (!doc["params"].is_object()) parse_fail("/params", "expected an object");
    f.params = doc["params"];
  }
  return f;
}

Json instance_to_json(const InstanceFile& f) {
  Json doc = {{"format", 1}};
  Json vs = Json::object();
  for (const auto& [name, v] : f.varieties) vs[name] = {{"J", matrix_to_json(v.model.complex_structure())}};
  doc["varieties"] = vs;
  Json bs = Json::object();
  for (const auto& [name, b] : f.brauer)
    bs[name] = {{"variety", b.variety}, {"n", to_string(b.rep.n)}, {"e_alpha", matrix_to_json(b.rep.e_alpha)}};
  doc["brauer"] = bs;
  Json ps = Json::object();
  for (const auto& [name, p] : f.polarizations)
    ps[name] = {{"variety", p.variety}, {"E", matrix_to_json(p.pol.form())}};
  doc["polarizations"] = ps;
  Json ms = Json::object();
  for (const auto& [name, m] : f.morphisms) {
    Json j = {{"matrix", matrix_to_json(m.matrix)}};
    if (m.kind == MorphismEntry::Kind::kHomomorphism) {
      j["kind"] = "homomorphism";
      j["source"] = m.source;
      j["target"] = m.target;
    } else {
      j["kind"] = "symplectic";
      j["source"] = ambient_to_json(m.source_ambient);
      j["target"] = ambient_to_json(m.target_ambient);
      j["multiplier"] = to_string(m.multiplier);
    }
    ms[name] = j;
  }
  doc["morphisms"] = ms;
  doc["params"] = normalize_numbers(f.params);
  return doc;
}

std::string emit_instance(const InstanceFile& f) {
  return instance_to_json(f).dump(2) + "\n";
}

}  // namespace avsym::cli
