/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "cli/commands.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "engine/equivalence.hpp"
#include "engine/random_instances.hpp"
#include "lattice/normal_form.hpp"
#include "selftest/acceptance.hpp"

namespace avsym::cli {

using lattice::Sublattice;
using lattice::to_string;
using symplectic::LagrangianSublattice;
using symplectic::SymplecticAV;

namespace {

struct Context {
  const InstanceFile* f = nullptr;
  const Options& opt;
  std::uint64_t seed;
  Report& report;

  const Json& params() const {
    static const Json empty = Json::object();
    return f ? f->params : empty;
  }
  const Json& need(const char* key) const {
    auto it = params().find(key);
    if (it == params().end())
      fail(ErrorCode::kInvalidArgument, std::string("/params: missing \"") + key + "\"");
    return *it;
  }
  std::string where(const char* key) const { return std::string("/params/") + key; }
  std::string name(const char* key) const {
    const Json& j = need(key);
    if (!j.is_string()) fail(ErrorCode::kParseError, where(key) + ": expected a name");
    return j.get<std::string>();
  }
};

Json group_json(const groups::FiniteAbelianGroup& g) {
  return {{"invariant_factors", integers_to_json(g.invariant_factors())},
          {"order", to_string(g.order())}};
}

Json vector_json(const lattice::RatVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

// An ambient symplectic lattice: A_(X,α) by names, or explicit {"J", "psi"}.
SymplecticAV ambient_av(const Context& c, const char* key) {
  const Json& j = c.need(key);
  if (j.is_object() && j.contains("psi")) {
    if (!j.contains("J")) fail(ErrorCode::kParseError, c.where(key) + ": missing \"J\"");
    RatMatrix jm = rat_matrix_from_json(j["J"], c.where(key) + "/J");
    IntMatrix psi = int_matrix_from_json(j["psi"], c.where(key) + "/psi");
    if (jm.rows() != psi.rows() || jm.cols() != psi.cols())
      fail(ErrorCode::kDimensionMismatch, c.where(key) + ": J and psi differ in size");
    return SymplecticAV(jm, psi);
  }
  return resolve_ambient(*c.f, ambient_from_json(*c.f, j, c.where(key))).A;
}

Sublattice basis_param(const Context& c, const char* key, std::size_t rank) {
  IntMatrix b = int_matrix_from_json(c.need(key), c.where(key));
  if (b.rows() != rank)
    fail(ErrorCode::kDimensionMismatch, c.where(key) + ": basis vectors must have " +
                                            std::to_string(rank) + " coordinates (one per row)");
  return lattice::Sublattice::span(b);
}

LagrangianSublattice lagrangian_param(const Context& c, const SymplecticAV& a, const char* key) {
  Sublattice s = basis_param(c, key, a.lattice_rank());
  if (!symplectic::is_lagrangian(s, a))
    fail(ErrorCode::kValidationError, c.where(key) + ": not a Lagrangian sublattice");
  return LagrangianSublattice(a, s);
}

const av::Polarization& polarization_param(const Context& c, const char* key) {
  std::string n = c.name(key);
  auto it = c.f->polarizations.find(n);
  if (it == c.f->polarizations.end())
    fail(ErrorCode::kValidationError, c.where(key) + ": unknown polarization \"" + n + "\"");
  return it->second.pol;
}

const MorphismEntry& morphism_param(const Context& c, const char* key) {
  std::string n = c.name(key);
  auto it = c.f->morphisms.find(n);
  if (it == c.f->morphisms.end())
    fail(ErrorCode::kValidationError, c.where(key) + ": unknown morphism \"" + n + "\"");
  return it->second;
}

Integer m_max_for(const Context& c, const Integer& n) {
  if (c.opt.m_max) return *c.opt.m_max;
  if (c.params().contains("m_max")) return integer_from_json(c.params()["m_max"], c.where("m_max"));
  return engine::default_m_max(n);
}

void cmd_snf(Context& c) {
  IntMatrix m = int_matrix_from_json(c.need("matrix"), c.where("matrix"));
  auto s = lattice::snf(m);
  c.report.result = {{"invariant_factors", integers_to_json(s.invariant_factors)},
                     {"rank", std::to_string(s.rank())},
                     {"S", matrix_to_json(s.S)},
                     {"U", matrix_to_json(s.U)},
                     {"V", matrix_to_json(s.V)}};
  if (m.rows() == m.cols() && s.rank() == m.rows()) {
    std::vector<Integer> nonunit;
    for (const auto& d : s.invariant_factors)
      if (d != 1) nonunit.push_back(d);
    c.report.result["cokernel"] = group_json(groups::FiniteAbelianGroup(nonunit));
  }
}

void cmd_group_shape(Context& c) {
  auto orders = integers_from_json(c.need("factors"), c.where("factors"));
  for (const auto& o : orders)
    if (o < 1) fail(ErrorCode::kInvalidArgument, c.where("factors") + ": orders must be positive");
  auto g = groups::FiniteAbelianGroup::from_orders(orders);
  auto d = groups::square_type_test(g);
  c.report.result = group_json(g);
  c.report.result["is_square_type"] = d.is_square_type;
  c.report.result["m_list"] = integers_to_json(d.m_list);
  c.report.verdict = d.is_square_type;
}

void cmd_heisenberg(Context& c) {
  auto orders = integers_from_json(c.need("factors"), c.where("factors"));
  for (const auto& o : orders)
    if (o < 1) fail(ErrorCode::kInvalidArgument, c.where("factors") + ": orders must be positive");
  auto k = groups::FiniteAbelianGroup::from_orders(orders);
  auto e = groups::heisenberg_pairing(k);
  bool nondeg = groups::pairing_is_nondegenerate(e);
  c.report.result = {{"K", group_json(k)},
                     {"group_factors", integers_to_json(e.group().invariant_factors())},
                     {"pairing", matrix_to_json(e.matrix())},
                     {"nondegenerate", nondeg}};
  if (nondeg) {
    auto sb = groups::symplectic_basis(e);
    c.report.result["m_list"] = integers_to_json(sb.decomposition.m_list);
    c.report.result["symplectic_basis"] = matrix_to_json(sb.generators);
  }
  c.report.verdict = nondeg;
}

void cmd_build_a(Context& c) {
  AmbientRef ref = ambient_from_json(*c.f, c.need("ambient"), c.where("ambient"));
  auto m = resolve_ambient(*c.f, ref);
  Json k = Json::array();
  for (const auto& p : symplectic::build_K_alpha(m.brauer)) k.push_back(vector_json(p.coords));
  bool descent = symplectic::verify_descent_relation(m);
  auto z = symplectic::embed_dual_lagrangian(m);
  c.report.result = {{"n", to_string(m.brauer.n)},
                     {"psi", matrix_to_json(m.A.form())},
                     {"complex_structure", matrix_to_json(m.A.complex_structure())},
                     {"pi", matrix_to_json(m.pi.matrix())},
                     {"basis_change", matrix_to_json(m.basis_change)},
                     {"index", to_string(Integer(abs(lattice::determinant(m.pi.matrix()))))},
                     {"K_alpha", k},
                     {"descent_relation", descent},
                     {"dual_lagrangian", matrix_to_json(z.basis())}};
  c.report.verdict = descent;
}

void cmd_lagrangian_check(Context& c) {
  SymplecticAV a = ambient_av(c, "ambient");
  Sublattice s = basis_param(c, "basis", a.lattice_rank());
  IntMatrix gram = s.basis().transpose() * a.form() * s.basis();
  bool isotropic = gram == IntMatrix(s.rank(), s.rank());
  bool lag = symplectic::is_lagrangian(s, a);
  c.report.result = {{"rank", std::to_string(s.rank())},
                     {"half_rank", std::to_string(a.half_rank())},
                     {"saturated", s.saturated()},
                     {"isotropic", isotropic},
                     {"is_lagrangian", lag},
                     {"is_complex", symplectic::is_complex_sublattice(s, a)},
                     {"basis", matrix_to_json(s.basis())}};
  c.report.verdict = lag;
}

void cmd_pair_lagrangians(Context& c) {
  SymplecticAV a = ambient_av(c, "ambient");
  auto z = lagrangian_param(c, a, "z");
  auto w = lagrangian_param(c, a, "w");
  auto inter = symplectic::lagrangian_intersection(z, w);
  auto h = symplectic::lagrangian_isogeny(z, w);
  auto p = symplectic::intersection_pairing(z, w);
  c.report.result = {{"intersection", group_json(inter)},
                     {"isogeny", {{"matrix", matrix_to_json(h.matrix)},
                                  {"kernel", group_json(h.kernel)},
                                  {"is_square_type", h.decomposition.is_square_type},
                                  {"m_list", integers_to_json(h.decomposition.m_list)}}},
                     {"pairing", {{"values", matrix_to_json(p.pairing.matrix())},
                                  {"generators", matrix_to_json(p.generators)},
                                  {"nondegenerate", groups::pairing_is_nondegenerate(p.pairing)}}}};
  c.report.verdict = h.decomposition.is_square_type;
}

void cmd_find_m(Context& c) {
  AmbientRef ref = ambient_from_json(*c.f, c.need("ambient"), c.where("ambient"));
  auto m = resolve_ambient(*c.f, ref);
  const auto& l = polarization_param(c, "polarization");
  SymplecticAV std_av = symplectic::standard_symplectic(m.base);
  LagrangianSublattice zp = c.params().contains("z")
                                ? lagrangian_param(c, std_av, "z")
                                : symplectic::preimage_lagrangian(m.pi, symplectic::embed_dual_lagrangian(m));
  const Integer& n = m.brauer.n;
  Integer cap = m_max_for(c, n);
  c.report.result = {{"n", to_string(n)}, {"m_max", to_string(cap)},
                     {"z_prime", matrix_to_json(zp.basis())}};
  Integer mult = symplectic::find_transverse_multiplier(zp, l, n, cap);
  auto emb = symplectic::iota_embedding(m, l, mult);
  auto gamma = symplectic::graph_lagrangian(av::phi_from_polarization(l), mult, std_av);
  c.report.result["m"] = to_string(mult);
  c.report.result["graph"] = matrix_to_json(gamma.basis());
  c.report.result["iota"] = matrix_to_json(emb.iota.matrix());
  c.report.result["iota_image"] = matrix_to_json(emb.image.basis());
  c.report.result["iota_injective"] = emb.image.lattice().saturated();
  c.report.verdict = true;
}

void cmd_kernel_test(Context& c) {
  const MorphismEntry& e = morphism_param(c, "morphism");
  if (e.kind != MorphismEntry::Kind::kHomomorphism)
    fail(ErrorCode::kInvalidArgument, c.where("morphism") + ": expected a homomorphism");
  av::Homomorphism f(variety_named(*c.f, e.source, "source"),
                     variety_named(*c.f, e.target, "target"), e.matrix);
  auto t = engine::kernel_square_test(f);
  c.report.result = {{"kernel", group_json(t.kernel)},
                     {"is_square_type", t.is_square},
                     {"m_list", integers_to_json(t.decomposition.m_list)}};
  c.report.verdict = t.is_square;
}

void cmd_pipeline(Context& c) {
  AmbientRef xr = ambient_from_json(*c.f, c.need("x"), c.where("x"));
  AmbientRef yr = ambient_from_json(*c.f, c.need("y"), c.where("y"));
  const MorphismEntry& e = morphism_param(c, "g");
  if (e.kind != MorphismEntry::Kind::kSymplectic)
    fail(ErrorCode::kNotSymplecticIso, c.where("g") + ": expected a symplectic morphism");
  auto src = resolve_ambient(*c.f, e.source_ambient);
  auto tgt = resolve_ambient(*c.f, e.target_ambient);
  symplectic::SymplecticMorphism g(src.A, tgt.A, e.matrix, e.multiplier);
  const auto& l = polarization_param(c, "polarization");
  const auto& xm = variety_named(*c.f, xr.variety, c.where("x"));
  const auto& ym = variety_named(*c.f, yr.variety, c.where("y"));
  auto a = brauer_or_trivial(*c.f, xr);
  auto b = brauer_or_trivial(*c.f, yr);
  auto w = engine::thm41_pipeline(xm, a, ym, b, g, l, m_max_for(c, b.n));
  const auto& pv = w.provenance;
  c.report.result = {
      {"witness", {{"matrix", matrix_to_json(w.isogeny.matrix())},
                   {"kernel", group_json(w.kernel)},
                   {"is_square_type", w.decomposition.is_square_type},
                   {"m_list", integers_to_json(w.decomposition.m_list)}}},
      {"provenance", {{"m", to_string(pv.m)},
                      {"m_max", to_string(m_max_for(c, b.n))},
                      {"z", matrix_to_json(pv.z_basis)},
                      {"z_prime", matrix_to_json(pv.z_prime_basis)},
                      {"iota", matrix_to_json(pv.iota)},
                      {"w_to_z_dual", matrix_to_json(pv.w_to_z_dual.matrix)},
                      {"intersection_order", to_string(pv.intersection_order)}}}};
  c.report.verdict = w.decomposition.is_square_type;
}

// Instance documents for generated objects.
InstanceFile brauer_document(const engine::TwistedInstance& t) {
  InstanceFile f;
  f.varieties["X"] = {t.x};
  f.varieties["Xd"] = {av::dual_av(t.x)};
  f.brauer["alpha"] = {"X", t.alpha};
  f.polarizations["L"] = {"Xd", t.l};
  f.params = {{"ambient", {{"variety", "X"}, {"brauer", "alpha"}}}, {"polarization", "L"}};
  return f;
}

InstanceFile pipeline_document(const engine::PipelineInstance& p) {
  InstanceFile f;
  f.varieties["X"] = {p.x};
  f.varieties["Y"] = {p.y};
  f.varieties["Yd"] = {av::dual_av(p.y)};
  f.brauer["alpha"] = {"X", p.alpha};
  f.brauer["beta"] = {"Y", p.beta};
  f.polarizations["L"] = {"Yd", p.l};
  MorphismEntry g;
  g.kind = MorphismEntry::Kind::kSymplectic;
  g.source_ambient = {"X", "alpha"};
  g.target_ambient = {"Y", "beta"};
  g.matrix = p.g.matrix();
  g.multiplier = 1;
  f.morphisms["g"] = g;
  f.params = {{"x", {{"variety", "X"}, {"brauer", "alpha"}}},
              {"y", {{"variety", "Y"}, {"brauer", "beta"}}},
              {"g", "g"},
              {"polarization", "L"},
              {"label", p.label}};
  return f;
}

void cmd_random(Context& c) {
  const Json& p = c.params();
  std::string kind = p.contains("kind") && p["kind"].is_string() ? p["kind"].get<std::string>() : "brauer";
  Integer g = p.contains("g") ? integer_from_json(p["g"], c.where("g")) : Integer(2);
  Integer n = p.contains("n") ? integer_from_json(p["n"], c.where("n")) : Integer(2);
  long trials = c.opt.trials.value_or(1);
  if (g < 1 || g > 8) fail(ErrorCode::kInvalidArgument, "/params/g: must be in [1, 8]");
  if (n < 1 || n > 1000) fail(ErrorCode::kInvalidArgument, "/params/n: must be in [1, 1000]");
  if (trials < 1 || trials > 1000) fail(ErrorCode::kInvalidArgument, "--trials must be in [1, 1000]");
  Json docs = Json::array();
  for (long i = 0; i < trials; ++i) {
    std::uint64_t s = c.seed + static_cast<std::uint64_t>(i);
    if (kind == "brauer") {
      docs.push_back(instance_to_json(brauer_document(engine::random_av_with_brauer(s, g.get_ui(), n))));
    } else if (kind == "pipeline") {
      docs.push_back(instance_to_json(pipeline_document(engine::pipeline_instance(s, g.get_ui(), n))));
    } else if (kind == "symplectic") {
      if (g > 2) fail(ErrorCode::kInvalidArgument, "/params/g: symplectic instances need g <= 2");
      auto inst = engine::random_symplectic_instance(s, g.get_ui());
      InstanceFile f;
      f.params = {{"ambient", {{"J", matrix_to_json(inst.A.complex_structure())},
                               {"psi", matrix_to_json(inst.A.form())}}},
                  {"z", matrix_to_json(inst.z.basis())},
                  {"w", matrix_to_json(inst.w.basis())},
                  {"shear", std::to_string(inst.shear)}};
      docs.push_back(instance_to_json(f));
    } else {
      fail(ErrorCode::kInvalidArgument, "/params/kind: expected brauer, pipeline or symplectic");
    }
  }
  c.report.result = {{"kind", kind}, {"g", to_string(g)}, {"n", to_string(n)}, {"instances", docs}};
}

void cmd_selftest(Context& c) {
  auto results = selftest::run_acceptance();
  Json list = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json j = {{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
    if (c.opt.timing) j["micros"] = std::to_string(r.micros);
    list.push_back(j);
    all = all && r.passed;
  }
  c.report.result = {{"criteria", list}};
  c.report.verdict = all;
}

using Handler = std::function<void(Context&)>;

const std::map<std::string, std::pair<Handler, bool>>& handlers() {
  // name -> (handler, needs an instance)
  static const std::map<std::string, std::pair<Handler, bool>> h = {
      {"snf", {cmd_snf, true}},
      {"group-shape", {cmd_group_shape, true}},
      {"heisenberg", {cmd_heisenberg, true}},
      {"build-a", {cmd_build_a, true}},
      {"lagrangian-check", {cmd_lagrangian_check, true}},
      {"pair-lagrangians", {cmd_pair_lagrangians, true}},
      {"find-m", {cmd_find_m, true}},
      {"kernel-test", {cmd_kernel_test, true}},
      {"pipeline", {cmd_pipeline, true}},
      {"random", {cmd_random, false}},
      {"selftest", {cmd_selftest, false}},
  };
  return h;
}

void set_error(Report& r, ErrorCode code, const std::string& message) {
  r.error = ReportError{code, message};
  r.exit_code = exit_code_for(code);
  r.verdict.reset();
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : handlers()) v.push_back(k);
    return v;
  }();
  return names;
}

Report run_command(const std::string& command, const InstanceFile* instance,
                   const Options& options) {
  Report r;
  r.command = command;
  r.seed = options.seed.value_or(kDefaultSeed);
  auto start = std::chrono::steady_clock::now();
  try {
    auto it = handlers().find(command);
    if (it == handlers().end()) fail(ErrorCode::kInvalidArgument, "unknown command \"" + command + "\"");
    if (it->second.second && !instance)
      fail(ErrorCode::kInvalidArgument, "command \"" + command + "\" needs an instance document");
    Context c{instance, options, r.seed, r};
    it->second.first(c);
    if (r.verdict && !*r.verdict) r.exit_code = kExitFalse;
  } catch (const Error& e) {
    set_error(r, e.code(), e.what());
  } catch (const std::exception& e) {
    set_error(r, ErrorCode::kInternal, e.what());
  }
  if (options.timing) {
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    r.timing_us = static_cast<std::uint64_t>(us.count());
  }
  return r;
}

Report run_command(const std::string& command, const std::optional<std::string>& input,
                   const Options& options) {
  if (!input) return run_command(command, static_cast<const InstanceFile*>(nullptr), options);
  InstanceFile f;
  try {
    f = parse_instance(*input);
  } catch (const Error& e) {
    Report r;
    r.command = command;
    r.seed = options.seed.value_or(kDefaultSeed);
    set_error(r, e.code(), e.what());
    return r;
  }
  return run_command(command, &f, options);
}

}  // namespace avsym::cli
