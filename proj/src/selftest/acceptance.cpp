/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "selftest/acceptance.hpp"

#include <chrono>
#include <functional>

#include "cli/commands.hpp"
#include "engine/equivalence.hpp"
#include "engine/random_instances.hpp"
#include "lattice/normal_form.hpp"
#include "lattice/sublattice.hpp"
#include "selftest/oracles.hpp"
#include "symplectic/symplectic.hpp"

namespace avsym::selftest {

using lattice::Integer;
using lattice::IntMatrix;
using lattice::RatMatrix;
using lattice::Sublattice;
using symplectic::LagrangianSublattice;
using symplectic::SymplecticMorphism;

namespace {

// Thrown by require(); carries the first broken check.
struct CheckFailed {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed{what};
}

std::string str(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + lattice::to_string(v[i]);
  return s + ")";
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

bool divides(const Integer& a, const Integer& b) {
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

std::string normal_forms() {
  Rng rng(0xacce0001);
  int with_oracle = 0;
  for (int t = 0; t < 1000; ++t) {
    std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.between(-20, 20);
    // Some rank-deficient inputs too.
    if (r > 1 && rng.below(4) == 0)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * rng.between(-3, 3);
    auto d = lattice::snf(m);
    const std::string id = "matrix " + std::to_string(t);
    require(d.U * m * d.V == d.S, id + ": U M V != S");
    require(abs(lattice::determinant(d.U)) == 1, id + ": U not unimodular");
    require(abs(lattice::determinant(d.V)) == 1, id + ": V not unimodular");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) require(d.S(i, j) == 0, id + ": S not diagonal");
    for (std::size_t i = 0; i < d.rank(); ++i) {
      require(d.S(i, i) == d.invariant_factors[i], id + ": diagonal differs from factors");
      require(d.invariant_factors[i] > 0, id + ": nonpositive factor");
      if (i + 1 < d.rank())
        require(divides(d.invariant_factors[i], d.invariant_factors[i + 1]), id + ": chain broken");
    }
    for (std::size_t i = d.rank(); i < std::min(r, c); ++i) require(d.S(i, i) == 0, id + ": tail not zero");
    if (r <= 4 && c <= 4) {
      ++with_oracle;
      require(d.invariant_factors == oracle::minors_invariant_factors(m),
              id + ": factors differ from gcd of minors");
    }
  }
  return "1000 matrices up to 6x6, " + std::to_string(with_oracle) + " against the minors oracle";
}

std::string heisenberg_roundtrip() {
  Rng rng(0xacce0002);
  int brute = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t nf = 1 + rng.below(3);
    std::vector<Integer> orders;
    for (std::size_t i = 0; i < nf; ++i) orders.push_back(rng.between(1, 12));
    auto k = groups::FiniteAbelianGroup::from_orders(orders);
    auto e = groups::heisenberg_pairing(k);
    const std::string id = "K = " + str(k.invariant_factors());
    require(groups::pairing_is_nondegenerate(e), id + ": degenerate");
    auto b = groups::symplectic_basis(e);
    require(b.decomposition.is_square_type && b.decomposition.m_list == k.invariant_factors(),
            id + ": symplectic basis does not recover K");
    if (e.group().order() <= 256) {
      ++brute;
      auto s = oracle::to_small(e);
      require(oracle::is_alternating(s) && oracle::is_nondegenerate(s), id + ": brute force disagrees");
      // Bilinearity is cubic in the order.
      if (e.group().order() <= 64) require(oracle::is_bilinear(s), id + ": not bilinear");
    }
  }
  int groups_seen = 0, square = 0;
  for (long n = 1; n <= 256; ++n)
    for (const auto& orders : oracle::abelian_groups_of_order(n)) {
      ++groups_seen;
      groups::FiniteAbelianGroup g(std::vector<Integer>(orders.begin(), orders.end()));
      auto sq = groups::square_type_test(g);
      const std::string id = "group " + str(g.invariant_factors());
      if (n <= 64)
        require(sq.is_square_type == oracle::admits_nondegenerate_pairing(orders),
                id + ": square type disagrees with exhaustion");
      if (!sq.is_square_type) continue;
      ++square;
      auto e = groups::heisenberg_pairing(groups::FiniteAbelianGroup(sq.m_list));
      require(e.group() == g, id + ": Heisenberg group differs");
      auto s = oracle::to_small(e);
      require(oracle::is_alternating(s) && oracle::is_nondegenerate(s),
              id + ": Heisenberg pairing fails brute force");
    }
  return "200 random K (" + std::to_string(brute) + " brute-forced); " + std::to_string(square) +
         " of " + std::to_string(groups_seen) + " groups of order <= 256 are square and check out";
}

std::string lagrangian_pairs() {
  int exhaustive = 0, sheared = 0, violations = 0;
  for (std::uint64_t s = 0; s < 300; ++s) {
    auto inst = engine::random_symplectic_instance(0xacce0300 + s, 1 + s % 2);
    const std::string id = "instance " + std::to_string(s);
    try {
      Integer det = abs(lattice::determinant(hstack(inst.z.basis(), inst.w.basis())));
      auto inter = symplectic::lagrangian_intersection(inst.z, inst.w);
      require(inter.order() == det, id + ": |Z n W| differs from the index");
      auto h = symplectic::lagrangian_isogeny(inst.z, inst.w);
      require(h.kernel == inter, id + ": kernel differs from Z n W");
      const auto& f = h.kernel.invariant_factors();
      require(f.size() % 2 == 0, id + ": odd number of factors");
      for (std::size_t i = 0; i + 1 < f.size(); i += 2)
        require(f[i] == f[i + 1], id + ": factors do not pair");
      auto p = symplectic::intersection_pairing(inst.z, inst.w);
      require(p.pairing.group() == inter, id + ": pairing on the wrong group");
      require(groups::pairing_is_nondegenerate(p.pairing), id + ": degenerate pairing");
      if (inter.order() <= 10000) {
        ++exhaustive;
        std::string why = oracle::check_intersection_pairing(inst.A.form(), inst.z.basis(),
                                                             inst.w.basis(), p.pairing,
                                                             p.generators, s);
        require(why.empty(), id + ": " + why);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTheoremViolation) throw;
      ++violations;
    }
    if (inst.shear > 0) ++sheared;
  }
  require(violations == 0, std::to_string(violations) + " TheoremViolation");
  return "300 pairs (" + std::to_string(sheared) + " sheared), " + std::to_string(exhaustive) +
         " pairings verified exhaustively";
}

std::string twisted_models() {
  for (std::uint64_t s = 0; s < 100; ++s) {
    std::size_t g = 1 + s % 3;
    Integer n = static_cast<long>(1 + (s / 3) % 4);
    auto inst = engine::random_av_with_brauer(0xacce0400 + s, g, n);
    auto m = symplectic::quotient_by_isotropic(inst.x, inst.alpha);
    const std::string id = "instance " + std::to_string(s);
    const IntMatrix& psi = m.A.form();
    require(abs(lattice::determinant(psi)) == 1, id + ": not unimodular");
    require(psi.transpose() == psi, id + ": dual form is not minus the form");
    for (std::size_t i = 0; i < psi.rows(); ++i) require(psi(i, i) % 2 == 0, id + ": odd diagonal");
    RatMatrix pq = lattice::to_rational(psi);
    const RatMatrix& j = m.A.complex_structure();
    require(j.transpose() * pq * j == pq, id + ": not J-compatible");
    require(symplectic::verify_descent_relation(m), id + ": descent relation");
    const IntMatrix& f = m.pi.matrix();
    IntMatrix std_psi = symplectic::standard_symplectic(inst.x).form();
    require(f.transpose() * psi * f == std_psi * Integer(n), id + ": n psi_std != pi^ psi pi");
    auto t = symplectic::quotient_by_isotropic(inst.x, av::trivial_brauer(inst.x));
    require(t.A == symplectic::standard_symplectic(inst.x) && t.pi.matrix().is_identity(),
            id + ": trivial class is not X x X^");
  }
  return "100 classes with g <= 3, n <= 4";
}

// Half-rank sublattice {(S xi, xi)} of Z^2N; Lagrangian for the standard
// form exactly when S is skew. With `lagrangian` false S gets a nonzero
// symmetric part.
IntMatrix random_graph(Rng& rng, std::size_t d, bool lagrangian) {
  IntMatrix s(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      s(i, j) = rng.between(-3, 3);
      s(j, i) = -s(i, j);
    }
  if (!lagrangian) {
    std::size_t i = rng.below(d), j = rng.below(d);
    long v = rng.coin() ? 1 : -1;
    s(i, j) += v;
    if (i != j) s(j, i) += v;
  }
  return vstack(s, IntMatrix::identity(d));
}

// Random skew matrix vanishing on the first `keep` coordinates. Graphs of S
// and S + D meet in rank nullity(D) >= keep.
IntMatrix partial_difference(Rng& rng, std::size_t d, std::size_t keep) {
  IntMatrix diff(d, d);
  for (std::size_t i = keep; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      diff(i, j) = rng.between(-3, 3);
      diff(j, i) = -diff(i, j);
    }
  return diff;
}

Sublattice push(const IntMatrix& f, const IntMatrix& basis) {
  return lattice::saturated_span(lattice::to_rational(f * basis));
}

Sublattice pull(const IntMatrix& f, const IntMatrix& basis) {
  return lattice::saturated_span(lattice::inverse(lattice::to_rational(f)) *
                                 lattice::to_rational(basis));
}

std::string isogeny_transfer() {
  int lag[2] = {0, 0}, finite[2] = {0, 0};
  for (std::uint64_t s = 0; s < 200; ++s) {
    std::size_t g = 1 + s % 3;
    Integer n = static_cast<long>(1 + (s / 3) % 4);
    auto pi = engine::pipeline_instance(0xacce0500 + s, g, n);
    auto mx = symplectic::quotient_by_isotropic(pi.x, pi.alpha);
    auto my = symplectic::quotient_by_isotropic(pi.y, pi.beta);
    // Alternate between π_X and g ∘ π_X, both of multiplier n.
    bool composed = s % 2 == 1;
    SymplecticMorphism f = composed
        ? SymplecticMorphism(mx.pi.source(), pi.g.target(), pi.g.matrix() * mx.pi.matrix(), n)
        : mx.pi;
    const auto& src = f.source();
    const auto& tgt = f.target();
    const std::size_t d = src.half_rank();
    const std::string id = "instance " + std::to_string(s);
    Rng rng(0xacce0550 + s);

    // Source to target: Z' Lagrangian iff its image is.
    bool want = rng.coin();
    Sublattice zp = Sublattice::span(random_graph(rng, d, want));
    require(symplectic::is_lagrangian(zp, src) == want, id + ": generator broken");
    Sublattice img = push(f.matrix(), zp.basis());
    require(symplectic::is_lagrangian(img, tgt) == want, id + ": image Lagrangian mismatch");
    if (want) {
      ++lag[0];
      LagrangianSublattice lz(src, zp);
      require(symplectic::image_lagrangian(f, lz).lattice() == img, id + ": image_lagrangian");
      require(symplectic::preimage_lagrangian(f, symplectic::image_lagrangian(f, lz)).lattice() == zp,
              id + ": preimage of image");
    }

    // Target to source. Target sublattices come through π_Y, which is
    // independent of f when f = g ∘ π_X.
    want = rng.coin();
    const IntMatrix& to_target = composed ? my.pi.matrix() : mx.pi.matrix();
    Sublattice z = push(to_target, random_graph(rng, d, want));
    require(symplectic::is_lagrangian(z, tgt) == want, id + ": target generator broken");
    Sublattice pre = pull(f.matrix(), z.basis());
    require(symplectic::is_lagrangian(pre, src) == want, id + ": preimage Lagrangian mismatch");
    if (want) {
      ++lag[1];
      LagrangianSublattice lz(tgt, z);
      require(symplectic::preimage_lagrangian(f, lz).lattice() == pre, id + ": preimage_lagrangian");
      require(symplectic::image_lagrangian(f, symplectic::preimage_lagrangian(f, lz)) == lz,
              id + ": image of preimage");
    }

    // Finiteness: Z' ∩ W' has rank 0 iff f(Z') ∩ f(W') is finite.
    IntMatrix a = random_graph(rng, 2 * g, true);
    std::size_t keep = rng.below(3) == 0 ? rng.below(2 * g + 1) : 0;
    IntMatrix diff = partial_difference(rng, 2 * g, keep);
    IntMatrix b = a + vstack(diff, IntMatrix(2 * g, 2 * g));
    Sublattice sa = Sublattice::span(a), sb = Sublattice::span(b);
    bool up_finite = lattice::lattice_intersect(sa, sb).rank() == 0;
    LagrangianSublattice fa(tgt, push(f.matrix(), a)), fb(tgt, push(f.matrix(), b));
    ErrorCode down = code_of([&] { symplectic::lagrangian_intersection(fa, fb); });
    require(down == ErrorCode::kOk || down == ErrorCode::kInfiniteIntersection,
            id + ": unexpected error in the intersection");
    require(up_finite == (down == ErrorCode::kOk), id + ": finiteness not preserved");
    ++finite[up_finite ? 0 : 1];
  }
  return "200 isogenies: " + std::to_string(lag[0]) + " Lagrangian images, " +
         std::to_string(lag[1]) + " Lagrangian preimages, " + std::to_string(finite[0]) +
         " finite and " + std::to_string(finite[1]) + " infinite intersections";
}

std::string corpus_search() {
  int exhausted = 0;
  Integer worst = 0;
  auto corpus = engine::pipeline_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& p = corpus[i];
    const std::string id = "corpus " + std::to_string(i);
    auto mx = symplectic::quotient_by_isotropic(p.x, p.alpha);
    auto my = symplectic::quotient_by_isotropic(p.y, p.beta);
    auto z = symplectic::image_lagrangian(p.g, symplectic::embed_dual_lagrangian(mx));
    auto zp = symplectic::preimage_lagrangian(my.pi, z);
    const Integer& n = p.beta.n;
    Integer m;
    try {
      m = symplectic::find_transverse_multiplier(zp, p.l, n, engine::default_m_max(n));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSearchExhausted) throw;
      ++exhausted;
      continue;
    }
    require(divides(n, m) && m <= 20 * n, id + ": m = " + lattice::to_string(m) + " above 20n");
    if (m / n > worst) worst = m / n;
    auto emb = symplectic::iota_embedding(my, p.l, m);
    Sublattice raw = Sublattice::span(emb.iota.matrix(), true);
    require(lattice::saturation_index(raw) == 1, id + ": iota not injective");
    require(emb.image.lattice() == raw, id + ": image differs from the span of iota");
    require(symplectic::is_lagrangian(raw, my.A), id + ": image not Lagrangian");
    require(symplectic::is_complex_sublattice(raw, my.A), id + ": image not complex");
    require(code_of([&] { symplectic::lagrangian_intersection(z, emb.image); }) == ErrorCode::kOk,
            id + ": Z and W not transverse");
  }
  require(exhausted == 0, std::to_string(exhausted) + " SearchExhausted");
  return std::to_string(corpus.size()) + " instances, 0 exhausted, largest m/n = " +
         lattice::to_string(worst);
}

std::string pipeline_runs() {
  auto x = av::product_elliptic(1);
  auto y = av::dual_av(x);
  auto mx = symplectic::quotient_by_isotropic(x, av::trivial_brauer(x));
  auto my = symplectic::quotient_by_isotropic(y, av::trivial_brauer(y));
  IntMatrix swap{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  SymplecticMorphism g(mx.A, my.A, swap, 1);
  auto l = av::product_polarization(av::dual_av(y), {1});
  auto w = engine::thm41_pipeline(x, av::trivial_brauer(x), y, av::trivial_brauer(y), g, l, 50);
  require(w.isogeny.matrix().is_identity(), "swap: witness is not the identity");
  require(w.kernel.is_trivial() && w.decomposition.is_square_type, "swap: kernel not trivial");
  require(w.provenance.m == 1, "swap: m != 1");

  int square = 0, violations = 0;
  auto corpus = engine::pipeline_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& p = corpus[i];
    const std::string id = "corpus " + std::to_string(i) + " (" + p.label + ")";
    try {
      auto r = engine::thm41_pipeline(p.x, p.alpha, p.y, p.beta, p.g, p.l,
                                      engine::default_m_max(p.beta.n));
      auto t = engine::kernel_square_test(r.isogeny);
      require(t.is_square && t.kernel == r.kernel, id + ": kernel " + groups::to_string(t.kernel) +
                                                       " is not of square type");
      require(r.kernel.order() == r.provenance.intersection_order, id + ": |ker| != |Z n W|");
      ++square;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTheoremViolation) throw;
      ++violations;
    }
  }
  require(violations == 0, std::to_string(violations) + " TheoremViolation");
  return "swap case gives the identity; " + std::to_string(square) + " corpus witnesses of square type";
}

std::string decision_examples() {
  auto yes = groups::square_type_test(groups::FiniteAbelianGroup::from_orders(ints({2, 2, 6, 6})));
  require(yes.is_square_type && yes.m_list == ints({2, 6}), "(2,2,6,6) library verdict");
  auto no = groups::square_type_test(groups::FiniteAbelianGroup::from_orders(ints({2, 4})));
  require(!no.is_square_type && no.m_list.empty(), "(2,4) library verdict");

  const char* accept = embedded_file("fixtures/shape_2266.json");
  const char* reject = embedded_file("fixtures/shape_24.json");
  require(accept && reject, "decision fixtures missing");
  auto ra = cli::run_command("group-shape", std::optional<std::string>(accept), {});
  require(ra.exit_code == cli::kExitOk && ra.verdict == true, "(2,2,6,6) CLI exit code");
  require(ra.result["m_list"] == cli::Json::array({"2", "6"}), "(2,2,6,6) CLI m_list");
  auto rr = cli::run_command("group-shape", std::optional<std::string>(reject), {});
  require(rr.exit_code == cli::kExitFalse && rr.verdict == false, "(2,4) CLI exit code");
  return "(2,2,6,6) accepted with m_list (2,6), (2,4) rejected; CLI exits 0 and 1";
}

std::string golden_reports() {
  int n = 0;
  for (const auto& gc : golden_cases()) {
    const std::string id = std::string(gc.command) + " on " + (*gc.fixture ? gc.fixture : "no input");
    std::optional<std::string> input;
    if (*gc.fixture) {
      const char* text = embedded_file(std::string("fixtures/") + gc.fixture);
      require(text != nullptr, id + ": fixture missing");
      input = text;
      require(code_of([&] { cli::parse_instance(*input); }) == ErrorCode::kOk, id + ": fixture does not parse");
    }
    const char* expect = embedded_file(std::string("golden/") + gc.golden);
    require(expect != nullptr, id + ": golden missing");
    auto r = cli::run_command(gc.command, input, {});
    auto fmt = std::string(gc.format) == "json" ? cli::Format::kJson : cli::Format::kText;
    require(cli::emit_report(r, fmt) == expect, id + ": report differs from " + gc.golden);
    ++n;
  }
  // Normalization is a fixed point.
  const char* doc = embedded_file("fixtures/g2n2.json");
  const char* norm = embedded_file("golden/g2n2.normalized.json");
  require(doc && norm, "normalization files missing");
  std::string once = cli::emit_instance(cli::parse_instance(doc));
  require(once == norm, "g2n2 normalization differs from the golden");
  require(cli::emit_instance(cli::parse_instance(once)) == once, "normalization not idempotent");
  return std::to_string(n) + " reports and one normalized document byte-identical";
}

struct Criterion {
  const char* name;
  std::uint64_t limit_ms;
  std::string (*run)();
};

}  // namespace

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"snf_3x3.json", "snf", "json", "snf_3x3.json"},
      {"shape_2266.json", "group-shape", "json", "shape_2266.json"},
      {"shape_24.json", "group-shape", "text", "shape_24.txt"},
      {"heisenberg_2_6.json", "heisenberg", "json", "heisenberg_2_6.json"},
      {"g2n2.json", "build-a", "json", "g2n2.build-a.json"},
      {"g2n2.json", "find-m", "json", "g2n2.find-m.json"},
      {"g2n2.json", "pipeline", "json", "g2n2.pipeline.json"},
      {"g2n2.json", "pipeline", "text", "g2n2.pipeline.txt"},
      {"swap_g1.json", "pipeline", "json", "swap_g1.pipeline.json"},
      {"kernel2.json", "kernel-test", "json", "kernel2.json"},
      {"pair_shear2.json", "pair-lagrangians", "json", "pair_shear2.json"},
      {"pair_shear2.json", "lagrangian-check", "text", "pair_shear2.check.txt"},
      {"", "random", "json", "random.json"},
  };
  return cases;
}

std::vector<CriterionResult> run_acceptance() {
  static const Criterion criteria[] = {
      {"normal-form oracle suite", 5000, normal_forms},
      {"pairing classification roundtrip", 10000, heisenberg_roundtrip},
      {"Lagrangian pair isogeny", 30000, lagrangian_pairs},
      {"twisted symplectic model", 10000, twisted_models},
      {"Lagrangians and finiteness under isogeny", 20000, isogeny_transfer},
      {"transverse multiplier search", 0, corpus_search},
      {"end-to-end witness", 60000, pipeline_runs},
      {"square-type decision examples", 0, decision_examples},
      {"CLI golden files", 0, golden_reports},
  };
  std::vector<CriterionResult> out;
  for (const auto& c : criteria) {
    CriterionResult r;
    r.name = c.name;
    r.limit_ms = c.limit_ms;
    auto start = std::chrono::steady_clock::now();
    try {
      r.detail = c.run();
      r.passed = true;
    } catch (const CheckFailed& f) {
      r.detail = f.what;
    } catch (const Error& e) {
      r.detail = std::string(error_code_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.micros = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::microseconds>(
                                              std::chrono::steady_clock::now() - start)
                                              .count());
    if (r.passed && r.limit_ms && r.micros > r.limit_ms * 1000) {
      r.passed = false;
      r.detail += "; took " + std::to_string(r.micros / 1000) + " ms, limit " +
                  std::to_string(r.limit_ms) + " ms";
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace avsym::selftest
