/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <set>

#include "doctest.h"
#include "engine/random_instances.hpp"
#include "lattice/normal_form.hpp"
#include "selftest/oracles.hpp"
#include "symplectic/symplectic.hpp"

using namespace avsym;
using namespace avsym::symplectic;
using av::AbelianVarietyModel;
using av::BrauerRepresentative;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  return {v.begin(), v.end()};
}

IntMatrix fixture_e_alpha() {
  return IntMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
}

BrauerRepresentative fixture_brauer() {
  return {av::product_elliptic(2), 2, fixture_e_alpha()};
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

LagrangianSublattice span_lag(const SymplecticAV& a, const IntMatrix& b) {
  return LagrangianSublattice(a, Sublattice::span(b, true));
}

IntMatrix coordinate_block(std::size_t d, bool upper) {
  IntMatrix id = IntMatrix::identity(d), z(d, d);
  return upper ? vstack(id, z) : vstack(z, id);
}

}  // namespace

TEST_CASE("standard symplectic model of an elliptic curve") {
  auto x = av::product_elliptic(1);
  SymplecticAV a = standard_symplectic(x);
  CHECK(a.form() == IntMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(a.half_rank() == 2);
  CHECK(is_lagrangian(Sublattice::span(coordinate_block(2, true)), a));
  CHECK(is_lagrangian(Sublattice::span(coordinate_block(2, false)), a));
  // Psi(e1, e3) = 1.
  CHECK_FALSE(is_lagrangian(Sublattice::span(IntMatrix{{1, 0}, {0, 0}, {0, 1}, {0, 0}}), a));
  // Rank too small.
  CHECK_FALSE(is_lagrangian(Sublattice::span(IntMatrix{{1}, {0}, {0}, {0}}), a));
  // Isotropic of rank 2 but not saturated.
  CHECK_FALSE(is_lagrangian(Sublattice::span(IntMatrix{{2, 0}, {0, 1}, {0, 0}, {0, 0}}), a));
  CHECK(product_with_dual(x).lattice_rank() == 4);
}

TEST_CASE("SymplecticAV validation") {
  SymplecticAV a = standard_symplectic(av::product_elliptic(1));
  const RatMatrix& j = a.complex_structure();
  CHECK(code_of([&] { SymplecticAV(j, a.form()); }) == ErrorCode::kOk);
  // Not unimodular.
  CHECK(code_of([&] { SymplecticAV(j, a.form() * 2); }) == ErrorCode::kValidationError);
  // Not symmetric.
  IntMatrix skew = a.form();
  skew(2, 0) = -1;
  CHECK(code_of([&] { SymplecticAV(j, skew); }) == ErrorCode::kValidationError);
  // Not J-invariant.
  IntMatrix tilt = a.form();
  tilt(0, 1) = tilt(1, 0) = 1;
  CHECK(code_of([&] { SymplecticAV(j, tilt); }) == ErrorCode::kValidationError);
  // The only J-invariant symmetric forms in rank 2 are multiples of I, which
  // are odd or not unimodular.
  auto j2 = to_rational(IntMatrix{{0, -1}, {1, 0}});
  CHECK(code_of([&] { SymplecticAV(j2, IntMatrix{{1, 0}, {0, 1}}); }) == ErrorCode::kValidationError);
  CHECK(code_of([&] { SymplecticAV(j2, IntMatrix{{2, 0}, {0, 2}}); }) == ErrorCode::kValidationError);
  CHECK(code_of([&] { SymplecticAV(RatMatrix::identity(4), a.form()); }) ==
        ErrorCode::kValidationError);
}

TEST_CASE("K_alpha generators") {
  CHECK(build_K_alpha(av::trivial_brauer(av::product_elliptic(2))).empty());
  auto k = build_K_alpha(fixture_brauer());
  REQUIRE(k.size() == 4);
  CHECK(k[0].coords == lattice::RatVector{Rational(1, 2), 0, 0, 0, 0, 0, Rational(1, 2), 0});
  // The subgroup generated inside (1/2)Z^8 / Z^8 has 16 elements.
  std::set<std::vector<Rational>> elems;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<Rational> v(8, Rational(0));
    for (std::size_t i = 0; i < 4; ++i)
      if (mask & (1u << i))
        for (std::size_t r = 0; r < 8; ++r) v[r] += k[i].coords[r];
    for (auto& q : v) q = lattice::frac(q);
    elems.insert(v);
  }
  CHECK(elems.size() == 16);
  CHECK(code_of([&] {
          build_K_alpha({av::product_elliptic(1), 2, IntMatrix{{1, 0}, {0, 0}}});
        }) == ErrorCode::kValidationError);
}

TEST_CASE("quotient by K_alpha") {
  SUBCASE("trivial class gives the standard model") {
    auto x = av::product_elliptic(2);
    auto m = quotient_by_isotropic(x, av::trivial_brauer(x));
    CHECK(m.A == standard_symplectic(x));
    CHECK(m.pi.matrix().is_identity());
    CHECK(m.pi.is_isomorphism());
    CHECK(verify_descent_relation(m));
  }
  SUBCASE("the 2-torsion fixture") {
    auto m = quotient_by_isotropic(av::product_elliptic(2), fixture_brauer());
    CHECK(abs(lattice::determinant(m.pi.matrix())) == 16);
    CHECK(abs(lattice::determinant(m.A.form())) == 1);
    CHECK(m.pi.multiplier() == 2);
    CHECK(verify_descent_relation(m));
    CHECK_FALSE(m.pi.is_isomorphism());
    auto z = embed_dual_lagrangian(m);
    CHECK(is_complex_sublattice(z.lattice(), m.A));
  }
  SUBCASE("mismatched variety") {
    CHECK(code_of([] {
            quotient_by_isotropic(av::product_elliptic(1), fixture_brauer());
          }) == ErrorCode::kDimensionMismatch);
  }
}

TEST_CASE("graph Lagrangians and the pairing-matrix isogeny") {
  auto x = av::product_elliptic(1);
  SymplecticAV a = standard_symplectic(x);
  auto l = av::product_polarization(av::dual_av(x), {1});
  auto phi = av::phi_from_polarization(l);

  auto g2 = graph_lagrangian(phi, 2, a);
  CHECK(g2.lattice() == Sublattice::span(IntMatrix{{0, 2}, {-2, 0}, {1, 0}, {0, 1}}));
  CHECK(is_complex_sublattice(g2.lattice(), a));
  CHECK(code_of([&] { graph_lagrangian(phi, 0, a); }) == ErrorCode::kInvalidArgument);
  av::Homomorphism sym(av::dual_av(x), x, IntMatrix{{1, 0}, {0, 1}});
  CHECK(code_of([&] { graph_lagrangian(sym, 1, a); }) == ErrorCode::kNotSymmetric);
  CHECK(code_of([&] { graph_lagrangian(phi, 1, standard_symplectic(av::product_elliptic(2))); }) ==
        ErrorCode::kDimensionMismatch);

  auto fib = span_lag(a, coordinate_block(2, false));
  auto base = span_lag(a, coordinate_block(2, true));

  auto id = lagrangian_isogeny(fib, base);
  CHECK(id.matrix.is_identity());
  CHECK(id.kernel.is_trivial());
  REQUIRE(id.homomorphism.has_value());

  auto h = lagrangian_isogeny(fib, g2);
  CHECK(h.kernel.invariant_factors() == ints({2, 2}));
  CHECK(h.decomposition.m_list == ints({2}));
  CHECK(lagrangian_intersection(fib, g2).order() == 4);
  CHECK(lagrangian_intersection(base, g2).is_trivial());

  CHECK(code_of([&] { lagrangian_intersection(fib, fib); }) == ErrorCode::kInfiniteIntersection);
  CHECK(code_of([&] { lagrangian_isogeny(g2, g2); }) == ErrorCode::kInfiniteIntersection);
}

TEST_CASE("intersection pairing examples") {
  auto x = av::product_elliptic(1);
  SymplecticAV a = standard_symplectic(x);
  auto fib = span_lag(a, coordinate_block(2, false));
  for (long k = 1; k <= 5; ++k) {
    auto l = av::product_polarization(av::dual_av(x), {k});
    auto w = graph_lagrangian(av::phi_from_polarization(l), 1, a);
    auto p = intersection_pairing(fib, w);
    CHECK(p.pairing.group().order() == k * k);
    CHECK(groups::pairing_is_nondegenerate(p.pairing));
    CHECK(oracle::check_intersection_pairing(a.form(), fib.basis(), w.basis(), p.pairing,
                                             p.generators, 7 + k) == "");
  }
  auto base = span_lag(a, coordinate_block(2, true));
  CHECK(intersection_pairing(fib, base).pairing.group().is_trivial());
}

TEST_CASE("preimage and image of Lagrangians") {
  auto m = quotient_by_isotropic(av::product_elliptic(2), fixture_brauer());
  auto z = embed_dual_lagrangian(m);
  auto zp = preimage_lagrangian(m.pi, z);
  CHECK(zp.lattice() == Sublattice::span(coordinate_block(4, false)));
  CHECK(image_lagrangian(m.pi, zp) == z);

  auto std_av = standard_symplectic(av::product_elliptic(2));
  auto base = span_lag(std_av, coordinate_block(4, true));
  auto img = image_lagrangian(m.pi, base);
  CHECK(preimage_lagrangian(m.pi, img) == base);
}

TEST_CASE("transverse multiplier examples") {
  auto x = av::product_elliptic(1);
  SymplecticAV a = standard_symplectic(x);
  auto l = av::product_polarization(av::dual_av(x), {1});
  auto gamma = graph_lagrangian(av::phi_from_polarization(l), 1, a);
  CHECK(find_transverse_multiplier(span_lag(a, coordinate_block(2, true)), l, 1, 50) == 1);
  CHECK(find_transverse_multiplier(gamma, l, 1, 50) == 2);
  CHECK(find_transverse_multiplier(span_lag(a, coordinate_block(2, false)), l, 1, 50) == 1);
  CHECK(find_transverse_multiplier(gamma, l, 3, 50) == 3);
  CHECK(code_of([&] { find_transverse_multiplier(gamma, l, 1, 1); }) ==
        ErrorCode::kSearchExhausted);

  // Graphs of different maps meet finitely.
  auto l2 = av::product_polarization(av::dual_av(x), {2});
  auto gamma2 = graph_lagrangian(av::phi_from_polarization(l2), 1, a);
  CHECK(find_transverse_multiplier(gamma2, l2, 1, 50) == 2);
  CHECK(find_transverse_multiplier(gamma2, l, 1, 50) == 1);
}

TEST_CASE("iota embedding on the fixture") {
  auto x = av::product_elliptic(2);
  auto m = quotient_by_isotropic(x, fixture_brauer());
  auto l = av::product_polarization(av::dual_av(x), {1, 1});
  auto emb = iota_embedding(m, l, 2);
  IntMatrix expect = m.pi.matrix() * vstack(l.form() * -2, IntMatrix::identity(4));
  CHECK(emb.iota.matrix() == expect);
  CHECK(emb.image.lattice() == Sublattice::span(expect));
  CHECK(emb.iota.target() == m.A.variety());
  CHECK(is_complex_sublattice(emb.image.lattice(), m.A));
  CHECK(code_of([&] { iota_embedding(m, l, 3); }) == ErrorCode::kNotDivisible);
  auto wrong = av::product_polarization(av::dual_av(av::product_elliptic(1)), {1});
  CHECK(code_of([&] { iota_embedding(m, wrong, 2); }) == ErrorCode::kDimensionMismatch);
}

TEST_CASE("random Lagrangian pairs: intersection, isogeny kernel and pairing") {
  int checked_pairings = 0;
  for (std::uint64_t s = 0; s < 300; ++s) {
    auto inst = engine::random_symplectic_instance(1000 + s, 1 + s % 2);
    const auto& a = inst.A;
    CAPTURE(s);
    REQUIRE(is_complex_sublattice(inst.z.lattice(), a));
    REQUIRE(is_complex_sublattice(inst.w.lattice(), a));

    IntMatrix both = hstack(inst.z.basis(), inst.w.basis());
    Integer det = abs(lattice::determinant(both));
    REQUIRE(det != 0);
    auto inter = lagrangian_intersection(inst.z, inst.w);
    CHECK(inter.order() == det);
    if (inst.shear == 0) CHECK(inter.is_trivial());

    auto h = lagrangian_isogeny(inst.z, inst.w);
    CHECK(h.kernel == inter);
    CHECK(h.decomposition.is_square_type);
    CHECK(h.matrix.rows() == a.half_rank());
    REQUIRE(h.homomorphism.has_value());
    CHECK(av::isogeny_kernel(*h.homomorphism) == inter);
    // Swapping roles gives the transposed matrix.
    auto hs = lagrangian_isogeny(inst.w, inst.z);
    CHECK(hs.matrix == h.matrix.transpose());

    auto p = intersection_pairing(inst.z, inst.w);
    CHECK(p.pairing.group() == inter);
    CHECK(groups::pairing_is_nondegenerate(p.pairing));
    if (inter.order() <= 256) {
      ++checked_pairings;
      CHECK(oracle::check_intersection_pairing(a.form(), inst.z.basis(), inst.w.basis(),
                                               p.pairing, p.generators, s) == "");
    }
  }
  CHECK(checked_pairings > 100);
}

TEST_CASE("shear by k times a principal form") {
  auto x = av::product_elliptic(2);
  SymplecticAV a = standard_symplectic(x);
  auto e = av::product_polarization(x, {1, 1}).form();
  auto fib = span_lag(a, coordinate_block(4, false));
  for (long k = 1; k <= 4; ++k) {
    auto w = span_lag(a, vstack(e * k, IntMatrix::identity(4)));
    auto g = lagrangian_intersection(fib, w);
    std::vector<Integer> expect = k == 1 ? ints({}) : ints({k, k, k, k});
    CHECK(g.invariant_factors() == expect);
  }
}

TEST_CASE("twisted model invariants over random Brauer classes") {
  for (std::uint64_t s = 0; s < 120; ++s) {
    std::size_t g = 1 + s % 3;
    Integer n = static_cast<long>(1 + (s / 3) % 4);
    auto inst = engine::random_av_with_brauer(5000 + s, g, n);
    CAPTURE(s);
    auto m = quotient_by_isotropic(inst.x, inst.alpha);
    Integer index = 1;
    for (std::size_t i = 0; i < 2 * g; ++i) index *= n;
    CHECK(abs(lattice::determinant(m.pi.matrix())) == index);
    CHECK(abs(lattice::determinant(m.A.form())) == 1);
    CHECK(verify_descent_relation(m));
    for (std::size_t i = 0; i < m.A.lattice_rank(); ++i) CHECK(m.A.form()(i, i) % 2 == 0);
    CHECK(build_K_alpha(inst.alpha).size() == (n == 1 ? 0 : 2 * g));
  }
}

TEST_CASE("preimages, transverse graphs and iota over random Brauer classes") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    std::size_t g = 1 + s % 3;
    Integer n = static_cast<long>(1 + (s / 3) % 4);
    auto inst = engine::random_av_with_brauer(9000 + s, g, n);
    CAPTURE(s);
    auto m = quotient_by_isotropic(inst.x, inst.alpha);
    auto std_av = standard_symplectic(inst.x);

    // Neutral component of the preimage of a Lagrangian is Lagrangian and
    // maps back onto it.
    auto z = embed_dual_lagrangian(m);
    auto zp = preimage_lagrangian(m.pi, z);
    CHECK(is_lagrangian(zp.lattice(), std_av));
    CHECK(image_lagrangian(m.pi, zp) == z);

    // Some multiple of n makes the graph transverse, and ι is injective with
    // complex Lagrangian image.
    Integer mm = find_transverse_multiplier(zp, inst.l, n, n * 50);
    CHECK(mm % n == 0);
    CHECK(mm <= n * 20);
    auto gam = graph_lagrangian(av::phi_from_polarization(inst.l), mm, std_av);
    CHECK_NOTHROW(lagrangian_intersection(zp, gam));
    auto emb = iota_embedding(m, inst.l, mm);
    CHECK(emb.image.lattice().saturated());
    CHECK(is_complex_sublattice(emb.image.lattice(), m.A));
    CHECK(is_lagrangian(emb.image.lattice(), m.A));
    auto h = lagrangian_isogeny(z, emb.image);
    CHECK(h.decomposition.is_square_type);

    // Every multiple of n gives an injective ι.
    CHECK(code_of([&] { iota_embedding(m, inst.l, n * 3); }) == ErrorCode::kOk);
  }
}
