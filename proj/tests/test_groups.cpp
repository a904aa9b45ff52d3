/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "doctest.h"
#include "groups/finite_group.hpp"
#include "groups/pairing.hpp"
#include "lattice/normal_form.hpp"
#include "selftest/oracles.hpp"
#include "support/generators.hpp"

using namespace avsym;
using namespace avsym::groups;

namespace {

FiniteAbelianGroup grp(std::initializer_list<long> f) {
  return FiniteAbelianGroup(std::vector<Integer>(f.begin(), f.end()));
}

std::vector<Integer> ints(std::initializer_list<long> v) {
  return {v.begin(), v.end()};
}

// Checks the symplectic basis relations on every generator pair and that the
// generators span the group.
void check_symplectic_basis(const AlternatingPairing& e, const SymplecticBasis& b) {
  const auto& m = b.decomposition.m_list;
  const std::size_t r = m.size();
  REQUIRE(b.generators.cols() == 2 * r);
  for (std::size_t i = 0; i < 2 * r; ++i)
    for (std::size_t j = 0; j < 2 * r; ++j) {
      Rational v = e(b.generators.column(i), b.generators.column(j));
      Rational want = 0;
      if (i / 2 == j / 2 && i != j) {
        want = Rational(1) / Rational(m[i / 2]);
        if (i % 2 == 1) want = lattice::frac(-want);
      }
      CHECK(v == want);
    }
  for (std::size_t i = 0; i < r; ++i) {
    CHECK(e.group().element_order(b.generators.column(2 * i)) == m[i]);
    CHECK(e.group().element_order(b.generators.column(2 * i + 1)) == m[i]);
    if (i + 1 < r) CHECK(mpz_divisible_p(m[i + 1].get_mpz_t(), m[i].get_mpz_t()));
  }
  // Span: the generators together with the relations diag(orders) give the
  // whole coordinate lattice.
  IntMatrix rel = IntMatrix::diagonal(std::span<const Integer>(e.group().invariant_factors()));
  auto d = lattice::snf(hstack(b.generators, rel));
  CHECK(d.rank() == e.group().num_generators());
  for (const auto& f : d.invariant_factors) CHECK(f == 1);
}

}  // namespace

TEST_CASE("finite abelian group basics") {
  CHECK_THROWS_AS(grp({4, 2}), Error);
  CHECK_THROWS_AS(grp({1, 2}), Error);
  auto g = FiniteAbelianGroup::from_orders(ints({2, 3}));
  CHECK(g.invariant_factors() == ints({6}));
  auto h = FiniteAbelianGroup::from_orders(ints({4, 6, 1}));
  CHECK(h.invariant_factors() == ints({2, 12}));
  CHECK(h.order() == 24);
  CHECK(h.exponent() == 12);
  CHECK(to_string(h) == "Z/2 + Z/12");
  CHECK(to_string(FiniteAbelianGroup()) == "0");
  int count = 0;
  h.for_each_element([&](const IntVector&) { ++count; });
  CHECK(count == 24);
  CHECK(h.element_order(IntVector{Integer(1), Integer(4)}) == 6);
}

TEST_CASE("square_type_test examples") {
  auto a = square_type_test(grp({2, 2, 6, 6}));
  CHECK(a.is_square_type);
  CHECK(a.m_list == ints({2, 6}));
  auto b = square_type_test(grp({2, 4}));
  CHECK(!b.is_square_type);
  CHECK(b.m_list.empty());
  auto c = square_type_test(FiniteAbelianGroup());
  CHECK(c.is_square_type);
  CHECK(c.m_list.empty());
  auto d = square_type_test(grp({3, 3, 3, 3}));
  CHECK(d.is_square_type);
  CHECK(d.m_list == ints({3, 3}));
  CHECK(!square_type_test(grp({2, 2, 2})).is_square_type);
}

TEST_CASE("heisenberg_pairing examples") {
  auto e = heisenberg_pairing(grp({2}));
  CHECK(e.group() == grp({2, 2}));
  CHECK(e.matrix()(0, 1) == Rational(1, 2));
  CHECK(e.matrix()(1, 0) == Rational(1, 2));
  CHECK(e.matrix()(0, 0) == 0);

  auto t = heisenberg_pairing(FiniteAbelianGroup());
  CHECK(t.group().is_trivial());
  CHECK(t.matrix().rows() == 0);

  auto f = heisenberg_pairing(grp({2, 4}));
  CHECK(f.group() == grp({2, 2, 4, 4}));
  CHECK(f.matrix()(0, 1) == Rational(1, 2));
  CHECK(f.matrix()(2, 3) == Rational(1, 4));
  CHECK(f.matrix()(3, 2) == Rational(3, 4));
  CHECK(f.matrix()(0, 2) == 0);
  CHECK(oracle::is_nondegenerate(oracle::to_small(f)));
}

TEST_CASE("heisenberg pairing agrees with the commutator formula") {
  // Library generator order is (a1, b1, a2, b2, ...); the oracle uses
  // (k1, ..., kr, chi1, ..., chir).
  for (auto k : {std::vector<long>{2}, {3}, {2, 4}, {2, 2}, {3, 6}, {2, 2, 4}}) {
    std::vector<Integer> kk(k.begin(), k.end());
    auto e = heisenberg_pairing(FiniteAbelianGroup(kk));
    auto small = oracle::to_small(e);
    const std::size_t r = k.size();
    for (const auto& x : oracle::all_elements(small.orders))
      for (std::size_t j = 0; j < 2 * r; ++j) {
        std::vector<long> y(2 * r, 0);
        y[j] = 1;
        std::vector<long> xo(2 * r), yo(2 * r);
        for (std::size_t i = 0; i < r; ++i) {
          xo[i] = x[2 * i];
          xo[r + i] = x[2 * i + 1];
          yo[i] = y[2 * i];
          yo[r + i] = y[2 * i + 1];
        }
        CHECK(small(x, y) == oracle::heisenberg_value_scaled(k, small.N, xo, yo));
      }
  }
}

TEST_CASE("pairing validation") {
  RatMatrix bad(2, 2);
  bad(0, 1) = Rational(1, 3);
  bad(1, 0) = Rational(2, 3);
  CHECK_THROWS_AS(AlternatingPairing(grp({2, 2}), bad), Error);  // not well defined
  RatMatrix diag(2, 2);
  diag(0, 0) = Rational(1, 2);
  CHECK_THROWS_AS(AlternatingPairing(grp({2, 2}), diag), Error);
  RatMatrix asym(2, 2);
  asym(0, 1) = Rational(1, 4);
  asym(1, 0) = Rational(1, 4);
  CHECK_THROWS_AS(AlternatingPairing(grp({4, 4}), asym), Error);
}

TEST_CASE("pairing_is_nondegenerate examples") {
  CHECK(pairing_is_nondegenerate(heisenberg_pairing(grp({2}))));
  CHECK(!pairing_is_nondegenerate(AlternatingPairing(grp({2, 2}), RatMatrix(2, 2))));
  CHECK(!pairing_is_nondegenerate(AlternatingPairing(grp({2}), RatMatrix(1, 1))));
  // Nontrivial but degenerate: (Z/4)^2 with e(g1, g2) = 1/2.
  RatMatrix half(2, 2);
  half(0, 1) = Rational(1, 2);
  half(1, 0) = Rational(1, 2);
  AlternatingPairing h(grp({4, 4}), half);
  CHECK(!pairing_is_nondegenerate(h));
  CHECK(!oracle::is_nondegenerate(oracle::to_small(h)));
  CHECK_THROWS_AS(symplectic_basis(h), Error);
}

TEST_CASE("symplectic_basis examples") {
  auto e3 = heisenberg_pairing(grp({3}));
  auto b3 = symplectic_basis(e3);
  CHECK(b3.decomposition.m_list == ints({3}));
  check_symplectic_basis(e3, b3);
  CHECK(oracle::has_hyperbolic_pair(oracle::to_small(e3), 3));

  auto t = symplectic_basis(heisenberg_pairing(FiniteAbelianGroup()));
  CHECK(t.decomposition.is_square_type);
  CHECK(t.decomposition.m_list.empty());
  CHECK(t.generators.cols() == 0);

  auto e22 = heisenberg_pairing(grp({2, 2}));
  auto b22 = symplectic_basis(e22);
  CHECK(b22.decomposition.m_list == ints({2, 2}));
  check_symplectic_basis(e22, b22);
  CHECK(oracle::has_hyperbolic_pair(oracle::to_small(e22), 2));

  try {
    symplectic_basis(AlternatingPairing(grp({2, 2}), RatMatrix(2, 2)));
    FAIL("expected DegeneratePairing");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kDegeneratePairing);
  }
}

TEST_CASE("symplectic_basis on non-Heisenberg pairings") {
  // (Z/6)^2 + (Z/2)^2 presented as (Z/2 + Z/2 + Z/6 + Z/6) with a mixed form.
  RatMatrix m(4, 4);
  auto set = [&](int i, int j, Rational v) {
    m(i, j) = v;
    m(j, i) = -v;
  };
  set(0, 2, Rational(1, 2));
  set(1, 3, Rational(1, 2));
  set(2, 3, Rational(1, 6));
  AlternatingPairing e(grp({2, 2, 6, 6}), m);
  REQUIRE(oracle::is_nondegenerate(oracle::to_small(e)));
  REQUIRE(pairing_is_nondegenerate(e));
  auto b = symplectic_basis(e);
  CHECK(b.decomposition.m_list == ints({2, 6}));
  check_symplectic_basis(e, b);
}

TEST_CASE("Heisenberg roundtrip property: 200 random K") {
  Rng rng(0x5eed0101);
  for (int t = 0; t < 200; ++t) {
    std::size_t nf = rng.below(4);
    std::vector<Integer> orders;
    for (std::size_t i = 0; i < nf; ++i) orders.push_back(rng.between(2, 12));
    auto k = FiniteAbelianGroup::from_orders(orders);
    auto e = heisenberg_pairing(k);
    CHECK(pairing_is_nondegenerate(e));
    auto b = symplectic_basis(e);
    CHECK(b.decomposition.m_list == k.invariant_factors());
    check_symplectic_basis(e, b);
    if (e.group().order() <= 256) {
      auto s = oracle::to_small(e);
      CHECK(oracle::is_alternating(s));
      CHECK(oracle::is_nondegenerate(s));
    }
  }
}

TEST_CASE("square type iff some nondegenerate pairing exists (order <= 64)") {
  for (long n = 1; n <= 64; ++n)
    for (const auto& orders : oracle::abelian_groups_of_order(n)) {
      std::vector<Integer> f(orders.begin(), orders.end());
      FiniteAbelianGroup g(f);
      bool square = square_type_test(g).is_square_type;
      CHECK_MESSAGE(square == oracle::admits_nondegenerate_pairing(orders),
                    to_string(g));
      if (square) {
        // Constructive direction: the Heisenberg pairing on the half.
        std::vector<Integer> half;
        for (std::size_t i = 0; i < f.size(); i += 2) half.push_back(f[i]);
        auto e = heisenberg_pairing(FiniteAbelianGroup(half));
        CHECK(e.group() == g);
        CHECK(pairing_is_nondegenerate(e));
      }
    }
}

TEST_CASE("brute force: every square group of order <= 256 via Heisenberg") {
  int groups_seen = 0;
  for (long n = 1; n <= 256; ++n)
    for (const auto& orders : oracle::abelian_groups_of_order(n)) {
      std::vector<Integer> f(orders.begin(), orders.end());
      FiniteAbelianGroup g(f);
      ++groups_seen;
      auto sq = square_type_test(g);
      if (!sq.is_square_type) continue;
      auto e = heisenberg_pairing(FiniteAbelianGroup(sq.m_list));
      auto s = oracle::to_small(e);
      CHECK(oracle::is_alternating(s));
      CHECK(oracle::is_nondegenerate(s));
      CHECK(pairing_is_nondegenerate(e));
    }
  CHECK(groups_seen > 256);
}

TEST_CASE("library nondegeneracy agrees with brute force on random pairings") {
  Rng rng(0x5eed0102);
  for (int t = 0; t < 300; ++t) {
    std::size_t nf = 1 + rng.below(4);
    std::vector<Integer> orders;
    for (std::size_t i = 0; i < nf; ++i) orders.push_back(rng.between(2, 6));
    auto g = FiniteAbelianGroup::from_orders(orders);
    if (g.order() > 256 || g.is_trivial()) continue;
    const auto& m = g.invariant_factors();
    const std::size_t k = m.size();
    RatMatrix v(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        Rational x(rng.between(0, m[i].get_si() - 1), m[i]);
        x.canonicalize();
        v(i, j) = x;
        v(j, i) = -x;
      }
    AlternatingPairing e(g, v);
    auto s = oracle::to_small(e);
    CHECK(oracle::is_alternating(s));
    if (g.order() <= 64) CHECK(oracle::is_bilinear(s));
    bool nd = pairing_is_nondegenerate(e);
    CHECK(nd == oracle::is_nondegenerate(s));
    if (nd) {
      auto b = symplectic_basis(e);
      check_symplectic_basis(e, b);
      CHECK(square_type_test(g).m_list == b.decomposition.m_list);
    }
  }
}

TEST_CASE("subgroup presentation and cokernel presentation") {
  auto g = grp({2, 4});
  IntMatrix gens(2, 1);
  gens(1, 0) = 2;
  auto sp = subgroup_presentation(g, gens);
  CHECK(sp.group == grp({2}));
  auto cp = cokernel_presentation(IntMatrix{{2, 0}, {0, 3}});
  CHECK(cp.group == grp({6}));
}

TEST_CASE("validate_bundle_data examples") {
  HomogeneousBundleData ok{2, grp({2, 2}), heisenberg_pairing(grp({2}))};
  CHECK(validate_bundle_data(ok));
  HomogeneousBundleData cyc{2, grp({4}), AlternatingPairing(grp({4}), RatMatrix(1, 1))};
  CHECK(!validate_bundle_data(cyc));
  HomogeneousBundleData wrong{3, grp({2, 2}), heisenberg_pairing(grp({2}))};
  CHECK(!validate_bundle_data(wrong));
  HomogeneousBundleData six{6, grp({6, 6}), heisenberg_pairing(grp({6}))};
  CHECK(validate_bundle_data(six));
  HomogeneousBundleData exp{4, grp({4, 4}), heisenberg_pairing(grp({4}))};
  CHECK(validate_bundle_data(exp));
  HomogeneousBundleData big{2, grp({4, 4}), heisenberg_pairing(grp({4}))};
  CHECK(!validate_bundle_data(big));
}
