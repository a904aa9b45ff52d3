/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "doctest.h"
#include "lattice/matrix.hpp"
#include "lattice/normal_form.hpp"
#include "lattice/sublattice.hpp"
#include "selftest/oracles.hpp"
#include "support/generators.hpp"

using namespace avsym;
using namespace avsym::lattice;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  return {v.begin(), v.end()};
}

IntMatrix cols(std::initializer_list<std::initializer_list<long>> c) {
  // Build from column vectors.
  std::vector<std::vector<long>> cv;
  for (auto& x : c) cv.emplace_back(x);
  IntMatrix m(cv.empty() ? 0 : cv[0].size(), cv.size());
  for (std::size_t j = 0; j < cv.size(); ++j)
    for (std::size_t i = 0; i < cv[j].size(); ++i) m(i, j) = cv[j][i];
  return m;
}

void check_smith(const IntMatrix& m, const SmithDecomposition& d) {
  REQUIRE(d.U * m * d.V == d.S);
  CHECK(abs(determinant(d.U)) == 1);
  CHECK(abs(determinant(d.V)) == 1);
  for (std::size_t i = 0; i < d.S.rows(); ++i)
    for (std::size_t j = 0; j < d.S.cols(); ++j)
      if (i != j) REQUIRE(d.S(i, j) == 0);
  for (std::size_t i = 0; i < d.rank(); ++i) {
    CHECK(d.S(i, i) == d.invariant_factors[i]);
    CHECK(d.invariant_factors[i] > 0);
    if (i + 1 < d.rank())
      CHECK(mpz_divisible_p(d.invariant_factors[i + 1].get_mpz_t(),
                            d.invariant_factors[i].get_mpz_t()));
  }
  for (std::size_t i = d.rank(); i < std::min(d.S.rows(), d.S.cols()); ++i)
    CHECK(d.S(i, i) == 0);
}

}  // namespace

TEST_CASE("matrix arithmetic and rationals") {
  IntMatrix a{{1, 2}, {3, 4}};
  CHECK(determinant(a) == -2);
  CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
  RatMatrix inv = inverse(to_rational(a));
  CHECK(inv * to_rational(a) == RatMatrix::identity(2));
  auto q = parse_rational("-4/6");
  REQUIRE(q.has_value());
  CHECK(to_string(*q) == "-2/3");
  CHECK(!parse_rational("1/0").has_value());
  CHECK(!parse_rational("abc").has_value());
  CHECK(!parse_rational("").has_value());
  CHECK(frac(Rational(-1, 2)) == Rational(1, 2));
  CHECK(mod_floor(-3, 5) == 2);
}

TEST_CASE("snf examples") {
  auto id = snf(IntMatrix::identity(3));
  CHECK(id.S == IntMatrix::identity(3));
  CHECK(id.invariant_factors == ints({1, 1, 1}));

  auto z = snf(IntMatrix(2, 2));
  CHECK(z.S.is_zero());
  CHECK(z.invariant_factors.empty());

  auto a = snf(IntMatrix{{2, 1}, {0, 2}});
  CHECK(a.invariant_factors == ints({1, 4}));
  check_smith(IntMatrix{{2, 1}, {0, 2}}, a);

  auto b = snf(IntMatrix{{4, 0}, {0, 6}});
  CHECK(b.invariant_factors == ints({2, 12}));

  IntMatrix rect{{2, 4, 6}, {0, 0, 3}};
  check_smith(rect, snf(rect));
  check_smith(IntMatrix(0, 3), snf(IntMatrix(0, 3)));
}

TEST_CASE("snf property: 1000 random matrices against the minors oracle") {
  Rng rng(0x5eed0001);
  for (int t = 0; t < 1000; ++t) {
    std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
    IntMatrix m = (t % 3 == 0) ? testgen::random_sparse(rng, r, c, 20)
                               : testgen::random_matrix(rng, r, c, 20);
    auto d = snf(m);
    check_smith(m, d);
    if (r <= 4 && c <= 4)
      CHECK(d.invariant_factors == oracle::minors_invariant_factors(m));
  }
}

TEST_CASE("snf is deterministic") {
  IntMatrix m{{6, 4, 2}, {3, 9, 12}, {5, 7, 1}};
  auto a = snf(m), b = snf(m);
  CHECK(a.U == b.U);
  CHECK(a.V == b.V);
}

TEST_CASE("hnf examples") {
  CHECK(hnf(IntMatrix::identity(3)) == IntMatrix::identity(3));
  CHECK(hnf(IntMatrix{{2}, {4}}) == IntMatrix{{2}, {4}});
  IntMatrix h = hnf(cols({{2, 0}, {1, 1}}));
  CHECK(h == cols({{1, 1}, {0, 2}}));
  Sublattice a = Sublattice::span(cols({{2, 0}, {1, 1}}));
  Sublattice b = Sublattice::span(h);
  CHECK(a.contains(b));
  CHECK(b.contains(a));
  CHECK(hnf(IntMatrix(3, 2)).cols() == 0);
}

TEST_CASE("hnf property: canonical under unimodular column changes") {
  Rng rng(0x5eed0002);
  for (int t = 0; t < 300; ++t) {
    std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
    IntMatrix m = testgen::random_matrix(rng, r, c, 9);
    IntMatrix q = testgen::random_unimodular(rng, c);
    IntMatrix h = hnf(m);
    CHECK(hnf(m * q) == h);
    CHECK(h.cols() == rank(m));
    CHECK(hnf(h) == h);
    // Same span: every column of m is in span(h) and vice versa.
    for (std::size_t j = 0; j < c; ++j) CHECK(solve_in_hnf(h, m.column(j)));
    CHECK(Sublattice::span(m).basis() == h);
  }
}

TEST_CASE("saturate examples") {
  Sublattice s = Sublattice::span(cols({{2, 0}}));
  CHECK(!s.saturated());
  Sublattice t = saturate(s);
  CHECK(t.saturated());
  CHECK(t == Sublattice::span(cols({{1, 0}})));
  CHECK(saturate(t) == t);
  CHECK(saturation_index(s) == 2);

  Sublattice u = Sublattice::span(cols({{2, 2}, {0, 4}}));
  CHECK(saturate(u) == Sublattice::full(2));
  CHECK(saturation_index(u) == 8);
}

TEST_CASE("saturate property: idempotent, span preserving, index") {
  Rng rng(0x5eed0003);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 2 + rng.below(4);
    std::size_t k = 1 + rng.below(n);
    IntMatrix g = testgen::random_matrix(rng, n, k, 6);
    if (rank(g) != k) continue;
    Sublattice s = Sublattice::span(g);
    Sublattice sat = saturate(s);
    CHECK(sat.saturated());
    CHECK(saturate(sat) == sat);
    CHECK(sat.contains(s));
    CHECK(sat.rank() == s.rank());
    CHECK(rank(hstack(s.basis(), sat.basis())) == s.rank());
    // Index = product of the inclusion's invariant factors = [sat : s].
    IntMatrix coords(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto x = solve_in_hnf(sat.basis(), s.basis().column(j));
      REQUIRE(x);
      coords.set_column(j, *x);
    }
    CHECK(abs(determinant(coords)) == saturation_index(s));
  }
}

TEST_CASE("cokernel_group examples and order") {
  CHECK(cokernel_group(IntMatrix::identity(3)).is_trivial());
  CHECK(cokernel_group(IntMatrix{{2, 0}, {0, 3}}).invariant_factors() == ints({6}));
  CHECK(cokernel_group(IntMatrix{{2, 0}, {0, 2}}).invariant_factors() == ints({2, 2}));
  CHECK_THROWS_AS(cokernel_group(IntMatrix{{1, 2}, {2, 4}}), Error);
  try {
    cokernel_group(IntMatrix(2, 2));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInfiniteCokernel);
  }
  Rng rng(0x5eed0004);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng.below(5);
    IntMatrix m = testgen::random_matrix(rng, n, n, 8);
    Integer d = determinant(m);
    if (d == 0) continue;
    CHECK(cokernel_group(m).order() == abs(d));
  }
}

TEST_CASE("lattice_intersect examples and property") {
  Sublattice s = Sublattice::span(cols({{1, 2}, {0, 3}}));
  CHECK(lattice_intersect(s, s) == s);
  CHECK(lattice_intersect(Sublattice::span(cols({{1, 0}})),
                          Sublattice::span(cols({{0, 1}})))
            .rank() == 0);
  CHECK(lattice_intersect(Sublattice::span(cols({{1, 1}})),
                          Sublattice::span(cols({{2, 0}, {0, 2}}))) ==
        Sublattice::span(cols({{2, 2}})));

  Rng rng(0x5eed0005);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 2 + rng.below(3);
    IntMatrix a = testgen::random_matrix(rng, n, 1 + rng.below(n), 5);
    IntMatrix b = testgen::random_matrix(rng, n, 1 + rng.below(n), 5);
    Sublattice sa = Sublattice::span(a), sb = Sublattice::span(b);
    Sublattice i = lattice_intersect(sa, sb);
    CHECK(sa.contains(i));
    CHECK(sb.contains(i));
    // Random integral combinations lying in both belong to the result.
    for (int r = 0; r < 5; ++r) {
      IntVector v(n, Integer(0));
      for (std::size_t j = 0; j < sa.rank(); ++j) {
        long c = rng.between(-4, 4);
        for (std::size_t x = 0; x < n; ++x) v[x] += c * sa.basis()(x, j);
      }
      if (sb.contains(v)) CHECK(i.contains(v));
    }
  }
}

TEST_CASE("rational_kernel examples") {
  CHECK(rational_kernel(RatMatrix(2, 2)) == Sublattice::full(2));
  CHECK(rational_kernel(RatMatrix::identity(2)).rank() == 0);
  Sublattice k = rational_kernel(to_rational(IntMatrix{{1, 2}}));
  CHECK(k == Sublattice::span(cols({{2, -1}})));
  CHECK(k.saturated());
  RatMatrix half(1, 2);
  half(0, 0) = Rational(1, 2);
  half(0, 1) = Rational(1, 3);
  Sublattice k2 = rational_kernel(half);
  CHECK(k2 == Sublattice::span(cols({{2, -3}})));
}

TEST_CASE("integer kernel is saturated and exact") {
  Rng rng(0x5eed0006);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + rng.below(4), c = 1 + rng.below(5);
    IntMatrix m = testgen::random_sparse(rng, r, c, 7);
    IntMatrix k = integer_kernel(m);
    CHECK(k.cols() == c - rank(m));
    CHECK((m * k).is_zero());
    CHECK(Sublattice::span(k).saturated());
  }
}
