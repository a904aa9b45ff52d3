/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "groups/pairing.hpp"

#include <algorithm>

#include "lattice/normal_form.hpp"

namespace avsym::groups {

using lattice::frac;
using lattice::mod_floor;

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace

AlternatingPairing::AlternatingPairing(FiniteAbelianGroup group,
                                       RatMatrix values)
    : group_(std::move(group)), values_(std::move(values)) {
  const std::size_t k = group_.num_generators();
  if (values_.rows() != k || values_.cols() != k)
    fail(ErrorCode::kValidationError, "pairing matrix must be k x k");
  const auto& m = group_.invariant_factors();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      values_(i, j) = frac(values_(i, j));
      if (!is_integer(values_(i, j) * m[i]) || !is_integer(values_(i, j) * m[j]))
        fail(ErrorCode::kValidationError, "pairing is not well defined");
    }
  for (std::size_t i = 0; i < k; ++i) {
    if (values_(i, i) != 0)
      fail(ErrorCode::kValidationError, "pairing is not alternating");
    for (std::size_t j = 0; j < i; ++j)
      if (frac(values_(i, j) + values_(j, i)) != 0)
        fail(ErrorCode::kValidationError, "pairing is not antisymmetric");
  }
}

Rational AlternatingPairing::operator()(const IntVector& x,
                                        const IntVector& y) const {
  const std::size_t k = group_.num_generators();
  if (x.size() != k || y.size() != k)
    fail(ErrorCode::kDimensionMismatch, "pairing argument length");
  Rational s = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j)
      if (y[j] != 0 && values_(i, j) != 0) s += values_(i, j) * x[i] * y[j];
  }
  return frac(s);
}

AlternatingPairing heisenberg_pairing(const FiniteAbelianGroup& k) {
  std::vector<Integer> f;
  for (const auto& m : k.invariant_factors()) {
    f.push_back(m);
    f.push_back(m);
  }
  const std::size_t n = f.size();
  RatMatrix e(n, n);
  for (std::size_t i = 0; i < n; i += 2) {
    Rational v(1, f[i]);
    v.canonicalize();
    e(i, i + 1) = v;
    e(i + 1, i) = -v;
  }
  return AlternatingPairing(FiniteAbelianGroup(std::move(f)), std::move(e));
}

bool pairing_is_nondegenerate(const AlternatingPairing& e) {
  const auto& m = e.group().invariant_factors();
  const std::size_t k = m.size();
  if (k == 0) return true;
  // Adjoint G -> Hom(G, Q/Z) = (+) Z/m_j, x -> (m_j e(x, g_j))_j. Injective
  // iff [A | diag(m)] spans Z^k.
  IntMatrix sys(k, 2 * k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      Rational a = e.matrix()(i, j) * m[j];
      sys(j, i) = a.get_num();
    }
    sys(j, k + j) = m[j];
  }
  auto d = lattice::snf(sys);
  if (d.rank() != k) return false;
  return std::all_of(d.invariant_factors.begin(), d.invariant_factors.end(),
                     [](const Integer& x) { return x == 1; });
}

SymplecticBasis symplectic_basis(const AlternatingPairing& e) {
  if (!pairing_is_nondegenerate(e))
    fail(ErrorCode::kDegeneratePairing, "pairing is degenerate");
  const FiniteAbelianGroup& g = e.group();
  const std::size_t k = g.num_generators();

  struct Plane {
    Integer m;
    IntVector a, b;
  };
  std::vector<Plane> planes;
  SubgroupPresentation cur{g, IntMatrix::identity(k)};
  while (!cur.group.is_trivial()) {
    const std::size_t r = cur.group.num_generators();
    const Integer m = cur.group.exponent();
    // The last generator is the lexicographically first element of maximal
    // order in the current coordinates.
    IntVector a = cur.generators.column(r - 1);
    // Partner: sum_j u_j y_j == 1 (mod m) where e(a, t_j) = u_j / m.
    Integer gacc = m;
    IntVector y(r, Integer(0));
    for (std::size_t j = 0; j < r; ++j) {
      Rational v = e(a, cur.generators.column(j)) * m;
      Integer u = v.get_num();
      Integer gn, s, t;
      mpz_gcdext(gn.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), gacc.get_mpz_t(),
                 u.get_mpz_t());
      for (std::size_t i = 0; i < j; ++i) y[i] *= s;
      y[j] = t;
      gacc = gn;
    }
    if (gacc != 1)
      fail(ErrorCode::kDegeneratePairing, "no partner of maximal order");
    IntVector b(k, Integer(0));
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < k; ++i) b[i] += y[j] * cur.generators(i, j);
    b = g.reduce(b);
    Rational target(1, m);
    target.canonicalize();
    ensure(e(a, b) == target, "symplectic_basis: partner pairing != 1/m");

    // Project every generator onto the orthogonal complement of <a, b>.
    IntMatrix proj(k, r);
    for (std::size_t j = 0; j < r; ++j) {
      IntVector t = cur.generators.column(j);
      Rational qa = e(a, t) * m;
      Rational sb = e(b, t) * m;
      Integer q = qa.get_num();
      Integer s = -sb.get_num();
      for (std::size_t i = 0; i < k; ++i) t[i] -= s * a[i] + q * b[i];
      t = g.reduce(t);
      proj.set_column(j, t);
    }
    SubgroupPresentation next = subgroup_presentation(g, proj);
    ensure(next.group.order() * m * m == cur.group.order(),
           "symplectic_basis: orthogonal complement has wrong order");
    planes.push_back({m, std::move(a), std::move(b)});
    cur = std::move(next);
  }

  std::reverse(planes.begin(), planes.end());
  SymplecticBasis out;
  out.decomposition.is_square_type = true;
  out.generators = IntMatrix(k, 2 * planes.size());
  for (std::size_t p = 0; p < planes.size(); ++p) {
    out.decomposition.m_list.push_back(planes[p].m);
    out.generators.set_column(2 * p, planes[p].a);
    out.generators.set_column(2 * p + 1, planes[p].b);
  }
  return out;
}

bool validate_bundle_data(const HomogeneousBundleData& d) {
  if (d.n < 1) return false;
  if (!(d.e.group() == d.H)) return false;
  if (d.H.order() != d.n * d.n) return false;
  if (!mpz_divisible_p(d.n.get_mpz_t(), d.H.exponent().get_mpz_t())) return false;
  return pairing_is_nondegenerate(d.e);
}

}  // namespace avsym::groups
