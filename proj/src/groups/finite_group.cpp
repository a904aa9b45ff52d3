/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "groups/finite_group.hpp"

#include "lattice/normal_form.hpp"

namespace avsym::groups {

using lattice::mod_floor;

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Integer> factors)
    : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      fail(ErrorCode::kInvalidArgument, "invariant factors must be >= 2");
    if (i > 0 &&
        !mpz_divisible_p(factors_[i].get_mpz_t(), factors_[i - 1].get_mpz_t()))
      fail(ErrorCode::kInvalidArgument,
           "invariant factors must form a divisibility chain");
  }
}

FiniteAbelianGroup FiniteAbelianGroup::from_orders(
    const std::vector<Integer>& orders) {
  for (const auto& o : orders)
    if (o < 1) fail(ErrorCode::kInvalidArgument, "cyclic orders must be >= 1");
  auto d = lattice::snf(IntMatrix::diagonal(std::span<const Integer>(orders)));
  std::vector<Integer> f;
  for (const auto& x : d.invariant_factors)
    if (x != 1) f.push_back(x);
  return FiniteAbelianGroup(std::move(f));
}

Integer FiniteAbelianGroup::order() const {
  Integer o = 1;
  for (const auto& m : factors_) o *= m;
  return o;
}

Integer FiniteAbelianGroup::exponent() const {
  return factors_.empty() ? Integer(1) : factors_.back();
}

IntVector FiniteAbelianGroup::reduce(IntVector x) const {
  if (x.size() != factors_.size())
    fail(ErrorCode::kDimensionMismatch, "element length != generator count");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod_floor(x[i], factors_[i]);
  return x;
}

bool FiniteAbelianGroup::is_zero(const IntVector& x) const {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!mpz_divisible_p(x[i].get_mpz_t(), factors_[i].get_mpz_t())) return false;
  return true;
}

Integer FiniteAbelianGroup::element_order(const IntVector& x) const {
  Integer ord = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Integer g, o;
    mpz_gcd(g.get_mpz_t(), x[i].get_mpz_t(), factors_[i].get_mpz_t());
    o = factors_[i] / g;
    mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), o.get_mpz_t());
  }
  return ord;
}

void FiniteAbelianGroup::for_each_element(
    const std::function<void(const IntVector&)>& f) const {
  IntVector x(factors_.size(), Integer(0));
  while (true) {
    f(x);
    std::size_t i = x.size();
    while (i > 0) {
      --i;
      if (++x[i] < factors_[i]) break;
      x[i] = 0;
      if (i == 0) return;
    }
    if (x.empty()) return;
  }
}

std::string to_string(const FiniteAbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::string s;
  for (const auto& m : g.invariant_factors()) {
    if (!s.empty()) s += " + ";
    s += "Z/" + m.get_str();
  }
  return s;
}

namespace {

SubgroupPresentation present_quotient(const IntMatrix& relations,
                                      const IntMatrix& images,
                                      const std::vector<Integer>* ambient) {
  // Z^s / span(relations), generators mapped through `images`.
  const std::size_t s = relations.rows();
  auto d = lattice::snf(relations);
  if (d.rank() != s)
    fail(ErrorCode::kInfiniteCokernel, "quotient is infinite");
  IntMatrix uinv = lattice::unimodular_inverse(d.U);
  IntMatrix gens_all = images * uinv;
  std::vector<Integer> f;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < s; ++i)
    if (d.invariant_factors[i] != 1) {
      f.push_back(d.invariant_factors[i]);
      keep.push_back(i);
    }
  IntMatrix gens(images.rows(), keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j)
    for (std::size_t r = 0; r < images.rows(); ++r) {
      gens(r, j) = gens_all(r, keep[j]);
      if (ambient) gens(r, j) = mod_floor(gens(r, j), (*ambient)[r]);
    }
  return {FiniteAbelianGroup(std::move(f)), std::move(gens)};
}

}  // namespace

SubgroupPresentation subgroup_presentation(const FiniteAbelianGroup& ambient,
                                           const IntMatrix& gens) {
  const std::size_t k = ambient.num_generators();
  if (gens.rows() != k)
    fail(ErrorCode::kDimensionMismatch, "generator length != ambient rank");
  const std::size_t s = gens.cols();
  if (s == 0) return {FiniteAbelianGroup(), IntMatrix(k, 0)};
  std::vector<Integer> mods = ambient.invariant_factors();
  // Relations among the generators: z with gens*z in diag(m) Z^k.
  IntMatrix sys = lattice::hstack(gens, -IntMatrix::diagonal(std::span<const Integer>(mods)));
  IntMatrix ker = lattice::integer_kernel(sys);
  IntMatrix rel = ker.block(0, 0, s, ker.cols());
  return present_quotient(rel, gens, &mods);
}

SubgroupPresentation cokernel_presentation(const IntMatrix& m) {
  return present_quotient(m, IntMatrix::identity(m.rows()), nullptr);
}

SquareDecomposition square_type_test(const FiniteAbelianGroup& g) {
  const auto& f = g.invariant_factors();
  SquareDecomposition d;
  if (f.size() % 2 != 0) return d;
  for (std::size_t i = 0; i < f.size(); i += 2)
    if (f[i] != f[i + 1]) return d;
  d.is_square_type = true;
  for (std::size_t i = 0; i < f.size(); i += 2) d.m_list.push_back(f[i]);
  return d;
}

}  // namespace avsym::groups
