/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "lattice/sublattice.hpp"

namespace avsym::lattice {

Sublattice Sublattice::span(const IntMatrix& generators,
                            bool require_independent) {
  Sublattice s;
  s.basis_ = hnf(generators);
  if (require_independent && s.basis_.cols() != generators.cols())
    fail(ErrorCode::kInvalidArgument, "sublattice generators are dependent");
  auto d = snf(s.basis_);
  s.saturated_ = true;
  for (const auto& f : d.invariant_factors)
    if (f != 1) s.saturated_ = false;
  return s;
}

bool Sublattice::contains(std::span<const Integer> v) const {
  return solve_in_hnf(basis_, v).has_value();
}

bool Sublattice::contains(const Sublattice& other) const {
  if (other.ambient_rank() != ambient_rank())
    fail(ErrorCode::kDimensionMismatch, "sublattice ambient rank mismatch");
  for (std::size_t c = 0; c < other.rank(); ++c)
    if (!contains(other.basis().column(c))) return false;
  return true;
}

Sublattice saturate(const Sublattice& s) {
  if (s.saturated()) return s;
  // B = U^-1 S V^-1: the first rank columns of U^-1 span the same rational
  // space and are primitive.
  auto d = snf(s.basis());
  IntMatrix uinv = unimodular_inverse(d.U);
  return Sublattice::span(uinv.columns(0, d.rank()));
}

Integer saturation_index(const Sublattice& s) {
  Integer idx = 1;
  for (const auto& f : snf(s.basis()).invariant_factors) idx *= f;
  return idx;
}

Sublattice lattice_intersect(const Sublattice& s, const Sublattice& t) {
  if (s.ambient_rank() != t.ambient_rank())
    fail(ErrorCode::kDimensionMismatch, "intersect: ambient rank mismatch");
  // Integer solutions of B_S a = B_T b.
  IntMatrix ker = integer_kernel(hstack(s.basis(), -t.basis()));
  IntMatrix a = ker.block(0, 0, s.rank(), ker.cols());
  return Sublattice::span(s.basis() * a);
}

Sublattice rational_kernel(const RatMatrix& m) {
  IntMatrix im(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer den = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational x = m(r, c) * den;
      im(r, c) = x.get_num();
    }
  }
  return Sublattice::span(integer_kernel(im));
}

groups::FiniteAbelianGroup cokernel_group(const IntMatrix& m) {
  if (!m.is_square())
    fail(ErrorCode::kDimensionMismatch, "cokernel_group needs a square matrix");
  auto d = snf(m);
  if (d.rank() != m.rows())
    fail(ErrorCode::kInfiniteCokernel, "determinant is zero: cokernel is infinite");
  std::vector<Integer> f;
  for (const auto& x : d.invariant_factors)
    if (x != 1) f.push_back(x);
  return groups::FiniteAbelianGroup(std::move(f));
}

Sublattice saturated_span(const RatMatrix& columns) {
  IntMatrix cols(columns.rows(), columns.cols());
  for (std::size_t c = 0; c < columns.cols(); ++c) {
    Integer den = 1;
    for (std::size_t r = 0; r < columns.rows(); ++r)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), columns(r, c).get_den_mpz_t());
    for (std::size_t r = 0; r < columns.rows(); ++r) {
      Rational x = columns(r, c) * den;
      cols(r, c) = x.get_num();
    }
  }
  return saturate(Sublattice::span(cols));
}

}  // namespace avsym::lattice
