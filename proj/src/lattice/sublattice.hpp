/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include "groups/finite_group.hpp"
#include "lattice/matrix.hpp"
#include "lattice/normal_form.hpp"

namespace avsym::lattice {

// Sublattice of Z^ambient_rank stored by its canonical HNF basis (columns),
// so equality is basis equality.
class Sublattice {
 public:
  Sublattice() = default;

  // Span of the columns of `generators`. With `require_independent`, throws
  // kInvalidArgument when the columns are linearly dependent.
  static Sublattice span(const IntMatrix& generators,
                         bool require_independent = false);
  static Sublattice zero(std::size_t ambient_rank) {
    return span(IntMatrix(ambient_rank, 0));
  }
  static Sublattice full(std::size_t ambient_rank) {
    return span(IntMatrix::identity(ambient_rank));
  }

  std::size_t ambient_rank() const noexcept { return basis_.rows(); }
  std::size_t rank() const noexcept { return basis_.cols(); }
  const IntMatrix& basis() const noexcept { return basis_; }
  bool saturated() const noexcept { return saturated_; }

  bool contains(std::span<const Integer> v) const;
  bool contains(const Sublattice& other) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.basis_ == b.basis_;
  }

 private:
  IntMatrix basis_;
  bool saturated_ = true;
};

// (span_Q S) ∩ Z^n.
Sublattice saturate(const Sublattice& s);
// [saturate(S) : S].
Integer saturation_index(const Sublattice& s);
Sublattice lattice_intersect(const Sublattice& s, const Sublattice& t);
// Saturated integer basis of ker(M) ∩ Z^cols.
Sublattice rational_kernel(const RatMatrix& m);
// Z^n / col-span(M) for square M; kInfiniteCokernel when det M == 0.
groups::FiniteAbelianGroup cokernel_group(const IntMatrix& m);
// Scale a rational matrix's columns to a common integral multiple and return
// the saturated span of those columns.
Sublattice saturated_span(const RatMatrix& columns);

}  // namespace avsym::lattice
