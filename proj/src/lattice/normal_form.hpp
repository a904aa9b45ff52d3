/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <vector>

#include "lattice/matrix.hpp"

namespace avsym::lattice {

// U * M * V == S with U, V unimodular and S diagonal (rectangular), the
// nonzero diagonal d1 | d2 | ... | dk positive and followed by zeros.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  std::vector<Integer> invariant_factors;  // nonzero diagonal of S, in order

  std::size_t rank() const noexcept { return invariant_factors.size(); }
};

// Pivot = smallest nonzero absolute value in the active block, first in
// row-major order on ties, so the output is reproducible.
SmithDecomposition snf(const IntMatrix& m);

// Column-style Hermite normal form of the column span of m: lower
// triangular with strictly increasing pivot rows, positive pivots, and every
// entry of a pivot row left of its pivot reduced into [0, pivot). Zero
// columns are dropped, so the result is rows(m) x rank(m). Canonical: equal
// column spans give identical output.
IntMatrix hnf(const IntMatrix& m);

// Saturated integer basis (as columns) of {x in Z^cols : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// Coefficients c with basis * c == v, if v lies in the column span over Z.
// basis must be in hnf() form.
std::optional<IntVector> solve_in_hnf(const IntMatrix& basis,
                                      std::span<const Integer> v);

// Divide by the gcd of the entries and clear the sign so the first nonzero
// entry is positive. Leaves zero vectors unchanged.
IntVector primitive_part(IntVector v);

}  // namespace avsym::lattice
