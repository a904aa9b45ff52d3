/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include "groups/finite_group.hpp"

namespace avsym::groups {

// Q/Z-valued pairing on the invariant-factor generators of a finite abelian
// group. Entry (i, j) = e(g_i, g_j), stored in [0, 1). 1/m stands for a
// primitive m-th root of unity.
class AlternatingPairing {
 public:
  AlternatingPairing() = default;
  // Reduces entries into [0, 1), then checks alternation on generators,
  // antisymmetry, and well-definedness (order(g_i) * e(g_i, g_j) = 0).
  // Throws kValidationError on failure.
  AlternatingPairing(FiniteAbelianGroup group, RatMatrix values);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  const RatMatrix& matrix() const noexcept { return values_; }

  // e(x, y) in [0, 1) for coordinate vectors x, y.
  Rational operator()(const IntVector& x, const IntVector& y) const;

 private:
  FiniteAbelianGroup group_;
  RatMatrix values_;
};

// Commutator pairing e((k,chi),(k',chi')) = chi'(k) - chi(k') on K + K^.
// Generators are ordered a1, b1, a2, b2, ... with a_i the i-th generator of
// K and b_i its dual character, so the group has factors (k1,k1,k2,k2,...).
AlternatingPairing heisenberg_pairing(const FiniteAbelianGroup& k);

bool pairing_is_nondegenerate(const AlternatingPairing& e);

struct SymplecticBasis {
  SquareDecomposition decomposition;
  // Columns a1, b1, ..., ar, br in the coordinates of the pairing's group,
  // with e(ai, bi) = 1/mi and all other generator pairs orthogonal.
  IntMatrix generators;
};

// Splits off hyperbolic planes, largest order first; m_list is returned in
// increasing order. Throws kDegeneratePairing for a degenerate pairing.
SymplecticBasis symplectic_basis(const AlternatingPairing& e);

struct HomogeneousBundleData {
  Integer n;
  FiniteAbelianGroup H;
  AlternatingPairing e;
};

// |H| = n^2, exponent(H) | n, e nondegenerate on H.
bool validate_bundle_data(const HomogeneousBundleData& d);

}  // namespace avsym::groups
