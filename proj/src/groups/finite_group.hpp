/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <functional>
#include <vector>

#include "lattice/matrix.hpp"

namespace avsym::groups {

using lattice::Integer;
using lattice::IntMatrix;
using lattice::IntVector;
using lattice::Rational;
using lattice::RatMatrix;

/// Finite abelian group in invariant-factor form m1 | m2 | ... | mk, every
/// mi >= 2. The empty list is the trivial group. Elements are coordinate
/// vectors on the invariant-factor generators, coordinate i reduced mod mi.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  /// Throws kInvalidArgument unless `factors` is already a divisibility chain
  /// of integers >= 2.
  explicit FiniteAbelianGroup(std::vector<Integer> factors);
  /// Normalizes any list of positive integers (e.g. (2,3) -> (6)).
  static FiniteAbelianGroup from_orders(const std::vector<Integer>& orders);

  const std::vector<Integer>& invariant_factors() const noexcept {
    return factors_;
  }
  std::size_t num_generators() const noexcept { return factors_.size(); }
  bool is_trivial() const noexcept { return factors_.empty(); }
  Integer order() const;
  Integer exponent() const;

  IntVector reduce(IntVector x) const;
  bool is_zero(const IntVector& x) const;
  Integer element_order(const IntVector& x) const;
  /// Visits every element in lexicographic coordinate order. Intended for
  /// small groups only.
  void for_each_element(const std::function<void(const IntVector&)>& f) const;

  friend bool operator==(const FiniteAbelianGroup&,
                         const FiniteAbelianGroup&) = default;

 private:
  std::vector<Integer> factors_;
};

std::string to_string(const FiniteAbelianGroup& g);

/// A subgroup of `ambient` given by generators, re-presented in invariant
/// factor form. Column i of `generators` is the image in ambient coordinates
/// of the i-th invariant-factor generator of `group`.
struct SubgroupPresentation {
  FiniteAbelianGroup group;
  IntMatrix generators;
};

/// Subgroup of `ambient` generated by the columns of `gens`.
SubgroupPresentation subgroup_presentation(const FiniteAbelianGroup& ambient,
                                           const IntMatrix& gens);

/// Z^n / (columns of m) for a finite-cokernel m, with the images of the
/// invariant-factor generators as columns of `generators`.
SubgroupPresentation cokernel_presentation(const IntMatrix& m);

/// Whether G = (Z/m1)^2 + ... + (Z/mr)^2.
struct SquareDecomposition {
  bool is_square_type = false;
  std::vector<Integer> m_list;  // increasing; empty when not square type

  friend bool operator==(const SquareDecomposition&,
                         const SquareDecomposition&) = default;
};

SquareDecomposition square_type_test(const FiniteAbelianGroup& g);

}  // namespace avsym::groups
