/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <vector>

#include "groups/pairing.hpp"
#include "lattice/matrix.hpp"

// Brute-force reference computations. Nothing here calls the normal-form
// routines; small groups are enumerated element by element in machine
// integers.
namespace avsym::oracle {

using lattice::Integer;
using lattice::IntMatrix;
using lattice::RatMatrix;

// Invariant factors d_k = D_k / D_{k-1}, D_k the gcd of all k x k minors
// (cofactor expansion). Meant for matrices up to 4 x 4.
std::vector<Integer> minors_invariant_factors(const IntMatrix& m);

// Pairing values scaled to integers mod N = exponent of the group.
struct SmallPairing {
  std::vector<long> orders;  // invariant factors
  long N = 1;
  std::vector<long> c;       // k x k, c[i*k+j] = N * e(g_i, g_j) mod N

  long operator()(const std::vector<long>& x, const std::vector<long>& y) const;
};

SmallPairing to_small(const groups::AlternatingPairing& e);
std::vector<std::vector<long>> all_elements(const std::vector<long>& orders);

// e(x, x) = 0 and e(x, y) = -e(y, x) for every pair of elements.
bool is_alternating(const SmallPairing& p);
// Bilinearity in the first argument against all pairs (x, x') and every y.
bool is_bilinear(const SmallPairing& p);
// For every x != 0 some y with e(x, y) != 0, searched over all y.
bool is_nondegenerate(const SmallPairing& p);
// Some pair (a, b) with e(a, b) = 1/m and a, b of order m.
bool has_hyperbolic_pair(const SmallPairing& p, long m);
// Whether any alternating pairing on the group is nondegenerate, by
// enumerating every admissible generator matrix.
bool admits_nondegenerate_pairing(const std::vector<long>& orders);

// All invariant-factor lists (each >= 2, divisibility chain) of abelian
// groups of order exactly n.
std::vector<std::vector<long>> abelian_groups_of_order(long n);

// Heisenberg commutator pairing evaluated directly from its definition on
// K + K^ with K = (+) Z/k_i: element (k, chi) with chi_i in Z/k_i meaning
// chi_i / k_i on the i-th generator.
long heisenberg_value_scaled(const std::vector<long>& k, long N,
                             const std::vector<long>& x,
                             const std::vector<long>& y);

// Cross-check of a Lagrangian intersection pairing. `psi` is the lattice
// form, `bz`/`bw` bases of transverse Lagrangians, `gens` lattice
// representatives of the pairing group's generators. Every element of the
// group is built as a lattice vector, lifted afresh into span(Z) and span(W),
// shifted by random lattice vectors of Z and W, and paired against every
// generator with Psi. Returns an empty string on success, else a reason.
std::string check_intersection_pairing(const IntMatrix& psi,
                                       const IntMatrix& bz,
                                       const IntMatrix& bw,
                                       const groups::AlternatingPairing& e,
                                       const IntMatrix& gens,
                                       unsigned long long seed);

}  // namespace avsym::oracle
