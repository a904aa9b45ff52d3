/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "common/rng.hpp"
#include "symplectic/symplectic.hpp"

namespace avsym::engine {

using lattice::Integer;
using lattice::IntMatrix;

/// Base seed of the pinned pipeline corpus.
inline constexpr std::uint64_t kCorpusSeed = 20261016;

/// Product of elementary column operations and sign flips.
IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 10);

/// Skew-adjoint Gaussian-integer g×g matrix in the real coordinates of
/// product_elliptic(g): skew, and commutes with its complex structure.
IntMatrix random_complex_skew(Rng& rng, std::size_t g, long bound);

struct SymplecticInstance {
  symplectic::SymplecticAV A;
  symplectic::LagrangianSublattice z;
  symplectic::LagrangianSublattice w;
  /// 0: transverse coordinate pair; k > 0: W sheared by k times a
  /// nonsingular skew map against the fibre; −1: two generic graphs.
  long shear = 0;
};

/// Standard symplectic model of product_elliptic(g) (rank N = 2g), a pair of
/// complex Lagrangians with finite intersection, all moved by a random
/// element of O(Psi).
SymplecticInstance random_symplectic_instance(std::uint64_t seed, std::size_t g);

struct TwistedInstance {
  av::AbelianVarietyModel x;
  av::BrauerRepresentative alpha;
  /// Polarization on X̂.
  av::Polarization l;
  /// X is product_elliptic(g) in the lattice basis given by these columns.
  IntMatrix frame;
};

/// A product of elliptic curves with i-multiplication in a random lattice
/// basis, a random alternating e_α mod n and a polarization on the dual.
TwistedInstance random_av_with_brauer(std::uint64_t seed, std::size_t g,
                                      const Integer& n);

struct PipelineInstance {
  std::string label;
  av::AbelianVarietyModel x;
  av::BrauerRepresentative alpha;
  av::AbelianVarietyModel y;
  av::BrauerRepresentative beta;
  symplectic::SymplecticMorphism g;
  /// Polarization on Ŷ.
  av::Polarization l;
};

/// A symplectic isomorphism A_(X,α) → A_(Y,β) built from a change of lattice
/// basis of X and a product of symplectic shears; for n = 1 sometimes the
/// swap X × X̂ → X̂ × X̂̂ instead.
PipelineInstance pipeline_instance(std::uint64_t seed, std::size_t g,
                                   const Integer& n);

/// 100 instances with g ≤ 3 and n ≤ 4 from kCorpusSeed.
std::vector<PipelineInstance> pipeline_corpus();

}  // namespace avsym::engine
