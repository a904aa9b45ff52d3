/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include "symplectic/symplectic.hpp"

namespace avsym::engine {

using lattice::Integer;
using lattice::IntMatrix;

struct KernelTest {
  bool is_square = false;
  groups::SquareDecomposition decomposition;
  groups::FiniteAbelianGroup kernel;
};

/// Kernel of an isogeny and whether it is (+) (Z/m_i)^2. Throws
/// kNotAnIsogeny.
KernelTest kernel_square_test(const av::Homomorphism& f);

struct PipelineProvenance {
  Integer m;
  /// Z = g(π_X(0 × X̂)) in A_(Y,β), basis indexed by Λ_X̂.
  IntMatrix z_basis;
  /// Z' = neutral component of π_Y⁻¹(Z) in Y × Ŷ.
  IntMatrix z_prime_basis;
  /// ι : Ŷ → A_(Y,β), whose image is W.
  IntMatrix iota;
  /// The isogeny W → Ẑ given by the form, in canonical bases.
  symplectic::LagrangianIsogeny w_to_z_dual;
  /// |Z ∩ W|.
  Integer intersection_order;
};

struct EquivalenceWitness {
  /// X̂ → Y.
  av::Homomorphism isogeny;
  groups::FiniteAbelianGroup kernel;
  groups::SquareDecomposition decomposition;
  PipelineProvenance provenance;
};

/// Runs the construction from a symplectic isomorphism
/// g : A_(X,α) → A_(Y,β) and a polarization L on Ŷ to an isogeny X̂ → Y with
/// square-type kernel. Throws kNotSymplecticIso, kSearchExhausted,
/// kTheoremViolation.
EquivalenceWitness thm41_pipeline(const av::AbelianVarietyModel& xm,
                                  const av::BrauerRepresentative& a,
                                  const av::AbelianVarietyModel& ym,
                                  const av::BrauerRepresentative& b,
                                  const symplectic::SymplecticMorphism& g_iso,
                                  const av::Polarization& l,
                                  const Integer& m_max);

/// 50 n.
Integer default_m_max(const Integer& n);

}  // namespace avsym::engine
