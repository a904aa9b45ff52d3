/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <vector>

#include "av/variety.hpp"
#include "groups/pairing.hpp"
#include "lattice/sublattice.hpp"

namespace avsym::symplectic {

using lattice::Integer;
using lattice::IntMatrix;
using lattice::Rational;
using lattice::RatMatrix;
using lattice::Sublattice;

/// Lattice Λ_A = Z^{2N} with complex structure J and the form ψ_A as an
/// integral pairing matrix Psi. The dual lattice is identified with Z^{2N}
/// by dual bases, where X → X̂̂ is −I; ψ̂ = −ψ then reads Psiᵀ = Psi. Psi is
/// even (ψ comes from a biextension, so ψ(x, x) ∈ 2Z) and unimodular.
class SymplecticAV {
 public:
  SymplecticAV() = default;
  /// Throws kValidationError when an invariant fails.
  SymplecticAV(RatMatrix j, IntMatrix psi);

  std::size_t half_rank() const noexcept { return psi_.rows() / 2; }
  std::size_t lattice_rank() const noexcept { return psi_.rows(); }
  const RatMatrix& complex_structure() const noexcept { return j_; }
  const IntMatrix& form() const noexcept { return psi_; }
  av::AbelianVarietyModel variety() const { return av::AbelianVarietyModel(j_); }

  friend bool operator==(const SymplecticAV&, const SymplecticAV&) = default;

 private:
  RatMatrix j_;
  IntMatrix psi_;
};

bool is_lagrangian(const Sublattice& s, const SymplecticAV& a);
/// Whether the rational span of s is J-stable (s is an abelian subvariety).
bool is_complex_sublattice(const Sublattice& s, const SymplecticAV& a);

class LagrangianSublattice {
 public:
  LagrangianSublattice() = default;
  /// Throws kValidationError unless is_lagrangian(s, ambient).
  LagrangianSublattice(SymplecticAV ambient, Sublattice s);

  const SymplecticAV& ambient() const noexcept { return ambient_; }
  const Sublattice& lattice() const noexcept { return s_; }
  const IntMatrix& basis() const noexcept { return s_.basis(); }

  friend bool operator==(const LagrangianSublattice&,
                         const LagrangianSublattice&) = default;

 private:
  SymplecticAV ambient_;
  Sublattice s_;
};

/// F with n·Psi_s = Fᵀ Psi_t F, J_t F = F J_s and det F ≠ 0.
class SymplecticMorphism {
 public:
  SymplecticMorphism() = default;
  /// Throws kDimensionMismatch on shapes, kValidationError otherwise.
  SymplecticMorphism(SymplecticAV source, SymplecticAV target, IntMatrix f,
                     Integer multiplier);

  const SymplecticAV& source() const noexcept { return source_; }
  const SymplecticAV& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return f_; }
  const Integer& multiplier() const noexcept { return n_; }
  bool is_isomorphism() const;

 private:
  SymplecticAV source_;
  SymplecticAV target_;
  IntMatrix f_;
  Integer n_;
};

struct TwistedSymplecticModel {
  av::AbelianVarietyModel base;
  av::BrauerRepresentative brauer;
  SymplecticAV A;
  /// Columns: the basis of Λ_A in the coordinates of (Λ_X ⊕ Λ_X*) ⊗ Q.
  RatMatrix basis_change;
  /// X × X̂ → A; matrix is basis_change⁻¹, multiplier n.
  SymplecticMorphism pi;
};

/// Λ_X ⊕ Λ_X* with Psi = [[0, I], [I, 0]] and J = diag(J_X, −J_Xᵀ).
SymplecticAV standard_symplectic(const av::AbelianVarietyModel& x);
/// X × X̂ as an abelian variety.
av::AbelianVarietyModel product_with_dual(const av::AbelianVarietyModel& x);

/// Generators (e_i/n, e_α e_i/n) of the graph of φ_α on X[n].
std::vector<av::TorsionPoint> build_K_alpha(const av::BrauerRepresentative& a);

/// A_(X,α) = (X × X̂)/K_α with the descended form. Throws kValidationError
/// for an invalid representative and kNotIsotropic if the descended form is
/// not integral.
TwistedSymplecticModel quotient_by_isotropic(const av::AbelianVarietyModel& x,
                                             const av::BrauerRepresentative& a);

/// n·Psi_std == F_πᵀ Psi_A F_π.
bool verify_descent_relation(const TwistedSymplecticModel& m);

/// Saturation of π(0 × X̂) in Λ_A.
LagrangianSublattice embed_dual_lagrangian(const TwistedSymplecticModel& m);

/// Γ(mφ) = {(κ⁻¹ m φ(ξ), ξ)} in standard_symplectic(X), for φ : X̂ → X̂̂
/// (e.g. φ_L of a polarization on X̂); κ⁻¹ m φ has matrix −mE. Throws
/// kNotSymmetric unless φ̂∘κ = φ, kInvalidArgument for m = 0 and
/// kDimensionMismatch when A is not standard_symplectic of the dual of
/// φ's source.
LagrangianSublattice graph_lagrangian(const av::Homomorphism& phi,
                                      const Integer& m, const SymplecticAV& a);

/// Saturation of F⁻¹(span_Q Z) ∩ Λ_source.
LagrangianSublattice preimage_lagrangian(const SymplecticMorphism& f,
                                         const LagrangianSublattice& z);
/// Saturation of F(Z') in the target.
LagrangianSublattice image_lagrangian(const SymplecticMorphism& f,
                                      const LagrangianSublattice& zp);

/// Z ∩ W ≅ Λ_A / (Λ_Z + Λ_W). Throws kInfiniteIntersection when the
/// lattices meet in positive rank.
groups::FiniteAbelianGroup lagrangian_intersection(const LagrangianSublattice& z,
                                                   const LagrangianSublattice& w);

struct LagrangianIsogeny {
  /// Λ_W → Hom(Λ_Z, Z) in the bases of W and the dual basis of Z:
  /// entry (i, j) = Psi(z_i, w_j).
  IntMatrix matrix;
  /// The same map as a homomorphism W → Ẑ, present when Z and W are
  /// abelian subvarieties.
  std::optional<av::Homomorphism> homomorphism;
  groups::FiniteAbelianGroup kernel;
  groups::SquareDecomposition decomposition;
};

/// Throws kInfiniteIntersection; kTheoremViolation if the kernel is not of
/// square type.
LagrangianIsogeny lagrangian_isogeny(const LagrangianSublattice& z,
                                     const LagrangianSublattice& w);

struct IntersectionPairing {
  groups::AlternatingPairing pairing;
  /// Lattice representatives of the invariant-factor generators of Z ∩ W.
  IntMatrix generators;
};

/// e(x, y) = Psi(x̃_Z, ỹ_W) mod Z. Throws kInfiniteIntersection;
/// kTheoremViolation if the result is degenerate.
IntersectionPairing intersection_pairing(const LagrangianSublattice& z,
                                         const LagrangianSublattice& w);

/// Smallest m in {n, 2n, ...} ≤ m_max with Z' ∩ Γ(mφ_L) of rank 0. L is a
/// polarization on X̂ and Z' lives in standard_symplectic(X). Throws
/// kSearchExhausted.
Integer find_transverse_multiplier(const LagrangianSublattice& zp,
                                   const av::Polarization& l, const Integer& n,
                                   const Integer& m_max);

struct IotaEmbedding {
  /// ι = π ∘ (κ⁻¹ m φ_L, id) : X̂ → A.
  av::Homomorphism iota;
  LagrangianSublattice image;
};

/// Throws kNotDivisible unless n | m, kNotInjective if Γ(mφ_L) meets K_α.
IotaEmbedding iota_embedding(const TwistedSymplecticModel& m,
                             const av::Polarization& l, const Integer& mult);

}  // namespace avsym::symplectic
