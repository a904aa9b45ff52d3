/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>

#include "groups/finite_group.hpp"
#include "lattice/matrix.hpp"

namespace avsym::av {

using lattice::Integer;
using lattice::IntVector;
using lattice::IntMatrix;
using lattice::Rational;
using lattice::RatMatrix;
using lattice::RatVector;

/// Complex torus V/Λ with Λ = Z^{2g} and a rational complex structure J on
/// Λ ⊗ Q (J² = −I).
///
/// The dual is modelled on the dual lattice Hom(Λ, Z) in the dual basis, with
/// complex structure −Jᵀ. In these coordinates the canonical map X → X̂̂ is
/// −I (see double_dual_identification), which is what makes φ̂_L = φ_L hold
/// for the skew matrix E of a polarization.
class AbelianVarietyModel {
 public:
  AbelianVarietyModel() = default;
  /// Throws kValidationError unless J is 2g x 2g with J² = −I.
  explicit AbelianVarietyModel(RatMatrix j);

  std::size_t dimension() const noexcept { return j_.rows() / 2; }
  std::size_t lattice_rank() const noexcept { return j_.rows(); }
  const RatMatrix& complex_structure() const noexcept { return j_; }

  friend bool operator==(const AbelianVarietyModel&,
                         const AbelianVarietyModel&) = default;

 private:
  RatMatrix j_;
};

/// g-fold product of C/Z[i]; J is block diagonal [[0,−1],[1,0]].
AbelianVarietyModel product_elliptic(std::size_t g);
AbelianVarietyModel dual_av(const AbelianVarietyModel& x);

/// Lattice map F (rank_t x rank_s) with J_t F = F J_s.
class Homomorphism {
 public:
  Homomorphism() = default;
  /// Throws kDimensionMismatch on shape errors, kValidationError when F is
  /// not complex linear.
  Homomorphism(AbelianVarietyModel source, AbelianVarietyModel target,
               IntMatrix f);

  const AbelianVarietyModel& source() const noexcept { return source_; }
  const AbelianVarietyModel& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return f_; }

  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;

 private:
  AbelianVarietyModel source_;
  AbelianVarietyModel target_;
  IntMatrix f_;
};

Homomorphism identity_hom(const AbelianVarietyModel& x);
Homomorphism multiplication_by(const AbelianVarietyModel& x, long k);
/// κ : X → X̂̂, matrix −I in the dual-basis conventions.
Homomorphism double_dual_identification(const AbelianVarietyModel& x);
/// f̂ : B̂ → Â with matrix Fᵀ.
Homomorphism dual_hom(const Homomorphism& f);
/// f ∘ h. Throws kSourceTargetMismatch unless target(h) == source(f).
Homomorphism hom_compose(const Homomorphism& f, const Homomorphism& h);
/// ker f ≅ Λ_t / F Λ_s. Throws kNotAnIsogeny when det F = 0.
groups::FiniteAbelianGroup isogeny_kernel(const Homomorphism& f);

/// Integral skew form E with JᵀEJ = E and E(Jx, y) positive definite.
class Polarization {
 public:
  Polarization() = default;
  /// Throws kValidationError when an invariant fails.
  Polarization(AbelianVarietyModel variety, IntMatrix e);

  const AbelianVarietyModel& variety() const noexcept { return variety_; }
  const IntMatrix& form() const noexcept { return e_; }

 private:
  AbelianVarietyModel variety_;
  IntMatrix e_;
};

/// Checks skewness and J-compatibility only (Néron–Severi membership, no
/// positivity).
bool is_neron_severi_class(const AbelianVarietyModel& x, const IntMatrix& e);
/// Exact Sylvester test on the leading principal minors.
bool is_positive_definite(const RatMatrix& s);

/// φ_L : X → X̂ with matrix E.
Homomorphism phi_from_polarization(const Polarization& l);

/// Block-diagonal sum of the standard principal forms [[0,−1],[1,0]] scaled
/// by `weights` on product_elliptic(g) or its dual (same J).
Polarization product_polarization(const AbelianVarietyModel& x,
                                  const std::vector<long>& weights);

/// Brauer class representative: alternating pairing e_α on X[n] written as
/// a 2g x 2g integer matrix with entries in [0, n).
struct BrauerRepresentative {
  AbelianVarietyModel variety;
  Integer n = 1;
  IntMatrix e_alpha;
};

BrauerRepresentative trivial_brauer(const AbelianVarietyModel& x);
bool validate_brauer_rep(const BrauerRepresentative& a);
/// Whether e_a − e_b lifts mod n to a Néron–Severi class, i.e. a and b
/// represent the same element of Br(X)[n]. Throws kDimensionMismatch for a
/// different variety or n.
bool ns_difference_test(const BrauerRepresentative& a,
                        const BrauerRepresentative& b);

/// Point of finite order, coordinates in [0, 1) relative to the lattice
/// basis.
struct TorsionPoint {
  AbelianVarietyModel variety;
  RatVector coords;
};

/// Complex structure restricted to the rational span of `basis`, if the span
/// is J-stable.
std::optional<RatMatrix> restrict_complex_structure(const RatMatrix& j,
                                                    const IntMatrix& basis);

}  // namespace avsym::av
