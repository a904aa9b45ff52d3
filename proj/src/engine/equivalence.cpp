/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "engine/equivalence.hpp"

namespace avsym::engine {

using symplectic::LagrangianSublattice;
using symplectic::SymplecticMorphism;

KernelTest kernel_square_test(const av::Homomorphism& f) {
  KernelTest t;
  t.kernel = av::isogeny_kernel(f);
  t.decomposition = groups::square_type_test(t.kernel);
  t.is_square = t.decomposition.is_square_type;
  return t;
}

Integer default_m_max(const Integer& n) { return n * 50; }

EquivalenceWitness thm41_pipeline(const av::AbelianVarietyModel& xm,
                                  const av::BrauerRepresentative& a,
                                  const av::AbelianVarietyModel& ym,
                                  const av::BrauerRepresentative& b,
                                  const SymplecticMorphism& g_iso,
                                  const av::Polarization& l,
                                  const Integer& m_max) {
  auto mx = symplectic::quotient_by_isotropic(xm, a);
  auto my = symplectic::quotient_by_isotropic(ym, b);
  if (!(g_iso.source() == mx.A) || !(g_iso.target() == my.A))
    fail(ErrorCode::kNotSymplecticIso,
         "g does not map A_(X,alpha) to A_(Y,beta) in canonical coordinates");
  if (!g_iso.is_isomorphism())
    fail(ErrorCode::kNotSymplecticIso, "g is not a symplectic isomorphism");
  if (!(l.variety() == av::dual_av(ym)))
    fail(ErrorCode::kDimensionMismatch, "polarization must live on the dual of Y");

  const std::size_t dx = xm.lattice_rank();
  const std::size_t dy = ym.lattice_rank();
  if (dx != dy)
    fail(ErrorCode::kDimensionMismatch, "X and Y have different dimensions");

  // X̂ ⊂ A_(X,α) and its image in A_(Y,β).
  IntMatrix fiber = vstack(IntMatrix(dx, dx), IntMatrix::identity(dx));
  IntMatrix cz = g_iso.matrix() * mx.pi.matrix() * fiber;
  lattice::Sublattice zs = lattice::Sublattice::span(cz, true);
  if (!zs.saturated())
    fail(ErrorCode::kTheoremViolation, "X^ -> A_(X,alpha) is not injective");
  if (!symplectic::is_lagrangian(zs, my.A))
    fail(ErrorCode::kTheoremViolation, "g(X^) is not Lagrangian");
  if (!symplectic::is_complex_sublattice(zs, my.A))
    fail(ErrorCode::kTheoremViolation, "g(X^) is not an abelian subvariety");
  LagrangianSublattice z(my.A, zs);

  LagrangianSublattice zp = symplectic::preimage_lagrangian(my.pi, z);
  Integer m = symplectic::find_transverse_multiplier(zp, l, b.n, m_max);
  auto emb = symplectic::iota_embedding(my, l, m);
  const IntMatrix& cw = emb.iota.matrix();
  if (!symplectic::is_complex_sublattice(emb.image.lattice(), my.A))
    fail(ErrorCode::kTheoremViolation, "iota(Y^) is not an abelian subvariety");

  auto h = symplectic::lagrangian_isogeny(z, emb.image);
  Integer inter = symplectic::lagrangian_intersection(z, emb.image).order();

  // Z → Ŵ, z ↦ Psi(z, ·)|_W, with Z ≅ X̂ through cz and W ≅ Ŷ through ι; the
  // dual basis of Ŷ's lattice is Y's lattice.
  IntMatrix f = cw.transpose() * my.A.form() * cz;
  av::Homomorphism iso(av::dual_av(xm), ym, f);
  KernelTest kt = kernel_square_test(iso);
  if (!kt.is_square)
    fail(ErrorCode::kTheoremViolation,
         "witness kernel is not of square type: " + to_string(kt.kernel));
  if (!(kt.kernel == h.kernel))
    fail(ErrorCode::kTheoremViolation, "witness kernel differs from the Lagrangian isogeny kernel");
  if (kt.kernel.order() != inter)
    fail(ErrorCode::kTheoremViolation, "witness kernel order differs from |Z n W|");

  EquivalenceWitness w{std::move(iso), kt.kernel, kt.decomposition, {}};
  w.provenance.m = m;
  w.provenance.z_basis = cz;
  w.provenance.z_prime_basis = zp.basis();
  w.provenance.iota = cw;
  w.provenance.w_to_z_dual = std::move(h);
  w.provenance.intersection_order = inter;
  return w;
}

}  // namespace avsym::engine
