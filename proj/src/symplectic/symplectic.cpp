/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "symplectic/symplectic.hpp"

#include <algorithm>

#include "lattice/normal_form.hpp"

namespace avsym::symplectic {

using lattice::to_rational;

namespace {

bool all_ones(const std::vector<Integer>& f) {
  return std::all_of(f.begin(), f.end(), [](const Integer& x) { return x == 1; });
}

RatMatrix j_standard(const av::AbelianVarietyModel& x) {
  const RatMatrix& j = x.complex_structure();
  return lattice::block_diagonal(j, RatMatrix(-j.transpose()));
}

IntMatrix psi_standard(std::size_t d) {
  IntMatrix z(d, d);
  IntMatrix i = IntMatrix::identity(d);
  return lattice::blocks(z, i, i, z);
}

// Coordinates (z-part, w-part) of v in the rational basis [B_Z | B_W].
RatMatrix split_coordinates(const IntMatrix& bz, const IntMatrix& bw,
                            const IntMatrix& vs) {
  return lattice::solve(to_rational(hstack(bz, bw)), to_rational(vs));
}

void require_same_ambient(const LagrangianSublattice& z,
                          const LagrangianSublattice& w) {
  if (!(z.ambient() == w.ambient()))
    fail(ErrorCode::kDimensionMismatch, "Lagrangians live in different ambients");
}

// Positive rank of Z ∩ W, or 0.
std::size_t intersection_rank(const LagrangianSublattice& z,
                              const LagrangianSublattice& w) {
  return lattice::lattice_intersect(z.lattice(), w.lattice()).rank();
}

}  // namespace

SymplecticAV::SymplecticAV(RatMatrix j, IntMatrix psi)
    : j_(std::move(j)), psi_(std::move(psi)) {
  const std::size_t d = psi_.rows();
  if (!psi_.is_square() || d == 0 || d % 2 != 0)
    fail(ErrorCode::kValidationError, "form must be 2N x 2N, N >= 1");
  if (j_.rows() != d || j_.cols() != d)
    fail(ErrorCode::kValidationError, "complex structure has wrong shape");
  if (!(-(j_ * j_)).is_identity())
    fail(ErrorCode::kValidationError, "complex structure must satisfy J^2 = -I");
  if (!(psi_.transpose() == psi_))
    fail(ErrorCode::kValidationError, "form must satisfy psi^ = -psi (Psi symmetric)");
  for (std::size_t i = 0; i < d; ++i)
    if (!mpz_even_p(psi_(i, i).get_mpz_t()))
      fail(ErrorCode::kValidationError, "form must be even");
  if (abs(lattice::determinant(psi_)) != 1)
    fail(ErrorCode::kValidationError, "form must be unimodular");
  RatMatrix p = to_rational(psi_);
  if (!(j_.transpose() * p * j_ == p))
    fail(ErrorCode::kValidationError, "form must be J-invariant");
}

bool is_lagrangian(const Sublattice& s, const SymplecticAV& a) {
  if (s.ambient_rank() != a.lattice_rank()) return false;
  if (!s.saturated() || s.rank() != a.half_rank()) return false;
  const IntMatrix& b = s.basis();
  if (!(b.transpose() * a.form() * b).is_zero()) return false;
  // Λ_A → Hom(Λ_S, Z) must be onto, i.e. Λ_A/S × S → Z unimodular.
  auto d = lattice::snf(b.transpose() * a.form());
  return d.rank() == s.rank() && all_ones(d.invariant_factors);
}

bool is_complex_sublattice(const Sublattice& s, const SymplecticAV& a) {
  if (s.ambient_rank() != a.lattice_rank()) return false;
  return av::restrict_complex_structure(a.complex_structure(), s.basis()).has_value();
}

LagrangianSublattice::LagrangianSublattice(SymplecticAV ambient, Sublattice s)
    : ambient_(std::move(ambient)), s_(std::move(s)) {
  if (!is_lagrangian(s_, ambient_))
    fail(ErrorCode::kValidationError, "sublattice is not Lagrangian");
}

SymplecticMorphism::SymplecticMorphism(SymplecticAV source, SymplecticAV target,
                                       IntMatrix f, Integer multiplier)
    : source_(std::move(source)),
      target_(std::move(target)),
      f_(std::move(f)),
      n_(std::move(multiplier)) {
  if (f_.rows() != target_.lattice_rank() || f_.cols() != source_.lattice_rank())
    fail(ErrorCode::kDimensionMismatch, "symplectic morphism has wrong shape");
  if (n_ < 1) fail(ErrorCode::kValidationError, "multiplier must be positive");
  if (!(f_.transpose() * target_.form() * f_ == source_.form() * n_))
    fail(ErrorCode::kValidationError, "n psi_A != f^ psi_B f");
  RatMatrix fr = to_rational(f_);
  if (!(target_.complex_structure() * fr == fr * source_.complex_structure()))
    fail(ErrorCode::kValidationError, "morphism is not complex linear");
  if (!f_.is_square() || lattice::determinant(f_) == 0)
    fail(ErrorCode::kValidationError, "morphism is not an isogeny");
}

bool SymplecticMorphism::is_isomorphism() const {
  return n_ == 1 && abs(lattice::determinant(f_)) == 1;
}

av::AbelianVarietyModel product_with_dual(const av::AbelianVarietyModel& x) {
  return av::AbelianVarietyModel(j_standard(x));
}

SymplecticAV standard_symplectic(const av::AbelianVarietyModel& x) {
  return SymplecticAV(j_standard(x), psi_standard(x.lattice_rank()));
}

std::vector<av::TorsionPoint> build_K_alpha(const av::BrauerRepresentative& a) {
  if (!av::validate_brauer_rep(a))
    fail(ErrorCode::kValidationError, "invalid Brauer representative");
  const std::size_t d = a.variety.lattice_rank();
  std::vector<av::TorsionPoint> out;
  if (a.n == 1) return out;
  auto xx = product_with_dual(a.variety);
  for (std::size_t i = 0; i < d; ++i) {
    lattice::RatVector c(2 * d, Rational(0));
    c[i] = Rational(1) / Rational(a.n);
    for (std::size_t r = 0; r < d; ++r)
      c[d + r] = lattice::frac(Rational(a.e_alpha(r, i)) / Rational(a.n));
    for (auto& q : c) q.canonicalize();
    out.push_back({xx, std::move(c)});
  }
  return out;
}

TwistedSymplecticModel quotient_by_isotropic(const av::AbelianVarietyModel& x,
                                             const av::BrauerRepresentative& a) {
  if (!(a.variety == x))
    fail(ErrorCode::kDimensionMismatch, "Brauer representative lives on another variety");
  if (!av::validate_brauer_rep(a))
    fail(ErrorCode::kValidationError, "invalid Brauer representative");
  const std::size_t d = x.lattice_rank();
  const SymplecticAV std_av = standard_symplectic(x);

  // n Λ_A = n Z^{2d} + Z (e_i, e_α e_i).
  IntMatrix graph = vstack(IntMatrix::identity(d), a.e_alpha);
  IntMatrix gens = hstack(IntMatrix::identity(2 * d) * a.n, graph);
  IntMatrix b_int = lattice::hnf(gens);
  ensure(b_int.cols() == 2 * d, "quotient_by_isotropic: lattice rank");

  RatMatrix b = to_rational(b_int);
  b *= Rational(1) / Rational(a.n);
  RatMatrix psi_q = b.transpose() * to_rational(std_av.form()) * b;
  psi_q *= Rational(a.n);
  if (!lattice::is_integral(psi_q))
    fail(ErrorCode::kNotIsotropic, "descended form is not integral: K_alpha is not isotropic");
  IntMatrix psi_a = lattice::to_integer(psi_q);

  RatMatrix binv = lattice::inverse(b);
  RatMatrix j_a = binv * std_av.complex_structure() * b;
  SymplecticAV a_av(j_a, psi_a);

  ensure(lattice::is_integral(binv), "quotient_by_isotropic: pi not integral");
  SymplecticMorphism pi(std_av, a_av, lattice::to_integer(binv), a.n);

  TwistedSymplecticModel m{x, a, a_av, b, pi};
  ensure(verify_descent_relation(m), "quotient_by_isotropic: descent relation");
  return m;
}

bool verify_descent_relation(const TwistedSymplecticModel& m) {
  const IntMatrix& f = m.pi.matrix();
  return f.transpose() * m.A.form() * f ==
         standard_symplectic(m.base).form() * m.brauer.n;
}

LagrangianSublattice embed_dual_lagrangian(const TwistedSymplecticModel& m) {
  const std::size_t d = m.base.lattice_rank();
  IntMatrix fiber = vstack(IntMatrix(d, d), IntMatrix::identity(d));
  IntMatrix img = m.pi.matrix() * fiber;
  Sublattice s = lattice::saturate(Sublattice::span(img, true));
  if (!is_lagrangian(s, m.A))
    fail(ErrorCode::kTheoremViolation, "image of the dual is not Lagrangian");
  return LagrangianSublattice(m.A, s);
}

LagrangianSublattice graph_lagrangian(const av::Homomorphism& phi,
                                      const Integer& m, const SymplecticAV& a) {
  if (m == 0) fail(ErrorCode::kInvalidArgument, "graph multiplier must be nonzero");
  const av::AbelianVarietyModel x = av::dual_av(phi.source());
  if (!(phi.target() == av::dual_av(phi.source())))
    fail(ErrorCode::kDimensionMismatch, "phi must map a variety to its dual");
  if (!(a == standard_symplectic(x)))
    fail(ErrorCode::kDimensionMismatch, "ambient is not X x X^ for phi");
  const IntMatrix& e = phi.matrix();
  if (!(e.transpose() == -e))
    fail(ErrorCode::kNotSymmetric, "phi^ != phi under the double-dual identification");
  const std::size_t d = x.lattice_rank();
  IntMatrix g = vstack(IntMatrix(-e) * m, IntMatrix::identity(d));
  Sublattice s = Sublattice::span(g, true);
  ensure(s.saturated(), "graph_lagrangian: graph basis not saturated");
  ensure((g.transpose() * a.form() * g).is_zero(), "graph_lagrangian: not isotropic");
  return LagrangianSublattice(a, s);
}

LagrangianSublattice preimage_lagrangian(const SymplecticMorphism& f,
                                         const LagrangianSublattice& z) {
  if (!(z.ambient() == f.target()))
    fail(ErrorCode::kDimensionMismatch, "Lagrangian is not in the target");
  RatMatrix pre = lattice::solve(to_rational(f.matrix()), to_rational(z.basis()));
  Sublattice s = lattice::saturated_span(pre);
  if (!is_lagrangian(s, f.source()))
    fail(ErrorCode::kTheoremViolation, "preimage of a Lagrangian is not Lagrangian");
  return LagrangianSublattice(f.source(), s);
}

LagrangianSublattice image_lagrangian(const SymplecticMorphism& f,
                                      const LagrangianSublattice& zp) {
  if (!(zp.ambient() == f.source()))
    fail(ErrorCode::kDimensionMismatch, "Lagrangian is not in the source");
  Sublattice s = lattice::saturate(Sublattice::span(f.matrix() * zp.basis()));
  if (!is_lagrangian(s, f.target()))
    fail(ErrorCode::kTheoremViolation, "image of a Lagrangian is not Lagrangian");
  return LagrangianSublattice(f.target(), s);
}

groups::FiniteAbelianGroup lagrangian_intersection(const LagrangianSublattice& z,
                                                   const LagrangianSublattice& w) {
  require_same_ambient(z, w);
  if (std::size_t r = intersection_rank(z, w); r > 0)
    fail(ErrorCode::kInfiniteIntersection,
         "intersection has positive rank " + std::to_string(r));
  return lattice::cokernel_group(hstack(z.basis(), w.basis()));
}

LagrangianIsogeny lagrangian_isogeny(const LagrangianSublattice& z,
                                     const LagrangianSublattice& w) {
  require_same_ambient(z, w);
  if (std::size_t r = intersection_rank(z, w); r > 0)
    fail(ErrorCode::kInfiniteIntersection,
         "intersection has positive rank " + std::to_string(r));
  LagrangianIsogeny out;
  out.matrix = z.basis().transpose() * z.ambient().form() * w.basis();
  out.kernel = lattice::cokernel_group(out.matrix);
  out.decomposition = groups::square_type_test(out.kernel);
  if (!out.decomposition.is_square_type)
    fail(ErrorCode::kTheoremViolation,
         "kernel of W -> Z^ is not of square type: " + to_string(out.kernel));
  const RatMatrix& j = z.ambient().complex_structure();
  auto jz = av::restrict_complex_structure(j, z.basis());
  auto jw = av::restrict_complex_structure(j, w.basis());
  if (jz && jw) {
    av::AbelianVarietyModel zv(*jz), wv(*jw);
    out.homomorphism = av::Homomorphism(wv, av::dual_av(zv), out.matrix);
  }
  return out;
}

IntersectionPairing intersection_pairing(const LagrangianSublattice& z,
                                         const LagrangianSublattice& w) {
  require_same_ambient(z, w);
  if (std::size_t r = intersection_rank(z, w); r > 0)
    fail(ErrorCode::kInfiniteIntersection,
         "intersection has positive rank " + std::to_string(r));
  const IntMatrix& bz = z.basis();
  const IntMatrix& bw = w.basis();
  const std::size_t nz = bz.cols();
  auto pres = groups::cokernel_presentation(hstack(bz, bw));
  const std::size_t k = pres.group.num_generators();

  // λ = z~ + w~ with z~ ∈ span Z, w~ ∈ span W; lifts x~_Z = z~, x~_W = −w~.
  RatMatrix c = split_coordinates(bz, bw, pres.generators);
  RatMatrix cz(nz, k), cw(bw.cols(), k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < nz; ++i) cz(i, j) = c(i, j);
    for (std::size_t i = 0; i < bw.cols(); ++i) cw(i, j) = -c(nz + i, j);
  }
  RatMatrix lift_z = to_rational(bz) * cz;
  RatMatrix lift_w = to_rational(bw) * cw;
  RatMatrix vals = lift_z.transpose() * to_rational(z.ambient().form()) * lift_w;
  groups::AlternatingPairing e(pres.group, vals);
  if (!groups::pairing_is_nondegenerate(e))
    fail(ErrorCode::kTheoremViolation, "intersection pairing is degenerate");
  return {std::move(e), std::move(pres.generators)};
}

Integer find_transverse_multiplier(const LagrangianSublattice& zp,
                                   const av::Polarization& l, const Integer& n,
                                   const Integer& m_max) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "n must be positive");
  if (m_max < n) fail(ErrorCode::kInvalidArgument, "m_max must be at least n");
  auto phi = av::phi_from_polarization(l);
  for (Integer m = n; m <= m_max; m += n) {
    LagrangianSublattice gamma = graph_lagrangian(phi, m, zp.ambient());
    if (intersection_rank(zp, gamma) == 0) return m;
  }
  fail(ErrorCode::kSearchExhausted,
       "no transverse multiple of n up to m_max = " + lattice::to_string(m_max));
}

IotaEmbedding iota_embedding(const TwistedSymplecticModel& m,
                             const av::Polarization& l, const Integer& mult) {
  const Integer& n = m.brauer.n;
  if (mult == 0 || !mpz_divisible_p(mult.get_mpz_t(), n.get_mpz_t()))
    fail(ErrorCode::kNotDivisible, "m must be a nonzero multiple of n");
  if (!(l.variety() == av::dual_av(m.base)))
    fail(ErrorCode::kDimensionMismatch, "polarization must live on the dual of X");
  // Validates symmetry and the Lagrangian property of Γ(mφ_L).
  graph_lagrangian(av::phi_from_polarization(l), mult, standard_symplectic(m.base));
  const std::size_t d = m.base.lattice_rank();
  IntMatrix graph = vstack(IntMatrix(-l.form()) * mult, IntMatrix::identity(d));
  IntMatrix img = m.pi.matrix() * graph;
  Sublattice s = Sublattice::span(img, true);
  if (!s.saturated())
    fail(ErrorCode::kNotInjective, "graph meets K_alpha: iota is not injective");
  if (!is_lagrangian(s, m.A))
    fail(ErrorCode::kTheoremViolation, "iota(X^) is not Lagrangian");
  av::Homomorphism iota(l.variety(), m.A.variety(), img);
  return {std::move(iota), LagrangianSublattice(m.A, s)};
}

}  // namespace avsym::symplectic
