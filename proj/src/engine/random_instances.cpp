/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "engine/random_instances.hpp"

namespace avsym::engine {

using lattice::RatMatrix;
using symplectic::LagrangianSublattice;
using symplectic::SymplecticAV;

IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  for (int s = 0; s < steps; ++s) {
    std::size_t i = rng.below(n), j = rng.below(n);
    if (i == j) {
      for (std::size_t r = 0; r < n; ++r) u(r, i) = -u(r, i);
      continue;
    }
    long k = rng.between(-2, 2);
    for (std::size_t r = 0; r < n; ++r) u(r, j) += k * u(r, i);
  }
  return u;
}

IntMatrix random_complex_skew(Rng& rng, std::size_t g, long bound) {
  IntMatrix s(2 * g, 2 * g);
  for (std::size_t k = 0; k < g; ++k) {
    // i t on the diagonal.
    long t = rng.between(-bound, bound);
    s(2 * k, 2 * k + 1) = -t;
    s(2 * k + 1, 2 * k) = t;
    for (std::size_t l = k + 1; l < g; ++l) {
      // c_kl = a + b i, c_lk = −a + b i.
      long a = rng.between(-bound, bound), b = rng.between(-bound, bound);
      s(2 * k, 2 * l) = a;
      s(2 * k, 2 * l + 1) = -b;
      s(2 * k + 1, 2 * l) = b;
      s(2 * k + 1, 2 * l + 1) = a;
      s(2 * l, 2 * k) = -a;
      s(2 * l, 2 * k + 1) = -b;
      s(2 * l + 1, 2 * k) = b;
      s(2 * l + 1, 2 * k + 1) = -a;
    }
  }
  return s;
}

namespace {

IntMatrix nonsingular_complex_skew(Rng& rng, std::size_t g, long bound) {
  for (;;) {
    IntMatrix h = random_complex_skew(rng, g, bound);
    if (lattice::determinant(h) != 0) return h;
  }
}

// Random element of O(Psi_std) for Psi = [[0, I], [I, 0]] of size 2d.
IntMatrix random_orthogonal(Rng& rng, std::size_t d) {
  const IntMatrix id = IntMatrix::identity(d);
  const IntMatrix zero(d, d);
  IntMatrix t = IntMatrix::identity(2 * d);
  for (int step = 0; step < 3; ++step) {
    IntMatrix s(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        s(i, j) = rng.between(-1, 1);
        s(j, i) = -s(i, j);
      }
    switch (rng.below(3)) {
      case 0: t = t * lattice::blocks(id, s, zero, id); break;
      case 1: t = t * lattice::blocks(id, zero, s, id); break;
      default: {
        IntMatrix u = random_unimodular(rng, d, 6);
        IntMatrix uit = lattice::unimodular_inverse(u).transpose();
        t = t * lattice::blocks(u, zero, zero, uit);
      }
    }
  }
  return t;
}

LagrangianSublattice moved(const SymplecticAV& a, const IntMatrix& tinv,
                           const IntMatrix& basis) {
  return LagrangianSublattice(a, lattice::Sublattice::span(tinv * basis, true));
}

std::vector<long> random_weights(Rng& rng, std::size_t g) {
  std::vector<long> w(g);
  for (auto& x : w) x = rng.between(1, 3);
  return w;
}

// Polarization on the dual of product_elliptic(g) moved to the frame P of X.
av::Polarization dual_polarization(const av::AbelianVarietyModel& x,
                                   const IntMatrix& frame,
                                   const std::vector<long>& weights) {
  const std::size_t g = x.dimension();
  av::Polarization base =
      av::product_polarization(av::dual_av(av::product_elliptic(g)), weights);
  IntMatrix pinv = lattice::unimodular_inverse(frame);
  return av::Polarization(av::dual_av(x), pinv * base.form() * pinv.transpose());
}

av::AbelianVarietyModel in_frame(const av::AbelianVarietyModel& x,
                                 const IntMatrix& p) {
  RatMatrix pr = to_rational(p);
  return av::AbelianVarietyModel(lattice::inverse(pr) * x.complex_structure() * pr);
}

IntMatrix reduce_mod(IntMatrix e, const Integer& n) {
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < e.cols(); ++j) e(i, j) = lattice::mod_floor(e(i, j), n);
  return e;
}

}  // namespace

SymplecticInstance random_symplectic_instance(std::uint64_t seed, std::size_t g) {
  if (g == 0) fail(ErrorCode::kInvalidArgument, "dimension must be positive");
  Rng rng(seed);
  const std::size_t d = 2 * g;
  const av::AbelianVarietyModel x = av::product_elliptic(g);
  const SymplecticAV a0 = symplectic::standard_symplectic(x);
  const IntMatrix id = IntMatrix::identity(d);
  const IntMatrix zero(d, d);

  IntMatrix z0, w0;
  long shear = 0;
  switch (rng.below(3)) {
    case 0:
      z0 = vstack(id, zero);
      w0 = vstack(random_complex_skew(rng, g, 2), id);
      break;
    case 1: {
      shear = rng.between(1, 4);
      IntMatrix h = rng.coin() ? av::product_polarization(x, std::vector<long>(g, 1)).form()
                               : nonsingular_complex_skew(rng, g, 2);
      z0 = vstack(zero, id);
      w0 = vstack(h * shear, id);
      break;
    }
    default:
      shear = -1;
      for (;;) {
        IntMatrix h1 = random_complex_skew(rng, g, 1);
        IntMatrix h2 = random_complex_skew(rng, g, 1);
        if (lattice::determinant(h1 * h2 - id) == 0) continue;
        z0 = vstack(h1, id);
        w0 = vstack(id, h2);
        break;
      }
  }

  IntMatrix t = random_orthogonal(rng, d);
  IntMatrix tinv = lattice::unimodular_inverse(t);
  RatMatrix j = to_rational(tinv) * a0.complex_structure() * to_rational(t);
  SymplecticAV a(j, a0.form());
  return {a, moved(a, tinv, z0), moved(a, tinv, w0), shear};
}

TwistedInstance random_av_with_brauer(std::uint64_t seed, std::size_t g,
                                      const Integer& n) {
  if (g == 0) fail(ErrorCode::kInvalidArgument, "dimension must be positive");
  if (n < 1) fail(ErrorCode::kInvalidArgument, "n must be positive");
  Rng rng(seed);
  const std::size_t d = 2 * g;
  IntMatrix p = random_unimodular(rng, d);
  av::AbelianVarietyModel x = in_frame(av::product_elliptic(g), p);

  IntMatrix e(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Integer v = static_cast<long>(rng.below(n.get_ui()));
      e(i, j) = v;
      e(j, i) = lattice::mod_floor(-v, n);
    }
  av::BrauerRepresentative alpha{x, n, e};
  return {x, alpha, dual_polarization(x, p, random_weights(rng, g)), p};
}

PipelineInstance pipeline_instance(std::uint64_t seed, std::size_t g,
                                   const Integer& n) {
  TwistedInstance base = random_av_with_brauer(seed, g, n);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t d = 2 * g;
  const IntMatrix id = IntMatrix::identity(d);
  const IntMatrix zero(d, d);
  const Integer& nn = base.alpha.n;

  if (n == 1 && rng.below(4) == 0) {
    // (x, ξ) ↦ (ξ, x) from X × X̂ to X̂ × X̂̂.
    av::AbelianVarietyModel y = av::dual_av(base.x);
    auto mx = symplectic::quotient_by_isotropic(base.x, av::trivial_brauer(base.x));
    auto my = symplectic::quotient_by_isotropic(y, av::trivial_brauer(y));
    symplectic::SymplecticMorphism sw(mx.A, my.A, lattice::blocks(zero, id, id, zero), 1);
    // A polarization on X̂̂ = X.
    IntMatrix p = base.frame;
    av::Polarization lx = av::product_polarization(av::product_elliptic(g), random_weights(rng, g));
    av::Polarization l(av::dual_av(y), p.transpose() * lx.form() * p);
    return {"swap", base.x, av::trivial_brauer(base.x), y, av::trivial_brauer(y), sw, l};
  }

  // Y is X in a further lattice basis P2; β is α transported.
  IntMatrix p2 = random_unimodular(rng, d);
  IntMatrix p2inv = lattice::unimodular_inverse(p2);
  av::AbelianVarietyModel y = in_frame(base.x, p2);
  av::BrauerRepresentative beta{y, nn, reduce_mod(p2.transpose() * base.alpha.e_alpha * p2, nn)};

  // Shears by n times complex skew maps preserve Λ_A; S must intertwine J_X
  // and J_X̂, which holds for P⁻¹ S0 P⁻ᵀ and Pᵀ S0 P with S0 complex.
  const IntMatrix& p = base.frame;
  IntMatrix pinv = lattice::unimodular_inverse(p);
  IntMatrix t = IntMatrix::identity(2 * d);
  const int steps = static_cast<int>(rng.between(0, 3));
  for (int s = 0; s < steps; ++s) {
    IntMatrix s0 = random_complex_skew(rng, g, 1) * nn;
    if (rng.coin())
      t = t * lattice::blocks(id, pinv * s0 * pinv.transpose(), zero, id);
    else
      t = t * lattice::blocks(id, zero, p.transpose() * s0 * p, id);
  }
  if (rng.coin()) t = -t;
  IntMatrix phi = lattice::blocks(p2inv, zero, zero, p2.transpose());

  auto mx = symplectic::quotient_by_isotropic(base.x, base.alpha);
  auto my = symplectic::quotient_by_isotropic(y, beta);
  RatMatrix gq = to_rational(my.pi.matrix() * phi * t) * mx.basis_change;
  symplectic::SymplecticMorphism giso(mx.A, my.A, lattice::to_integer(gq), 1);

  av::Polarization l = dual_polarization(y, p * p2, random_weights(rng, g));
  std::string label = steps == 0 ? "rebase" : "shear";
  return {label, base.x, base.alpha, y, beta, giso, l};
}

std::vector<PipelineInstance> pipeline_corpus() {
  std::vector<PipelineInstance> out;
  out.reserve(100);
  for (std::uint64_t i = 0; i < 100; ++i) {
    std::size_t g = 1 + i % 3;
    Integer n = static_cast<long>(1 + (i / 3) % 4);
    out.push_back(pipeline_instance(kCorpusSeed + i, g, n));
  }
  return out;
}

}  // namespace avsym::engine
