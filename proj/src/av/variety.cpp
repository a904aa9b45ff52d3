/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "av/variety.hpp"

#include "lattice/sublattice.hpp"

namespace avsym::av {

using lattice::to_rational;

AbelianVarietyModel::AbelianVarietyModel(RatMatrix j) : j_(std::move(j)) {
  if (!j_.is_square() || j_.rows() % 2 != 0 || j_.rows() == 0)
    fail(ErrorCode::kValidationError, "complex structure must be 2g x 2g, g >= 1");
  RatMatrix sq = j_ * j_;
  if (!(-sq).is_identity())
    fail(ErrorCode::kValidationError, "complex structure must satisfy J^2 = -I");
}

AbelianVarietyModel product_elliptic(std::size_t g) {
  if (g == 0) fail(ErrorCode::kInvalidArgument, "dimension must be positive");
  RatMatrix j(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    j(2 * i, 2 * i + 1) = -1;
    j(2 * i + 1, 2 * i) = 1;
  }
  return AbelianVarietyModel(std::move(j));
}

AbelianVarietyModel dual_av(const AbelianVarietyModel& x) {
  return AbelianVarietyModel(-x.complex_structure().transpose());
}

Homomorphism::Homomorphism(AbelianVarietyModel source,
                           AbelianVarietyModel target, IntMatrix f)
    : source_(std::move(source)), target_(std::move(target)), f_(std::move(f)) {
  if (f_.rows() != target_.lattice_rank() || f_.cols() != source_.lattice_rank())
    fail(ErrorCode::kDimensionMismatch, "homomorphism matrix has wrong shape");
  RatMatrix fr = to_rational(f_);
  if (!(target_.complex_structure() * fr == fr * source_.complex_structure()))
    fail(ErrorCode::kValidationError, "map is not complex linear");
}

Homomorphism identity_hom(const AbelianVarietyModel& x) {
  return Homomorphism(x, x, IntMatrix::identity(x.lattice_rank()));
}

Homomorphism multiplication_by(const AbelianVarietyModel& x, long k) {
  return Homomorphism(x, x, IntMatrix::identity(x.lattice_rank()) * k);
}

Homomorphism double_dual_identification(const AbelianVarietyModel& x) {
  return Homomorphism(x, dual_av(dual_av(x)),
                      -IntMatrix::identity(x.lattice_rank()));
}

Homomorphism dual_hom(const Homomorphism& f) {
  return Homomorphism(dual_av(f.target()), dual_av(f.source()),
                      f.matrix().transpose());
}

Homomorphism hom_compose(const Homomorphism& f, const Homomorphism& h) {
  if (!(h.target() == f.source()))
    fail(ErrorCode::kSourceTargetMismatch, "compose: target(h) != source(f)");
  return Homomorphism(h.source(), f.target(), f.matrix() * h.matrix());
}

groups::FiniteAbelianGroup isogeny_kernel(const Homomorphism& f) {
  const IntMatrix& m = f.matrix();
  if (!m.is_square() || lattice::determinant(m) == 0)
    fail(ErrorCode::kNotAnIsogeny, "map has infinite kernel");
  return lattice::cokernel_group(m);
}

bool is_neron_severi_class(const AbelianVarietyModel& x, const IntMatrix& e) {
  const std::size_t d = x.lattice_rank();
  if (e.rows() != d || e.cols() != d) return false;
  if (!(e.transpose() == -e)) return false;
  RatMatrix er = to_rational(e);
  const RatMatrix& j = x.complex_structure();
  return j.transpose() * er * j == er;
}

bool is_positive_definite(const RatMatrix& s) {
  if (!s.is_square()) return false;
  if (!(s.transpose() == s)) return false;
  for (std::size_t k = 1; k <= s.rows(); ++k)
    if (lattice::determinant(s.block(0, 0, k, k)) <= 0) return false;
  return true;
}

Polarization::Polarization(AbelianVarietyModel variety, IntMatrix e)
    : variety_(std::move(variety)), e_(std::move(e)) {
  if (e_.rows() != variety_.lattice_rank() || e_.cols() != variety_.lattice_rank())
    fail(ErrorCode::kValidationError, "polarization form has wrong shape");
  if (!(e_.transpose() == -e_))
    fail(ErrorCode::kValidationError, "polarization form is not skew");
  if (!is_neron_severi_class(variety_, e_))
    fail(ErrorCode::kValidationError, "polarization form is not J-invariant");
  const RatMatrix& j = variety_.complex_structure();
  if (!is_positive_definite(j.transpose() * to_rational(e_)))
    fail(ErrorCode::kValidationError, "E(Jx, y) is not positive definite");
}

Homomorphism phi_from_polarization(const Polarization& l) {
  return Homomorphism(l.variety(), dual_av(l.variety()), l.form());
}

Polarization product_polarization(const AbelianVarietyModel& x,
                                  const std::vector<long>& weights) {
  const std::size_t g = x.dimension();
  if (weights.size() != g)
    fail(ErrorCode::kDimensionMismatch, "one weight per elliptic factor");
  IntMatrix e(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    e(2 * i, 2 * i + 1) = -weights[i];
    e(2 * i + 1, 2 * i) = weights[i];
  }
  return Polarization(x, std::move(e));
}

BrauerRepresentative trivial_brauer(const AbelianVarietyModel& x) {
  return {x, 1, IntMatrix(x.lattice_rank(), x.lattice_rank())};
}

bool validate_brauer_rep(const BrauerRepresentative& a) {
  const std::size_t d = a.variety.lattice_rank();
  if (a.n < 1) return false;
  if (a.e_alpha.rows() != d || a.e_alpha.cols() != d) return false;
  for (std::size_t i = 0; i < d; ++i) {
    if (a.e_alpha(i, i) != 0) return false;
    for (std::size_t j = 0; j < d; ++j) {
      const Integer& v = a.e_alpha(i, j);
      if (v < 0 || v >= a.n) return false;
      if (lattice::mod_floor(v + a.e_alpha(j, i), a.n) != 0) return false;
    }
  }
  return true;
}

namespace {

// Coordinates of a skew matrix: its strictly upper triangle, row by row.
std::vector<std::pair<std::size_t, std::size_t>> skew_coordinates(
    std::size_t d) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) out.emplace_back(i, j);
  return out;
}

}  // namespace

bool ns_difference_test(const BrauerRepresentative& a,
                        const BrauerRepresentative& b) {
  if (!(a.variety == b.variety) || a.n != b.n)
    fail(ErrorCode::kDimensionMismatch, "representatives on different X[n]");
  if (!validate_brauer_rep(a) || !validate_brauer_rep(b))
    fail(ErrorCode::kValidationError, "invalid Brauer representative");
  const std::size_t d = a.variety.lattice_rank();
  const auto coords = skew_coordinates(d);
  const std::size_t p = coords.size();
  const RatMatrix& j = a.variety.complex_structure();

  // NS(X) = kernel of E -> JᵀEJ - E on skew matrices.
  RatMatrix op(d * d, p);
  for (std::size_t c = 0; c < p; ++c) {
    RatMatrix e(d, d);
    e(coords[c].first, coords[c].second) = 1;
    e(coords[c].second, coords[c].first) = -1;
    RatMatrix img = j.transpose() * e * j - e;
    for (std::size_t r = 0; r < d * d; ++r) op(r, c) = img(r / d, r % d);
  }
  lattice::Sublattice ns = lattice::rational_kernel(op);

  IntMatrix gens = hstack(ns.basis(), IntMatrix::identity(p) * a.n);
  lattice::Sublattice target = lattice::Sublattice::span(gens);
  IntVector diff(p);
  for (std::size_t c = 0; c < p; ++c) {
    const auto [r, s] = coords[c];
    diff[c] = lattice::mod_floor(a.e_alpha(r, s) - b.e_alpha(r, s), a.n);
  }
  return target.contains(diff);
}

std::optional<RatMatrix> restrict_complex_structure(const RatMatrix& j,
                                                    const IntMatrix& basis) {
  RatMatrix b = to_rational(basis);
  RatMatrix jb = j * b;
  // Solve b * X = jb via the normal equations (b has full column rank).
  RatMatrix bt = b.transpose();
  RatMatrix x = lattice::solve(bt * b, bt * jb);
  if (!(b * x == jb)) return std::nullopt;
  return x;
}

}  // namespace avsym::av
