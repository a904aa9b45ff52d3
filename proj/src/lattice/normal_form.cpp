/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "lattice/normal_form.hpp"

#include <utility>

namespace avsym::lattice {

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row_dst -= q * row_src
void sub_row(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) -= q * a(src, c);
}

void sub_col(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) -= q * a(r, src);
}

// Quotient rounded toward zero keeps |remainder| < |divisor|; that is all the
// pivot descent needs.
Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithDecomposition snf(const IntMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(nr);
  IntMatrix v = IntMatrix::identity(nc);

  std::size_t t = 0;
  for (; t < std::min(nr, nc); ++t) {
    while (true) {
      // Smallest nonzero |entry| in the active block.
      std::size_t pr = nr, pc = nc;
      Integer best;
      for (std::size_t i = t; i < nr; ++i)
        for (std::size_t j = t; j < nc; ++j) {
          if (a(i, j) == 0) continue;
          if (pr == nr || abs(a(i, j)) < best) {
            best = abs(a(i, j));
            pr = i;
            pc = j;
          }
        }
      if (pr == nr) break;  // active block is zero
      swap_rows(a, t, pr);
      swap_rows(u, t, pr);
      swap_cols(a, t, pc);
      swap_cols(v, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = tdiv(a(i, t), a(t, t));
        sub_row(a, i, t, q);
        sub_row(u, i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = tdiv(a(t, j), a(t, t));
        sub_col(a, j, t, q);
        sub_col(v, j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and repeat.
      bool divides = true;
      for (std::size_t i = t + 1; i < nr && divides; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            sub_row(a, t, i, Integer(-1));
            sub_row(u, t, i, Integer(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) == 0) break;
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < nc; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < nr; ++c) u(t, c) = -u(t, c);
    }
  }

  SmithDecomposition d{std::move(u), std::move(a), std::move(v), {}};
  for (std::size_t i = 0; i < std::min(nr, nc); ++i) {
    if (d.S(i, i) == 0) break;
    d.invariant_factors.push_back(d.S(i, i));
  }
  return d;
}

IntMatrix hnf(const IntMatrix& m) {
  IntMatrix h = m;
  const std::size_t nr = h.rows(), nc = h.cols();
  std::size_t c = 0;
  for (std::size_t i = 0; i < nr && c < nc; ++i) {
    for (std::size_t j = c + 1; j < nc; ++j) {
      if (h(i, j) == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                 h(i, c).get_mpz_t(), h(i, j).get_mpz_t());
      Integer a = h(i, c) / g, b = h(i, j) / g;
      // [col_c col_j] <- [col_c col_j] * [[s, -b], [t, a]], determinant 1.
      for (std::size_t r = i; r < nr; ++r) {
        Integer x = h(r, c), y = h(r, j);
        h(r, c) = s * x + t * y;
        h(r, j) = a * y - b * x;
      }
    }
    if (h(i, c) == 0) continue;
    if (h(i, c) < 0)
      for (std::size_t r = i; r < nr; ++r) h(r, c) = -h(r, c);
    for (std::size_t j = 0; j < c; ++j) {
      Integer q = fdiv(h(i, j), h(i, c));
      if (q != 0)
        for (std::size_t r = i; r < nr; ++r) h(r, j) -= q * h(r, c);
    }
    ++c;
  }
  return h.columns(0, c);
}

IntMatrix integer_kernel(const IntMatrix& m) {
  auto d = snf(m);
  const std::size_t r = d.rank();
  return d.V.columns(r, m.cols() - r);
}

std::optional<IntVector> solve_in_hnf(const IntMatrix& basis,
                                      std::span<const Integer> v) {
  if (v.size() != basis.rows())
    fail(ErrorCode::kDimensionMismatch, "solve_in_hnf: length mismatch");
  IntVector res(v.begin(), v.end());
  IntVector coef(basis.cols());
  std::size_t row = 0;
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    while (row < basis.rows() && basis(row, j) == 0) {
      if (res[row] != 0) return std::nullopt;
      ++row;
    }
    ensure(row < basis.rows(), "solve_in_hnf: basis not in HNF");
    if (!mpz_divisible_p(res[row].get_mpz_t(), basis(row, j).get_mpz_t()))
      return std::nullopt;
    coef[j] = res[row] / basis(row, j);
    for (std::size_t r = row; r < basis.rows(); ++r)
      res[r] -= coef[j] * basis(r, j);
    ++row;
  }
  for (const auto& x : res)
    if (x != 0) return std::nullopt;
  return coef;
}

IntVector primitive_part(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return v;
  for (auto& x : v) x /= g;
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

}  // namespace avsym::lattice
