/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "selftest/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace avsym::oracle {

using lattice::Rational;

namespace {

Integer det_cofactor(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<Integer>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      sub.push_back(std::move(row));
    }
    Integer t = a[0][c] * det_cofactor(sub);
    if (c % 2) d -= t; else d += t;
  }
  return d;
}

void combinations(std::size_t n, std::size_t k, std::size_t start,
                  std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

std::vector<Integer> minors_invariant_factors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    combinations(m.rows(), k, 0, cur, rs);
    combinations(m.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) a[i][j] = m(r[i], c[j]);
        Integer d = det_cofactor(a);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

long SmallPairing::operator()(const std::vector<long>& x,
                              const std::vector<long>& y) const {
  const std::size_t k = orders.size();
  long s = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      s = mod(s + mod(x[i] * y[j], N) * c[i * k + j], N);
  return s;
}

SmallPairing to_small(const groups::AlternatingPairing& e) {
  SmallPairing p;
  const std::size_t k = e.group().num_generators();
  for (const auto& m : e.group().invariant_factors()) p.orders.push_back(m.get_si());
  p.N = k ? p.orders.back() : 1;
  p.c.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational v = e.matrix()(i, j) * p.N;
      if (v.get_den() != 1) throw std::logic_error("pairing value not in (1/N)Z");
      p.c[i * k + j] = mod(v.get_num().get_si(), p.N);
    }
  return p;
}

std::vector<std::vector<long>> all_elements(const std::vector<long>& orders) {
  std::vector<std::vector<long>> out;
  std::vector<long> x(orders.size(), 0);
  while (true) {
    out.push_back(x);
    std::size_t i = 0;
    while (i < x.size() && ++x[i] == orders[i]) x[i++] = 0;
    if (i == x.size()) break;
  }
  return out;
}

bool is_alternating(const SmallPairing& p) {
  auto el = all_elements(p.orders);
  for (const auto& x : el) {
    if (p(x, x) != 0) return false;
    for (const auto& y : el)
      if (mod(p(x, y) + p(y, x), p.N) != 0) return false;
  }
  return true;
}

bool is_bilinear(const SmallPairing& p) {
  auto el = all_elements(p.orders);
  for (const auto& x : el)
    for (const auto& x2 : el) {
      std::vector<long> s(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) s[i] = (x[i] + x2[i]) % p.orders[i];
      for (const auto& y : el)
        if (p(s, y) != mod(p(x, y) + p(x2, y), p.N)) return false;
    }
  return true;
}

bool is_nondegenerate(const SmallPairing& p) {
  auto el = all_elements(p.orders);
  for (std::size_t a = 1; a < el.size(); ++a) {
    bool hit = false;
    for (const auto& y : el)
      if (p(el[a], y) != 0) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool has_hyperbolic_pair(const SmallPairing& p, long m) {
  if (p.N % m != 0) return false;
  auto el = all_elements(p.orders);
  auto order = [&](const std::vector<long>& x) {
    long o = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      long oi = p.orders[i] / std::gcd(x[i], p.orders[i]);
      o = std::lcm(o, oi);
    }
    return o;
  };
  const long target = p.N / m;
  for (const auto& a : el) {
    if (order(a) != m) continue;
    for (const auto& b : el)
      if (order(b) == m && p(a, b) == target) return true;
  }
  return false;
}

bool admits_nondegenerate_pairing(const std::vector<long>& orders) {
  const std::size_t k = orders.size();
  if (k == 0) return true;
  SmallPairing p;
  p.orders = orders;
  p.N = 1;
  for (long m : orders) p.N = std::lcm(p.N, m);
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<long> choices;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      slots.emplace_back(i, j);
      choices.push_back(std::gcd(orders[i], orders[j]));
    }
  auto el = all_elements(orders);
  std::vector<long> t(slots.size(), 0);
  while (true) {
    p.c.assign(k * k, 0);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      auto [i, j] = slots[s];
      long v = t[s] * (p.N / choices[s]);
      p.c[i * k + j] = v;
      p.c[j * k + i] = mod(-v, p.N);
    }
    bool nondeg = true;
    for (std::size_t a = 1; a < el.size() && nondeg; ++a) {
      bool hit = false;
      for (std::size_t j = 0; j < k && !hit; ++j) {
        long s = 0;
        for (std::size_t i = 0; i < k; ++i) s += el[a][i] * p.c[i * k + j];
        hit = mod(s, p.N) != 0;
      }
      nondeg = hit;
    }
    if (nondeg) return true;
    std::size_t s = 0;
    while (s < t.size() && ++t[s] == choices[s]) t[s++] = 0;
    if (s == t.size()) break;
  }
  return false;
}

namespace {

void chains(long remaining, long prev, std::vector<long>& cur,
            std::vector<std::vector<long>>& out) {
  if (remaining == 1) {
    out.push_back(cur);
    return;
  }
  for (long f = prev; f <= remaining; f += prev) {
    if (f < 2 || remaining % f != 0) continue;
    long rest = remaining / f;
    if (rest != 1 && rest % f != 0) continue;
    cur.push_back(f);
    chains(rest, f, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long>> abelian_groups_of_order(long n) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  chains(n, 1, cur, out);
  return out;
}

long heisenberg_value_scaled(const std::vector<long>& k, long N,
                             const std::vector<long>& x,
                             const std::vector<long>& y) {
  const std::size_t r = k.size();
  long s = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const long a = x[i], chi = x[r + i];
    const long a2 = y[i], chi2 = y[r + i];
    s += (chi2 * a - chi * a2) * (N / k[i]);
  }
  return mod(s, N);
}

namespace {

// Solves A c = b over Q by Gaussian elimination, A square and invertible.
std::vector<Rational> solve_square(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("oracle: singular lift system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

Rational frac_part(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(f);
  r.canonicalize();
  return r;
}

}  // namespace

std::string check_intersection_pairing(const IntMatrix& psi,
                                       const IntMatrix& bz,
                                       const IntMatrix& bw,
                                       const groups::AlternatingPairing& e,
                                       const IntMatrix& gens,
                                       unsigned long long seed) {
  const std::size_t d = psi.rows();
  const std::size_t nz = bz.cols(), nw = bw.cols();
  if (nz + nw != d) return "bases do not span a full-rank system";
  std::vector<std::vector<Rational>> sys(d, std::vector<Rational>(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < nz; ++c) sys[r][c] = bz(r, c);
    for (std::size_t c = 0; c < nw; ++c) sys[r][nz + c] = bw(r, c);
  }
  // Columns of sys^-1, so each lift is one matrix-vector product.
  std::vector<std::vector<Rational>> inv(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rational> unit(d);
    unit[i] = 1;
    inv[i] = solve_square(sys, unit);
  }
  auto apply_inverse = [&](const std::vector<Integer>& v) {
    std::vector<Rational> c(d);
    for (std::size_t i = 0; i < d; ++i)
      if (v[i] != 0)
        for (std::size_t r = 0; r < d; ++r) c[r] += inv[i][r] * v[i];
    return c;
  };
  std::mt19937_64 rng(seed);
  auto shift = [&]() { return static_cast<long>(rng() % 7) - 3; };

  struct Lift {
    std::vector<Rational> z, w;  // lift in span Z, lift in span W
  };
  // x = z~ + w~ with z~ in span Z, w~ in span W; the Z-lift is z~ and the
  // W-lift is -w~, both congruent to x modulo the lattice.
  auto lift = [&](const std::vector<Integer>& v) {
    auto c = apply_inverse(v);
    for (std::size_t i = 0; i < nz; ++i) c[i] += shift();
    for (std::size_t i = 0; i < nw; ++i) c[nz + i] += shift();
    Lift l{std::vector<Rational>(d), std::vector<Rational>(d)};
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t i = 0; i < nz; ++i) l.z[r] += bz(r, i) * c[i];
      for (std::size_t i = 0; i < nw; ++i) l.w[r] -= bw(r, i) * c[nz + i];
    }
    return l;
  };
  auto form = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (psi(i, j) != 0) s += x[i] * Rational(psi(i, j)) * y[j];
    return frac_part(s);
  };

  const auto& orders = e.group().invariant_factors();
  std::vector<long> ord;
  for (const auto& m : orders) ord.push_back(m.get_si());
  const std::size_t k = ord.size();
  if (gens.cols() != k || gens.rows() != d) return "generator matrix shape";

  // Two independent lifts of every generator.
  std::vector<Lift> glift, glift2;
  for (std::size_t j = 0; j < k; ++j) glift.push_back(lift(gens.column(j)));
  for (std::size_t j = 0; j < k; ++j) glift2.push_back(lift(gens.column(j)));

  // Generators have exactly the declared orders in Λ / (Λ_Z + Λ_W).
  auto coeffs = [&](const std::vector<Integer>& v) { return apply_inverse(v); };
  auto killed_by = [&](const std::vector<Rational>& c, long t) {
    return std::all_of(c.begin(), c.end(), [&](const Rational& q) {
      Rational s = q * t;
      s.canonicalize();
      return s.get_den() == 1;
    });
  };
  for (std::size_t j = 0; j < k; ++j) {
    auto c = coeffs(gens.column(j));
    if (!killed_by(c, ord[j])) return "generator order too large";
    for (long p = 2; p <= ord[j]; ++p)
      if (ord[j] % p == 0 && killed_by(c, ord[j] / p))
        return "generator order too small";
  }

  for (const auto& x : all_elements(ord)) {
    std::vector<Integer> v(d, Integer(0));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t r = 0; r < d; ++r) v[r] += gens(r, j) * x[j];
    Lift lx = lift(v);
    Lift lx2 = lift(v);
    std::vector<Integer> xi(x.begin(), x.end());
    if (form(lx.z, lx2.w) != 0) return "not alternating";
    bool nonzero = std::any_of(x.begin(), x.end(), [](long t) { return t != 0; });
    bool hit = false;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Integer> gj(k, Integer(0));
      gj[j] = 1;
      Rational lib = e(xi, gj);
      Rational a = form(lx.z, glift[j].w);
      Rational b = form(lx2.z, glift2[j].w);
      if (a != b) return "value depends on the lift";
      if (a != lib) return "library value disagrees with Psi on lifts";
      Rational expect = 0;
      for (std::size_t i = 0; i < k; ++i) expect += e.matrix()(i, j) * x[i];
      if (frac_part(expect) != a) return "not bilinear";
      if (a != 0) hit = true;
    }
    if (nonzero && !hit) return "degenerate";
  }
  return {};
}

}  // namespace avsym::oracle
