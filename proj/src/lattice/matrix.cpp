/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "lattice/matrix.hpp"

#include <sstream>
#include <utility>

namespace avsym {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kInfiniteCokernel: return "InfiniteCokernel";
    case ErrorCode::kDegeneratePairing: return "DegeneratePairing";
    case ErrorCode::kSourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorCode::kNotAnIsogeny: return "NotAnIsogeny";
    case ErrorCode::kNotIsotropic: return "NotIsotropic";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kInfiniteIntersection: return "InfiniteIntersection";
    case ErrorCode::kSearchExhausted: return "SearchExhausted";
    case ErrorCode::kNotDivisible: return "NotDivisible";
    case ErrorCode::kNotInjective: return "NotInjective";
    case ErrorCode::kNotSymplecticIso: return "NotSymplecticIso";
    case ErrorCode::kTheoremViolation: return "TheoremViolation";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace avsym

namespace avsym::lattice {

template <class T>
Matrix<T>::Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols)
    fail(ErrorCode::kDimensionMismatch, "matrix entry count != rows*cols");
}

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      fail(ErrorCode::kDimensionMismatch, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <class T>
Matrix<T> Matrix<T>::diagonal(std::span<const T> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

template <class T>
std::vector<T> Matrix<T>::column(std::size_t c) const {
  std::vector<T> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

template <class T>
void Matrix<T>::set_column(std::size_t c, std::span<const T> v) {
  if (v.size() != rows_)
    fail(ErrorCode::kDimensionMismatch, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

template <class T>
Matrix<T> Matrix<T>::block(std::size_t r0, std::size_t c0, std::size_t nr,
                           std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    fail(ErrorCode::kDimensionMismatch, "block out of range");
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

template <class T>
bool Matrix<T>::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

template <class T>
bool Matrix<T>::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

template <class T>
Matrix<T> Matrix<T>::operator-() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

template <class T>
Matrix<T>& Matrix<T>::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(ErrorCode::kDimensionMismatch, "matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

template <class T>
Matrix<T>& Matrix<T>::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(ErrorCode::kDimensionMismatch, "matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

template <class T>
Matrix<T>& Matrix<T>::operator*=(const T& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows())
    fail(ErrorCode::kDimensionMismatch, "matrix product shape mismatch");
  Matrix<T> p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, std::span<const T> v) {
  if (a.cols() != v.size())
    fail(ErrorCode::kDimensionMismatch, "matrix-vector shape mismatch");
  std::vector<T> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

IntMatrix operator*(IntMatrix a, long s) {
  a *= Integer(s);
  return a;
}

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows())
    fail(ErrorCode::kDimensionMismatch, "hstack row mismatch");
  Matrix<T> m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols())
    fail(ErrorCode::kDimensionMismatch, "vstack column mismatch");
  Matrix<T> m(a.rows() + b.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r) m(a.rows() + r, c) = b(r, c);
  }
  return m;
}

template <class T>
Matrix<T> block_diagonal(const Matrix<T>& a, const Matrix<T>& b) {
  return blocks(a, Matrix<T>(a.rows(), b.cols()), Matrix<T>(b.rows(), a.cols()),
                b);
}

template <class T>
Matrix<T> blocks(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                 const Matrix<T>& d) {
  return vstack(hstack(a, b), hstack(c, d));
}

RatMatrix to_rational(const IntMatrix& m) {
  std::vector<Rational> d;
  d.reserve(m.data().size());
  for (const auto& x : m.data()) d.emplace_back(x);
  return RatMatrix(m.rows(), m.cols(), std::move(d));
}

bool is_integral(const RatMatrix& m) {
  for (const auto& x : m.data())
    if (x.get_den() != 1) return false;
  return true;
}

IntMatrix to_integer(const RatMatrix& m) {
  std::vector<Integer> d;
  d.reserve(m.data().size());
  for (const auto& x : m.data()) {
    if (x.get_den() != 1)
      fail(ErrorCode::kInvalidArgument, "matrix entry is not integral");
    d.push_back(x.get_num());
  }
  return IntMatrix(m.rows(), m.cols(), std::move(d));
}

Integer common_denominator(const RatMatrix& m) {
  Integer l = 1;
  for (const auto& x : m.data()) {
    Integer t;
    mpz_lcm(t.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    l = t;
  }
  return l;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square())
    fail(ErrorCode::kDimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Row echelon form in place; returns the pivot columns.
std::vector<std::size_t> echelon(RatMatrix& a, Rational* det_sign = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(r, k), a(p, k));
      if (det_sign) *det_sign = -*det_sign;
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k) a(i, k) -= f * a(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational determinant(const RatMatrix& m) {
  if (!m.is_square())
    fail(ErrorCode::kDimensionMismatch, "determinant of non-square matrix");
  RatMatrix a = m;
  Rational d = 1;
  auto piv = echelon(a, &d);
  if (piv.size() < a.rows()) return 0;
  for (std::size_t i = 0; i < a.rows(); ++i) d *= a(i, i);
  return d;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return echelon(a).size();
}

RatMatrix solve(const RatMatrix& a, const RatMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows())
    fail(ErrorCode::kDimensionMismatch, "solve: shape mismatch");
  const std::size_t n = a.rows();
  RatMatrix aug = hstack(a, b);
  // Gauss-Jordan.
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug(p, c) == 0) ++p;
    if (p == n) fail(ErrorCode::kInvalidArgument, "singular matrix");
    if (p != c)
      for (std::size_t k = 0; k < aug.cols(); ++k) std::swap(aug(c, k), aug(p, k));
    Rational inv = 1 / aug(c, c);
    for (std::size_t k = c; k < aug.cols(); ++k) aug(c, k) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug(i, c) == 0) continue;
      Rational f = aug(i, c);
      for (std::size_t k = c; k < aug.cols(); ++k) aug(i, k) -= f * aug(c, k);
    }
  }
  return aug.block(0, n, n, b.cols());
}

RatMatrix inverse(const RatMatrix& m) {
  return solve(m, RatMatrix::identity(m.rows()));
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  Integer d = determinant(m);
  if (abs(d) != 1)
    fail(ErrorCode::kInvalidArgument, "matrix is not unimodular");
  return to_integer(inverse(to_rational(m)));
}

Integer mod_floor(const Integer& a, const Integer& n) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

Rational frac(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> parse_rational(std::string_view s) {
  auto valid_int = [](std::string_view t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string_view t) {
    return (!t.empty() && t[0] == '+') ? t.substr(1) : t;
  };
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_int(s, true)) return std::nullopt;
    return Rational(Integer(std::string(strip_plus(s))));
  }
  auto num = s.substr(0, slash);
  auto den = s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) return std::nullopt;
  Integer d(std::string{den});
  if (d == 0) return std::nullopt;
  Rational q(Integer(std::string(strip_plus(num))), d);
  q.canonicalize();
  return q;
}

template <class T>
std::string to_string(const Matrix<T>& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c)
      os << (c ? ", " : "") << to_string(m(r, c));
    os << ']';
  }
  os << ']';
  return os.str();
}

#define AVSYM_INSTANTIATE(T)                                                \
  template class Matrix<T>;                                                 \
  template Matrix<T> operator*(const Matrix<T>&, const Matrix<T>&);         \
  template std::vector<T> operator*(const Matrix<T>&, std::span<const T>);  \
  template Matrix<T> hstack(const Matrix<T>&, const Matrix<T>&);            \
  template Matrix<T> vstack(const Matrix<T>&, const Matrix<T>&);            \
  template Matrix<T> block_diagonal(const Matrix<T>&, const Matrix<T>&);    \
  template Matrix<T> blocks(const Matrix<T>&, const Matrix<T>&,             \
                            const Matrix<T>&, const Matrix<T>&);            \
  template std::string to_string(const Matrix<T>&);

AVSYM_INSTANTIATE(Integer)
AVSYM_INSTANTIATE(Rational)
#undef AVSYM_INSTANTIATE

}  // namespace avsym::lattice
