/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "common/error.hpp"

namespace avsym::lattice {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense row-major matrix over an exact ring. Only instantiated for Integer
// and Rational; rational entries are kept canonical so equality is entrywise.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
  }
  static Matrix diagonal(std::span<const T> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<T>& data() const noexcept { return data_; }

  std::vector<T> column(std::size_t c) const;
  std::vector<T> row(std::size_t r) const;
  void set_column(std::size_t c, std::span<const T> v);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const;
  Matrix columns(std::size_t c0, std::size_t nc) const {
    return block(0, c0, rows_, nc);
  }

  bool is_zero() const;
  bool is_identity() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const T& s);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  a += b;
  return a;
}
template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  a -= b;
  return a;
}
template <class T>
Matrix<T> operator*(Matrix<T> a, const T& s) {
  a *= s;
  return a;
}
template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
std::vector<T> operator*(const Matrix<T>& a, std::span<const T> v);

IntMatrix operator*(IntMatrix a, long s);

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> block_diagonal(const Matrix<T>& a, const Matrix<T>& b);
// [[a, b], [c, d]]
template <class T>
Matrix<T> blocks(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                 const Matrix<T>& d);

RatMatrix to_rational(const IntMatrix& m);
bool is_integral(const RatMatrix& m);
// Throws kInvalidArgument when an entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);
// Least common multiple of all entry denominators (1 for the empty matrix).
Integer common_denominator(const RatMatrix& m);

// Bareiss fraction-free elimination; exact.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
inline std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }
// Throws kInvalidArgument when singular.
RatMatrix inverse(const RatMatrix& m);
// Inverse of a matrix with determinant ±1.
IntMatrix unimodular_inverse(const IntMatrix& m);
// Unique solution x of a·x = b for square nonsingular a.
RatMatrix solve(const RatMatrix& a, const RatMatrix& b);

// Non-negative representative of a mod n (n > 0).
Integer mod_floor(const Integer& a, const Integer& n);
// Fractional part in [0, 1).
Rational frac(const Rational& q);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
// Parses "12", "-3", "3/2", "-4/6" (reduced on read). Returns nullopt on
// malformed input.
std::optional<Rational> parse_rational(std::string_view s);

template <class T>
std::string to_string(const Matrix<T>& m);

}  // namespace avsym::lattice
