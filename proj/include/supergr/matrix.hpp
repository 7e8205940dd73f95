// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "supergr/rational.hpp"

namespace supergr {

/// Dense row-major matrix of exact rationals. Sizes here never exceed a few
/// dozen, so no attempt is made at blocking or sparsity.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Rational> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  bool is_symmetric() const;
  bool is_skew_symmetric() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::vector<Rational> apply(std::span<const Rational> v) const;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Determinant by fraction-exact Gaussian elimination.
Rational determinant(const Matrix& a);

/// Inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Solves a x = b for a consistent (possibly overdetermined) system with
/// independent columns. Returns nullopt when the columns are dependent or the
/// system is inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& a, std::span<const Rational> b);

Matrix block_diagonal(const Matrix& a, const Matrix& b);

/// Inertia (n_plus, n_minus, n_zero) of a symmetric matrix, computed by
/// congruence diagonalization.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};
Inertia inertia(const Matrix& symmetric);

/// Sylvester's criterion: every leading principal minor is positive.
bool leading_minors_positive(const Matrix& a);

/// Euclidean-free bilinear pairing v^T g w.
Rational bilinear(const Matrix& gram, std::span<const Rational> v, std::span<const Rational> w);

}  // namespace supergr
