// SPDX-License-Identifier: Apache-2.0
#pragma once

// Pfaffians and the alpha-invariant of a q(1)-module V = V_0 + V_1 with an
// odd operator Q.
//
// alpha(V, omega) is computed in the orthonormal-basis form: when the even
// basis makes Q_0^2 skew, alpha = Pf(Q01^T Q10^{-1}), where Q01 : V_1 -> V_0
// and Q10 : V_0 -> V_1 are the off-diagonal blocks of Q. For the complex
// diagonal model Q u_i = (1+i) d_i v_i, Q v_i = (1+i) c_i u_i this reduces to
// prod c_i / d_i. The general complex-phase normalization is not represented.

#include <cstddef>
#include <span>
#include <vector>

#include "supergr/matrix.hpp"
#include "supergr/rational.hpp"

namespace supergr {

/// Square matrix with M^T = -M, checked on construction.
class SkewMatrix {
 public:
  explicit SkewMatrix(Matrix m);

  std::size_t size() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  Matrix m_;
};

/// Pf(M) with Pf([[0,1],[-1,0]]) = 1. Expansion along the first row with
/// memoization on the remaining index set. Throws DomainError for odd size.
Rational pfaffian(const SkewMatrix& m);

/// Off-diagonal blocks of Q on V = R^{2n|2n}.
struct AlphaInput {
  Matrix q01;  // V_1 -> V_0
  Matrix q10;  // V_0 -> V_1

  AlphaInput(Matrix odd_to_even, Matrix even_to_odd);
  std::size_t size() const { return q01.rows(); }
};

/// Pf(Q01^T Q10^{-1}).
Rational alpha_pfaffian(const AlphaInput& input);

/// prod c_i / d_i.
Rational alpha_diagonal(std::span<const Rational> c, std::span<const Rational> d);

struct GaussianRational {
  Rational re;
  Rational im;
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);

/// n x n matrix over Q(i).
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GaussianRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  ComplexMatrix conjugate_transpose() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GaussianRational> data_;
};

/// Entry x+iy becomes the 2x2 block [[x,-y],[y,x]] (real basis Re, Im per
/// complex coordinate, interleaved).
Matrix realify(const ComplexMatrix& a);

/// Realified diagonal model: Q01 = realify((1+i) diag c), Q10 = realify((1+i) diag d).
AlphaInput diagonal_model(std::span<const Rational> c, std::span<const Rational> d);

/// Direct sum of two modules: both blocks become block diagonal.
AlphaInput direct_sum(const AlphaInput& a, const AlphaInput& b);

}  // namespace supergr
