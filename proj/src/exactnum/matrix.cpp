// SPDX-License-Identifier: Apache-2.0
#include "supergr/matrix.hpp"

#include <sstream>
#include <utility>

#include "supergr/errors.hpp"

namespace supergr {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

Matrix Matrix::diagonal(std::span<const Rational> entries) {
  Matrix out(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) out(i, i) = entries[i];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  }
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shape mismatch in sum");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Rational(-1) * b; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch in product");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

std::vector<Rational> Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DomainError("vector length does not match matrix");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// Row-reduces `a` in place to echelon form; returns the pivot columns and
// the sign of the row permutation applied.
std::pair<std::vector<std::size_t>, int> echelon(Matrix& a) {
  std::vector<std::size_t> pivots;
  int swaps_sign = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
      swaps_sign = -swaps_sign;
    }
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      const Rational f = a(i, col) / a(row, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {pivots, swaps_sign};
}

}  // namespace

Rational determinant(const Matrix& a) {
  if (!a.is_square()) throw DomainError("determinant of a non-square matrix");
  Matrix work = a;
  auto [pivots, sign] = echelon(work);
  if (pivots.size() < a.rows()) return 0;
  Rational det = sign;
  for (std::size_t i = 0; i < a.rows(); ++i) det *= work(i, i);
  return det;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && aug(p, col).is_zero()) ++p;
    if (p == n) return std::nullopt;
    if (p != col)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(p, j), aug(col, j));
    const Rational pivot_inv = aug(col, col).inverse();
    for (std::size_t j = 0; j < 2 * n; ++j) aug(col, j) *= pivot_inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug(i, col).is_zero()) continue;
      const Rational f = aug(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(col, j);
    }
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

std::size_t rank(const Matrix& a) {
  Matrix work = a;
  return echelon(work).first.size();
}

std::optional<std::vector<Rational>> solve(const Matrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw DomainError("right-hand side length mismatch");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto [pivots, sign] = echelon(aug);
  (void)sign;
  // A pivot in the last column means the system is inconsistent.
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc = aug(k, n);
    for (std::size_t j = k + 1; j < n; ++j) acc -= aug(k, j) * x[j];
    x[k] = acc / aug(k, k);
  }
  return x;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

Inertia inertia(const Matrix& symmetric) {
  if (!symmetric.is_symmetric()) throw DomainError("inertia requires a symmetric matrix");
  Matrix a = symmetric;
  const std::size_t n = a.rows();
  Inertia out;
  auto add_to = [&](std::size_t dst, std::size_t src) {
    // congruence by the elementary matrix adding index src into dst
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += a(src, j);
    for (std::size_t i = 0; i < n; ++i) a(i, dst) += a(i, src);
  };
  auto swap_idx = [&](std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p).is_zero()) ++p;
    if (p == n) {
      // all remaining diagonal entries vanish; look for an off-diagonal one
      std::size_t q = n;
      for (std::size_t j = k + 1; j < n && q == n; ++j)
        if (!a(k, j).is_zero()) q = j;
      if (q == n) {
        bool found = false;
        for (std::size_t i = k + 1; i < n && !found; ++i)
          for (std::size_t j = i + 1; j < n && !found; ++j)
            if (!a(i, j).is_zero()) {
              swap_idx(k, i);
              add_to(k, j);
              found = true;
            }
        if (!found) {
          out.zero += n - k;
          return out;
        }
      } else {
        add_to(k, q);  // a(k,k) becomes 2 a(k,q) != 0
      }
    } else if (p != k) {
      swap_idx(k, p);
    }
    const Rational pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rational f = a(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t j = k; j < n; ++j) a(j, i) = a(i, j);
    }
    (pivot.sign() > 0 ? out.positive : out.negative) += 1;
  }
  return out;
}

bool leading_minors_positive(const Matrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    Matrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = a(i, j);
    if (determinant(lead).sign() <= 0) return false;
  }
  return true;
}

Rational bilinear(const Matrix& gram, std::span<const Rational> v, std::span<const Rational> w) {
  if (v.size() != gram.rows() || w.size() != gram.cols())
    throw DomainError("dimension mismatch in bilinear form");
  Rational acc;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (!gram(i, j).is_zero()) acc += v[i] * gram(i, j) * w[j];
  }
  return acc;
}

}  // namespace supergr
