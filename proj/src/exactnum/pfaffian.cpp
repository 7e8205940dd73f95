// SPDX-License-Identifier: Apache-2.0
#include "supergr/pfaffian.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "supergr/errors.hpp"

namespace supergr {

SkewMatrix::SkewMatrix(Matrix m) : m_(std::move(m)) {
  if (!m_.is_skew_symmetric()) throw DomainError("matrix is not skew-symmetric");
}

namespace {

constexpr std::size_t kMaxPfaffianSize = 32;

class PfaffianExpansion {
 public:
  explicit PfaffianExpansion(const SkewMatrix& m) : m_(m) {}

  Rational of(std::uint64_t remaining) {
    if (remaining == 0) return 1;
    if (auto it = memo_.find(remaining); it != memo_.end()) return it->second;

    const int first = std::countr_zero(remaining);
    std::uint64_t rest = remaining & (remaining - 1);
    Rational acc;
    int sign = 1;
    for (std::uint64_t scan = rest; scan != 0; scan &= scan - 1) {
      const int j = std::countr_zero(scan);
      const Rational& entry = m_(first, j);
      if (!entry.is_zero()) {
        const Rational minor = of(rest & ~(std::uint64_t{1} << j));
        if (!minor.is_zero()) acc += sign > 0 ? entry * minor : -(entry * minor);
      }
      sign = -sign;
    }
    memo_.emplace(remaining, acc);
    return acc;
  }

 private:
  const SkewMatrix& m_;
  std::unordered_map<std::uint64_t, Rational> memo_;
};

}  // namespace

Rational pfaffian(const SkewMatrix& m) {
  const std::size_t n = m.size();
  if (n % 2 != 0) throw DomainError("Pfaffian undefined for odd dimension");
  if (n > kMaxPfaffianSize) throw DomainError("Pfaffian size exceeds supported bound");
  if (n == 0) return 1;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  return PfaffianExpansion(m).of(all);
}

AlphaInput::AlphaInput(Matrix odd_to_even, Matrix even_to_odd)
    : q01(std::move(odd_to_even)), q10(std::move(even_to_odd)) {
  if (!q01.is_square() || !q10.is_square() || q01.rows() != q10.rows())
    throw DomainError("Q blocks must be square of equal size");
  if (q01.rows() % 2 != 0) throw DomainError("Q blocks must have even size 2n");
}

Rational alpha_pfaffian(const AlphaInput& input) {
  auto q10_inv = inverse(input.q10);
  if (!q10_inv) throw DomainError("Q does not act isomorphically");
  Matrix product = input.q01.transpose() * *q10_inv;
  if (!product.is_skew_symmetric())
    throw DomainError("basis not adapted: Q01^T Q10^-1 is not skew-symmetric");
  return pfaffian(SkewMatrix(std::move(product)));
}

Rational alpha_diagonal(std::span<const Rational> c, std::span<const Rational> d) {
  if (c.size() != d.size()) throw DomainError("c and d must have equal length");
  Rational out = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (d[i].is_zero()) throw DomainError("Q not invertible on V_0");
    out *= c[i] / d[i];
  }
  return out;
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix ComplexMatrix::conjugate_transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& z = (*this)(i, j);
      out(j, i) = {z.re, -z.im};
    }
  return out;
}

Matrix realify(const ComplexMatrix& a) {
  Matrix out(2 * a.rows(), 2 * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& z = a(i, j);
      out(2 * i, 2 * j) = z.re;
      out(2 * i, 2 * j + 1) = -z.im;
      out(2 * i + 1, 2 * j) = z.im;
      out(2 * i + 1, 2 * j + 1) = z.re;
    }
  return out;
}

AlphaInput diagonal_model(std::span<const Rational> c, std::span<const Rational> d) {
  if (c.size() != d.size()) throw DomainError("c and d must have equal length");
  const std::size_t n = c.size();
  ComplexMatrix q01(n, n), q10(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    q01(i, i) = {c[i], c[i]};  // (1+i) c_i
    q10(i, i) = {d[i], d[i]};
  }
  return AlphaInput(realify(q01), realify(q10));
}

AlphaInput direct_sum(const AlphaInput& a, const AlphaInput& b) {
  return AlphaInput(block_diagonal(a.q01, b.q01), block_diagonal(a.q10, b.q10));
}

}  // namespace supergr
