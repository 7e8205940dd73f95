// SPDX-License-Identifier: Apache-2.0
#pragma once

// Slow, independent reference computations used only by tests.

#include <cstdint>
#include <map>
#include <random>

#include "supergr/matrix.hpp"

namespace supergr::testing {

/// det by Laplace expansion along successive rows, memoized on the set of
/// columns still available.
inline Rational cofactor_determinant(const Matrix& a) {
  const std::size_t n = a.rows();
  std::map<std::uint32_t, Rational> memo;
  auto rec = [&](auto&& self, std::size_t row, std::uint32_t used) -> Rational {
    if (row == n) return 1;
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Rational total = 0;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      if (!a(row, c).is_zero()) total += Rational(sign) * a(row, c) * self(self, row + 1, used | (1u << c));
      sign = -sign;
    }
    memo.emplace(used, total);
    return total;
  };
  return rec(rec, 0, 0);
}

inline Matrix random_integer_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, long lo = -4,
                                    long hi = 4) {
  std::uniform_int_distribution<long> d(lo, hi);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(d(rng));
  return m;
}

inline Matrix random_skew_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Rational(num(rng), den(rng));
      m(j, i) = -m(i, j);
    }
  return m;
}

}  // namespace supergr::testing
