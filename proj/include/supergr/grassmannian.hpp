// SPDX-License-Identifier: Apache-2.0
#pragma once

// Supergrassmannians Gr(r|s, m|n): dimensions, superdimension and exact
// invariant volumes.

#include <string>

#include "supergr/volume_expr.hpp"

namespace supergr {

/// Exponent of 2pi per odd dimension in a volume. Statement-level
/// equal-rank, one-zero and general formulas all use 1.
inline constexpr long kTwoPiPowerPerOddDimension = 1;

struct GrassSpec {
  int r = 0;
  int s = 0;
  int m = 0;
  int n = 0;

  friend bool operator==(const GrassSpec&, const GrassSpec&) = default;
  std::string str() const;
};

struct SuperDim {
  long even = 0;
  long odd = 0;

  friend bool operator==(const SuperDim&, const SuperDim&) = default;
  std::string str() const;
};

/// Throws unless 0 <= r <= m and 0 <= s <= n.
void validate(const GrassSpec& spec);

/// (r(m-r) + s(n-s) | r(n-s) + s(m-r)).
SuperDim dims(const GrassSpec& spec);

/// (r-s)((m-r)-(n-s)); may be negative.
long sdim(const GrassSpec& spec);

/// Gr(s|r, n|m).
GrassSpec parity_swap(const GrassSpec& spec);

/// Gr(m-r|n-s, m|n).
GrassSpec complement(const GrassSpec& spec);

/// Zero when sdim < 0, otherwise (-1)^{s(m+n+r+s)} C(n,s) (2pi)^A V(r-s, m-n)
/// with A = (m-r)s + (n-s)r, after orienting so that r > s, or r = s and
/// m >= n.
VolumeExpr volume(const GrassSpec& spec);

/// Independent evaluation by the general-positive factorization
///   V(r|s,m|n) = (-1)^{(r-s)(n-s)} V(s|s,n|n) V(n|n,m|n) V(r-s,m-n)
///                / (V(s|s,r|s) V(n-s|n-s,m-r|n-s)),
/// with every factor expanded through the equal-rank and one-zero formulas.
/// Requires sdim >= 0 and r >= s.
VolumeExpr volume_via_general_positive(const GrassSpec& spec);

/// (-1)^{r(n-s) + s(m-r)}.
int duality_sign(const GrassSpec& spec);

/// volume(spec) == duality_sign(spec) * volume(complement(spec)).
bool check_lemma_sign(const GrassSpec& spec);

/// volume(spec) == volume(parity_swap(spec)).
bool check_symmetry(const GrassSpec& spec);

/// V(b|a, c|a) == V(b-a, c-a) V(a|a, c|a) / V(a|a, b|a) for a <= b <= c.
bool check_cor_one(int a, int b, int c);

}  // namespace supergr
