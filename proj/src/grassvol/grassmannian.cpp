// SPDX-License-Identifier: Apache-2.0
#include "supergr/grassmannian.hpp"

#include <utility>

#include "supergr/errors.hpp"

namespace supergr {

std::string GrassSpec::str() const {
  return "Gr(" + std::to_string(r) + "|" + std::to_string(s) + "," + std::to_string(m) + "|" +
         std::to_string(n) + ")";
}

std::string SuperDim::str() const { return "(" + std::to_string(even) + "|" + std::to_string(odd) + ")"; }

void validate(const GrassSpec& spec) {
  if (spec.r < 0 || spec.s < 0 || spec.m < 0 || spec.n < 0 || spec.r > spec.m || spec.s > spec.n)
    throw DomainError("invalid supergrassmannian " + spec.str() + ": need 0<=r<=m and 0<=s<=n");
}

SuperDim dims(const GrassSpec& g) {
  validate(g);
  const long r = g.r, s = g.s, m = g.m, n = g.n;
  return {r * (m - r) + s * (n - s), r * (n - s) + s * (m - r)};
}

long sdim(const GrassSpec& g) {
  validate(g);
  const long r = g.r, s = g.s, m = g.m, n = g.n;
  return (r - s) * ((m - r) - (n - s));
}

GrassSpec parity_swap(const GrassSpec& g) { return {g.s, g.r, g.n, g.m}; }

GrassSpec complement(const GrassSpec& g) { return {g.m - g.r, g.n - g.s, g.m, g.n}; }

namespace {

Rational binom(long n, long k) { return Rational(binomial(n, k)); }

GrassSpec oriented(const GrassSpec& g) {
  if (g.r < g.s || (g.r == g.s && g.m < g.n)) return parity_swap(g);
  return g;
}

// V(s|s, n|n) = C(n,s) (2pi)^{2s(n-s)}.
VolumeExpr equal_rank(long s, long n) {
  return VolumeExpr(binom(n, s), kTwoPiPowerPerOddDimension * 2 * s * (n - s));
}

// V(k|k, j|k) for j >= k, from V(j-k|0, j|k) = (2pi)^{k(j-k)} and the
// complement sign (-1)^{k(j-k)}.
VolumeExpr one_zero_block(long k, long j) {
  if (j < k) throw DomainError("one-zero block needs j >= k");
  return VolumeExpr(Rational(sign_power(k * (j - k))), kTwoPiPowerPerOddDimension * k * (j - k));
}

}  // namespace

VolumeExpr volume(const GrassSpec& spec) {
  if (sdim(spec) < 0) return VolumeExpr::zero();
  const GrassSpec g = oriented(spec);
  const long r = g.r, s = g.s, m = g.m, n = g.n;
  const long a = (m - r) * s + (n - s) * r;
  return VolumeExpr(Rational(sign_power(s * (m + n + r + s))) * binom(n, s), kTwoPiPowerPerOddDimension * a,
                    {{Atom{static_cast<int>(r - s), static_cast<int>(m - n)}, 1}});
}

VolumeExpr volume_via_general_positive(const GrassSpec& spec) {
  if (sdim(spec) < 0 || spec.r < spec.s)
    throw DomainError("general-positive factorization needs sdim>=0 and r>=s; got " + spec.str());
  GrassSpec g = spec;
  if (g.r == g.s && g.m < g.n) g = parity_swap(g);
  const long r = g.r, s = g.s, m = g.m, n = g.n;
  const VolumeExpr numerator =
      equal_rank(s, n) * one_zero_block(n, m) * VolumeExpr::atom(static_cast<int>(r - s), static_cast<int>(m - n));
  const VolumeExpr denominator = one_zero_block(s, r) * one_zero_block(n - s, m - r);
  return Rational(sign_power((r - s) * (n - s))) * (numerator / denominator);
}

int duality_sign(const GrassSpec& g) {
  validate(g);
  return sign_power(static_cast<long>(g.r) * (g.n - g.s) + static_cast<long>(g.s) * (g.m - g.r));
}

bool check_lemma_sign(const GrassSpec& spec) {
  return volume(spec) == Rational(duality_sign(spec)) * volume(complement(spec));
}

bool check_symmetry(const GrassSpec& spec) { return volume(spec) == volume(parity_swap(spec)); }

bool check_cor_one(int a, int b, int c) {
  if (a < 0 || a > b || b > c) throw DomainError("check_cor_one needs 0 <= a <= b <= c");
  const VolumeExpr lhs = volume({b, a, c, a});
  const VolumeExpr rhs = VolumeExpr::atom(b - a, c - a) * volume({a, a, c, a}) / volume({a, a, b, a});
  return lhs == rhs;
}

}  // namespace supergr
