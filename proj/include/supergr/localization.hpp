// SPDX-License-Identifier: Apache-2.0
#pragma once

// Finite localization sums: the subset products alpha(S), the integers
// C(r,n), their recursions and closed form, and the GL equal-rank count.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "supergr/rational.hpp"
#include "supergr/volume_expr.hpp"

namespace supergr {

/// Parameters a_1..a_n with a_i != 0 and a_i +- a_j != 0 for i != j.
class ParamVector {
 public:
  explicit ParamVector(std::vector<Rational> values);

  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  std::string str() const;

 private:
  std::vector<Rational> values_;
};

/// Distinct absolute values in [1, 3n+5] with random signs.
ParamVector random_param_vector(std::size_t n, std::mt19937_64& rng);
std::vector<ParamVector> seeded_param_vectors(std::size_t n, std::size_t count, std::uint64_t seed);

/// prod_{i in S, j not in S} (a_i + a_j) / (a_i - a_j). S holds 0-based
/// indices.
Rational alpha_subset(const std::vector<std::size_t>& subset, const ParamVector& a);

inline constexpr int kMaxBruteForceN = 14;

struct LocalizationReport {
  int r = 0;
  int n = 0;
  std::vector<std::pair<ParamVector, Rational>> samples;
  Rational consensus;
  bool agrees = false;
};

/// Sum of alpha(S) over all |S| = r, for each sample. Throws
/// "parameter dependence detected" if the samples disagree.
LocalizationReport c_bruteforce(int r, int n, const std::vector<ParamVector>& samples);

/// binom(m,l) for (n,r) = (2m,2l), (2m+1,2l+1), (2m+1,2l); 0 for (2m,2l+1).
Integer c_closed(int r, int n);

/// Checks C(r,n) = C(r,n-1) + (-1)^{n-r} C(r-1,n-1) for 1 <= r <= n and
/// C(r,n) = (-1)^{r(n-r)} C(n-r,n) for 0 <= r <= n, for 2 <= n <= nmax,
/// using the supplied table (C(r,n) = 0 for r > n is implied).
bool check_recursions(int nmax, const std::function<Integer(int r, int n)>& c);
bool check_recursions(int nmax);

struct GlLocalization {
  Integer fixed_points;
  bool alpha_identically_one = true;
  Rational sum;
};

/// Equal-rank GL localization on Gr(r|r, n|n): one fixed point per r-subset,
/// each with alpha = prod (a_i+a_j)/(a_i-a_j) * (a_i-a_j)/(a_i+a_j).
GlLocalization gl_localization_report(int r, int n, const ParamVector& a);
Rational gl_localization(int r, int n, const ParamVector& a);

/// C(r,n) (2pi)^{2r(n-r)}.
VolumeExpr q_volume(int r, int n);

}  // namespace supergr
