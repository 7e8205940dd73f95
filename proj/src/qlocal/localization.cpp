// SPDX-License-Identifier: Apache-2.0
#include "supergr/localization.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "supergr/errors.hpp"
#include "supergr/pfaffian.hpp"

namespace supergr {

ParamVector::ParamVector(std::vector<Rational> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].is_zero()) throw DomainError("degenerate parameters: a_" + std::to_string(i + 1) + " = 0");
    for (std::size_t j = i + 1; j < values_.size(); ++j)
      if (values_[i] == values_[j] || values_[i] == -values_[j])
        throw DomainError("degenerate parameters: a_" + std::to_string(i + 1) + " +- a_" +
                          std::to_string(j + 1) + " = 0");
  }
}

std::string ParamVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
  os << ')';
  return os.str();
}

ParamVector random_param_vector(std::size_t n, std::mt19937_64& rng) {
  const long top = 3 * static_cast<long>(n) + 5;
  std::uniform_int_distribution<long> magnitude(1, top);
  std::bernoulli_distribution negative(0.5);
  std::vector<long> used;
  std::vector<Rational> values;
  while (values.size() < n) {
    const long v = magnitude(rng);
    if (std::find(used.begin(), used.end(), v) != used.end()) continue;
    used.push_back(v);
    values.emplace_back(negative(rng) ? -v : v);
  }
  return ParamVector(std::move(values));
}

std::vector<ParamVector> seeded_param_vectors(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ParamVector> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_param_vector(n, rng));
  return out;
}

Rational alpha_subset(const std::vector<std::size_t>& subset, const ParamVector& a) {
  std::vector<bool> in(a.size());
  for (std::size_t i : subset) {
    if (i >= a.size()) throw DomainError("subset index " + std::to_string(i + 1) + " out of range");
    if (in[i]) throw DomainError("subset index " + std::to_string(i + 1) + " repeated");
    in[i] = true;
  }
  Rational out(1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (in[i])
      for (std::size_t j = 0; j < a.size(); ++j)
        if (!in[j]) out *= (a[i] + a[j]) / (a[i] - a[j]);
  return out;
}

namespace {

void require_range(int r, int n) {
  if (n < 0 || r < 0 || r > n)
    throw DomainError("need 0 <= r <= n, got r=" + std::to_string(r) + ", n=" + std::to_string(n));
}

// Calls f on each r-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(int r, int n, F&& f) {
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    int k = r - 1;
    while (k >= 0 && idx[k] == static_cast<std::size_t>(n - r + k)) --k;
    if (k < 0) return;
    ++idx[k];
    for (int j = k + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

LocalizationReport c_bruteforce(int r, int n, const std::vector<ParamVector>& samples) {
  require_range(r, n);
  if (n > kMaxBruteForceN)
    throw DomainError("brute force limited to n <= " + std::to_string(kMaxBruteForceN));
  if (samples.empty()) throw DomainError("c_bruteforce needs at least one parameter vector");

  LocalizationReport report{r, n, {}, Rational(0), true};
  for (const auto& a : samples) {
    if (a.size() != static_cast<std::size_t>(n))
      throw DomainError("parameter vector has length " + std::to_string(a.size()) + ", expected " +
                        std::to_string(n));
    // ratio[i][j] = (a_i + a_j) / (a_i - a_j)
    std::vector<std::vector<Rational>> ratio(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) ratio[i][j] = (a[i] + a[j]) / (a[i] - a[j]);

    Rational total(0);
    std::vector<bool> in(n);
    for_each_subset(r, n, [&](const std::vector<std::size_t>& s) {
      std::fill(in.begin(), in.end(), false);
      for (std::size_t i : s) in[i] = true;
      Rational term(1);
      for (std::size_t i : s)
        for (int j = 0; j < n; ++j)
          if (!in[j]) term *= ratio[i][j];
      total += term;
    });
    report.samples.emplace_back(a, total);
  }
  report.consensus = report.samples.front().second;
  for (const auto& [a, v] : report.samples)
    if (v != report.consensus) report.agrees = false;
  if (!report.agrees)
    throw DomainError("parameter dependence detected for C(" + std::to_string(r) + "," + std::to_string(n) + ")");
  return report;
}

Integer c_closed(int r, int n) {
  require_range(r, n);
  const unsigned long m = n / 2, l = r / 2;
  if (n % 2 == 0 && r % 2 == 1) return 0;
  return binomial(m, l);
}

bool check_recursions(int nmax, const std::function<Integer(int r, int n)>& c) {
  auto value = [&](int r, int n) -> Integer { return r > n ? Integer(0) : c(r, n); };
  for (int n = 2; n <= nmax; ++n)
    for (int r = 0; r <= n; ++r) {
      if (r >= 1 && value(r, n) != value(r, n - 1) + sign_power(n - r) * value(r - 1, n - 1)) return false;
      if (value(r, n) != sign_power(static_cast<long>(r) * (n - r)) * value(n - r, n)) return false;
    }
  return true;
}

bool check_recursions(int nmax) { return check_recursions(nmax, c_closed); }

GlLocalization gl_localization_report(int r, int n, const ParamVector& a) {
  require_range(r, n);
  if (a.size() != static_cast<std::size_t>(n))
    throw DomainError("parameter vector has length " + std::to_string(a.size()) + ", expected " +
                      std::to_string(n));
  GlLocalization out{binomial(n, r), true, Rational(0)};
  std::vector<bool> in(n);
  for_each_subset(r, n, [&](const std::vector<std::size_t>& s) {
    std::fill(in.begin(), in.end(), false);
    for (std::size_t i : s) in[i] = true;
    // The tangent space at the fixed point carries, for each i in S and j
    // not in S, an even pair of weight a_i - a_j and an odd pair of weight
    // a_i + a_j; Q pairs them with eigenvalue ratios c/d.
    std::vector<Rational> c, d;
    for (std::size_t i : s)
      for (int j = 0; j < n; ++j)
        if (!in[j]) {
          c.push_back(a[i] + a[j]);
          d.push_back(a[i] - a[j]);
          c.push_back(a[i] - a[j]);
          d.push_back(a[i] + a[j]);
        }
    const Rational alpha = c.empty() ? Rational(1) : alpha_diagonal(c, d);
    if (alpha != 1) out.alpha_identically_one = false;
    out.sum += alpha;
  });
  return out;
}

Rational gl_localization(int r, int n, const ParamVector& a) { return gl_localization_report(r, n, a).sum; }

VolumeExpr q_volume(int r, int n) {
  return VolumeExpr(Rational(c_closed(r, n)), 2L * r * (n - r));
}

}  // namespace supergr
