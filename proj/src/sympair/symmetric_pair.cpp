// SPDX-License-Identifier: Apache-2.0
#include "supergr/symmetric_pair.hpp"

#include <algorithm>
#include <functional>

#include "supergr/errors.hpp"

namespace supergr {

namespace {

WeightVector vec(std::initializer_list<Rational> xs) { return WeightVector{std::vector<Rational>(xs)}; }

void require_dimension(const RestrictedPair& pair, const WeightVector& v) {
  if (v.size() != pair.dimension())
    throw DomainError("dimension mismatch: weight has " + std::to_string(v.size()) +
                      " coordinates, pair " + pair.name + " expects " +
                      std::to_string(pair.dimension()));
}

Matrix simple_root_columns(const RestrictedPair& pair) {
  Matrix a(pair.dimension(), pair.rank());
  for (std::size_t j = 0; j < pair.rank(); ++j)
    for (std::size_t i = 0; i < pair.dimension(); ++i) a(i, j) = pair.simple_roots[j].coords[i];
  return a;
}

}  // namespace

RestrictedPair osp_pair(int m, int n) {
  if (m < 0 || n <= m) throw DomainError("hypothesis n>m violated: got (m,n)=(" + std::to_string(m) +
                                         "," + std::to_string(n) + ")");
  // One-dimensional a* with (e, e) = 1; BC_1 has roots e, 2e and the long
  // root is a = 2e.
  const WeightVector alpha = vec({2});
  RestrictedPair p{"osp(" + std::to_string(2 * m) + "|" + std::to_string(2 * n) + ")",
                   {alpha},
                   Matrix{{1}},
                   Rational(n - m - 1) * alpha,
                   {}};
  validate(p);
  return p;
}

RestrictedPair g12_pair() {
  // G_2 in a basis with Gram [[2,-1],[-1,2]]: a_2 short, a_1 long.
  const WeightVector a1 = vec({-2, -1});
  const WeightVector a2 = vec({1, 0});
  RestrictedPair p{"g(1|2)", {a1, a2}, Matrix{{2, -1}, {-1, 2}}, a1 + a2, {Rational(3)}};
  validate(p);
  return p;
}

RestrictedPair f31_pair() {
  const Rational h(1, 2);
  const WeightVector a1 = vec({h, -h, -h});
  const WeightVector a2 = vec({0, 1, -1});
  const WeightVector a3 = vec({0, 0, 1});
  const WeightVector rho = a1 + Rational(2) * a2 + Rational(3) * a3;
  RestrictedPair p{"F(3|1)",
                   {a1, a2, a3},
                   Matrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}},
                   rho,
                   {Rational(3, 8), Rational(2)}};
  validate(p);
  return p;
}

std::vector<RestrictedPair> builtin_pairs(int m, int n) { return {osp_pair(m, n), g12_pair(), f31_pair()}; }

void validate(const RestrictedPair& pair) {
  if (!pair.form.is_symmetric()) throw DomainError(pair.name + ": form is not symmetric");
  if (!leading_minors_positive(pair.form)) throw DomainError(pair.name + ": form is not positive definite");
  for (const auto& a : pair.simple_roots) require_dimension(pair, a);
  require_dimension(pair, pair.rho);
  if (pair.rank() > 0 && pair.length_ratios.size() != pair.rank() - 1)
    throw DomainError(pair.name + ": expected one length ratio per adjacent pair of simple roots");
  for (std::size_t i = 0; i + 1 < pair.rank(); ++i) {
    const Rational ratio = pair_inner(pair, pair.simple_roots[i], pair.simple_roots[i]) /
                           pair_inner(pair, pair.simple_roots[i + 1], pair.simple_roots[i + 1]);
    if (ratio != pair.length_ratios[i])
      throw DomainError(pair.name + ": declared length ratio " + pair.length_ratios[i].str() +
                        " does not match form (" + ratio.str() + ")");
  }
}

Rational pair_inner(const RestrictedPair& pair, const WeightVector& v, const WeightVector& w) {
  require_dimension(pair, v);
  require_dimension(pair, w);
  return bilinear(pair.form, v.coords, w.coords);
}

RhoDecomposition rho_coefficients(const RestrictedPair& pair) {
  auto c = solve(simple_root_columns(pair), pair.rho.coords);
  if (!c) {
    if (rank(simple_root_columns(pair)) < pair.rank()) throw DomainError("simple roots dependent");
    throw DomainError(pair.name + ": rho is not in the span of the simple roots");
  }
  RhoDecomposition out{std::move(*c), true};
  out.nonnegative = std::all_of(out.coeffs.begin(), out.coeffs.end(), [](const Rational& x) { return x.sign() >= 0; });
  return out;
}

WeightVector combine_simple_roots(const RestrictedPair& pair, std::span<const Rational> coeffs) {
  if (coeffs.size() != pair.rank()) throw DomainError("dimension mismatch: wrong number of coefficients");
  WeightVector out{std::vector<Rational>(pair.dimension())};
  for (std::size_t i = 0; i < coeffs.size(); ++i) out = out + coeffs[i] * pair.simple_roots[i];
  return out;
}

std::vector<WeightVector> fundamental_weights(const RestrictedPair& pair) {
  // Solve for w_i in the span of the simple roots: sum_k x_k (a_k, a_j) = rhs_j.
  const std::size_t k = pair.rank();
  Matrix cartan(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) cartan(i, j) = pair_inner(pair, pair.simple_roots[j], pair.simple_roots[i]);
  std::vector<WeightVector> out;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> rhs(k);
    rhs[i] = pair_inner(pair, pair.simple_roots[i], pair.simple_roots[i]) / 2;
    auto x = solve(cartan, rhs);
    if (!x) throw DomainError("simple roots dependent");
    out.push_back(combine_simple_roots(pair, *x));
  }
  return out;
}

bool is_dominant(const RestrictedPair& pair, const WeightVector& lambda) {
  return std::all_of(pair.simple_roots.begin(), pair.simple_roots.end(),
                     [&](const WeightVector& a) { return pair_inner(pair, lambda, a).sign() >= 0; });
}

Rational casimir_eigenvalue(const RestrictedPair& pair, const WeightVector& lambda) {
  return pair_inner(pair, lambda + Rational(2) * pair.rho, lambda);
}

bool positivity_check(const RestrictedPair& pair, const WeightVector& lambda) {
  require_dimension(pair, lambda);
  if (lambda.is_zero()) throw DomainError("lambda = 0 is excluded by hypothesis");
  if (!is_dominant(pair, lambda)) throw DomainError("lambda is not dominant");
  return casimir_eigenvalue(pair, lambda).sign() > 0;
}

std::vector<WeightVector> dominant_grid(const RestrictedPair& pair) {
  const std::size_t k = pair.rank();
  const Rational step = k == 1 ? Rational(1, 20) : k == 2 ? Rational(1, 2) : Rational(1);
  const Rational top(5);
  const auto fundamentals = fundamental_weights(pair);

  std::vector<WeightVector> out;
  std::vector<Rational> a(k);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      WeightVector w{std::vector<Rational>(pair.dimension())};
      for (std::size_t j = 0; j < k; ++j) w = w + a[j] * fundamentals[j];
      if (!w.is_zero()) out.push_back(std::move(w));
      return;
    }
    for (Rational x = 0; x <= top; x += step) {
      a[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

WeightVector d21a_weight(unsigned l) {
  if (l == 0) return vec({0, 0, 0});
  const Rational up(static_cast<long>(l) + 1), down(static_cast<long>(l) - 1);
  return vec({up, down, down});
}

bool d21a_in_a_star(unsigned l) { return d21a_weight(l).coords[2].is_zero(); }

std::vector<std::pair<unsigned, unsigned>> d21a_extension_edges(unsigned max_l) {
  std::vector<std::pair<unsigned, unsigned>> out;
  if (max_l >= 2) {
    out.emplace_back(0, 2);
    out.emplace_back(1, 2);
  }
  for (unsigned l = 2; l < max_l; ++l) out.emplace_back(l, l + 1);
  return out;
}

}  // namespace supergr
