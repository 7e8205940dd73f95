// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "supergr/errors.hpp"
#include "supergr/symmetric_pair.hpp"

using namespace supergr;

namespace {

WeightVector w(std::initializer_list<Rational> xs) { return WeightVector{std::vector<Rational>(xs)}; }

}  // namespace

TEST_SUITE("sympair") {

TEST_CASE("rho coefficients of the built-in pairs") {
  CHECK(rho_coefficients(osp_pair(1, 3)).coeffs == std::vector<Rational>{1});
  const auto c25 = rho_coefficients(osp_pair(2, 5));
  CHECK(c25.coeffs == std::vector<Rational>{2});
  CHECK(c25.nonnegative);
  const auto c23 = rho_coefficients(osp_pair(2, 3));
  CHECK(c23.coeffs == std::vector<Rational>{0});
  CHECK(c23.nonnegative);
  CHECK(rho_coefficients(g12_pair()).coeffs == std::vector<Rational>{1, 1});
  const auto f = rho_coefficients(f31_pair());
  CHECK(f.coeffs == std::vector<Rational>{1, 2, 3});
  CHECK(f.nonnegative);
  for (int n = 1; n <= 6; ++n)
    for (int m = 0; m < n; ++m) CHECK(rho_coefficients(osp_pair(m, n)).coeffs == std::vector<Rational>{n - m - 1});
}

TEST_CASE("osp pair hypothesis") {
  CHECK_THROWS_AS(osp_pair(3, 3), DomainError);
  CHECK_THROWS_AS(osp_pair(4, 2), DomainError);
  CHECK_THROWS_WITH_AS(osp_pair(2, 2), "hypothesis n>m violated: got (m,n)=(2,2)", DomainError);
}

TEST_CASE("forms are positive definite with the declared length ratios") {
  for (const auto& p : builtin_pairs()) {
    CHECK(leading_minors_positive(p.form));
    CHECK_NOTHROW(validate(p));
  }
  const RestrictedPair g = g12_pair();
  CHECK(pair_inner(g, g.simple_roots[0], g.simple_roots[0]) / pair_inner(g, g.simple_roots[1], g.simple_roots[1]) ==
        3);
  const RestrictedPair f = f31_pair();
  CHECK(pair_inner(f, f.simple_roots[0], f.simple_roots[0]) / pair_inner(f, f.simple_roots[1], f.simple_roots[1]) ==
        Rational(3, 8));
  CHECK(pair_inner(f, f.simple_roots[1], f.simple_roots[1]) / pair_inner(f, f.simple_roots[2], f.simple_roots[2]) ==
        2);
}

TEST_CASE("validation rejects inconsistent data") {
  RestrictedPair bad = g12_pair();
  bad.length_ratios = {Rational(2)};
  CHECK_THROWS_AS(validate(bad), DomainError);
  RestrictedPair indefinite = g12_pair();
  indefinite.form = Matrix{{1, 2}, {2, 1}};
  CHECK_THROWS_AS(validate(indefinite), DomainError);
  RestrictedPair dependent = g12_pair();
  dependent.simple_roots = {w({1, 0}), w({2, 0})};
  CHECK_THROWS_WITH_AS(rho_coefficients(dependent), "simple roots dependent", DomainError);
}

TEST_CASE("Casimir eigenvalue examples") {
  const RestrictedPair g = g12_pair();
  CHECK(casimir_eigenvalue(g, w({0, 0})) == 0);
  // (a1,a1) = 6 and (rho,a1) = 3 in this normalization.
  const WeightVector a1 = g.simple_roots[0];
  CHECK(casimir_eigenvalue(g, a1) == pair_inner(g, a1, a1) + 2 * pair_inner(g, g.rho, a1));
  CHECK(casimir_eigenvalue(g, a1) == 12);

  const RestrictedPair o = osp_pair(1, 3);
  const WeightVector alpha = o.simple_roots[0];
  CHECK(casimir_eigenvalue(o, alpha) == 3 * pair_inner(o, alpha, alpha));
  CHECK(positivity_check(o, alpha));

  const RestrictedPair boundary = osp_pair(2, 3);
  CHECK(positivity_check(boundary, boundary.simple_roots[0]));
  CHECK(casimir_eigenvalue(boundary, boundary.simple_roots[0]) ==
        pair_inner(boundary, boundary.simple_roots[0], boundary.simple_roots[0]));

  const RestrictedPair f = f31_pair();
  const std::vector<Rational> ones{1, 1, 1};
  const WeightVector sum = combine_simple_roots(f, ones);
  if (is_dominant(f, sum)) CHECK(positivity_check(f, sum));
  CHECK(casimir_eigenvalue(f, sum).sign() > 0);

  CHECK_THROWS_WITH_AS(positivity_check(g, w({0, 0})), "lambda = 0 is excluded by hypothesis", DomainError);
  CHECK_THROWS_AS(casimir_eigenvalue(g, w({1, 2, 3})), DomainError);
}

TEST_CASE("each simple root that is dominant passes the positivity check") {
  for (const auto& p : builtin_pairs(0, 4))
    for (const auto& a : p.simple_roots)
      if (is_dominant(p, a)) CHECK(positivity_check(p, a));
}

TEST_CASE("fundamental weights are dual to the simple roots") {
  for (const auto& p : builtin_pairs()) {
    const auto fw = fundamental_weights(p);
    REQUIRE(fw.size() == p.rank());
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = 0; j < p.rank(); ++j) {
        const Rational expected = i == j ? pair_inner(p, p.simple_roots[j], p.simple_roots[j]) / 2 : Rational(0);
        CHECK(pair_inner(p, fw[i], p.simple_roots[j]) == expected);
      }
  }
}

TEST_CASE("Casimir eigenvalue is positive on the dominant grid") {
  for (const auto& p : builtin_pairs()) {
    const auto grid = dominant_grid(p);
    CHECK(grid.size() >= 100);
    for (const auto& lambda : grid) {
      REQUIRE(is_dominant(p, lambda));
      CHECK(casimir_eigenvalue(p, lambda).sign() > 0);
    }
  }
}

TEST_CASE("positivity is invariant under rescaling the form") {
  RestrictedPair p = f31_pair();
  RestrictedPair scaled = p;
  scaled.form = Rational(5, 3) * p.form;
  for (const auto& lambda : dominant_grid(p))
    CHECK(casimir_eigenvalue(scaled, lambda) == Rational(5, 3) * casimir_eigenvalue(p, lambda));
}

TEST_CASE("rho round trip") {
  for (const auto& p : builtin_pairs(0, 5)) {
    const auto c = rho_coefficients(p);
    CHECK(combine_simple_roots(p, c.coeffs) == p.rho);
    const std::vector<Rational> x{Rational(1, 3), Rational(-2), Rational(7, 2)};
    const std::span<const Rational> first(x.data(), p.rank());
    const RestrictedPair q{p.name, p.simple_roots, p.form, combine_simple_roots(p, first), p.length_ratios};
    CHECK(rho_coefficients(q).coeffs == std::vector<Rational>(first.begin(), first.end()));
  }
}

TEST_CASE("D(2,1;alpha) principal block weights") {
  CHECK(d21a_weight(0) == w({0, 0, 0}));
  CHECK(d21a_weight(1) == w({2, 0, 0}));
  CHECK(d21a_weight(2) == w({3, 1, 1}));
  for (unsigned l = 0; l <= 100; ++l) CHECK(d21a_in_a_star(l) == (l <= 1));
  const auto edges = d21a_extension_edges(4);
  const std::vector<std::pair<unsigned, unsigned>> expected{{0, 2}, {1, 2}, {2, 3}, {3, 4}};
  CHECK(edges == expected);
  CHECK(d21a_extension_edges(1).empty());
}

}  // TEST_SUITE
