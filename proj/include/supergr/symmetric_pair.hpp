// SPDX-License-Identifier: Apache-2.0
#pragma once

// Restricted-root data of rank-one and exceptional symmetric pairs, the
// Casimir eigenvalue (lambda + 2 rho, lambda) and the D(2,1;a) weight test.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "supergr/matrix.hpp"
#include "supergr/rational.hpp"
#include "supergr/root_system.hpp"

namespace supergr {

/// Simple roots, rho and form live in a common ambient basis of a*.
struct RestrictedPair {
  std::string name;
  std::vector<WeightVector> simple_roots;
  Matrix form;
  WeightVector rho;
  /// (a_i, a_i) / (a_{i+1}, a_{i+1}) as declared for the pair.
  std::vector<Rational> length_ratios;

  std::size_t dimension() const { return form.rows(); }
  std::size_t rank() const { return simple_roots.size(); }
};

/// (osp(2m|2n), osp(2m|2n-2) x sp(2)), n > m: BC_1 with long root a and
/// rho = (n - m - 1) a.
RestrictedPair osp_pair(int m, int n);
/// (g(1|2), D(1,2;3)): G_2, rho = a_1 + a_2, (a_1,a_1)/(a_2,a_2) = 3.
RestrictedPair g12_pair();
/// (F(3|1), D(1,2;2) x sl(2)): rho = a_1 + 2a_2 + 3a_3.
RestrictedPair f31_pair();

/// The three families, the osp one instantiated at (m, n).
std::vector<RestrictedPair> builtin_pairs(int m = 1, int n = 3);

/// Throws unless the form is symmetric positive definite, the vectors have
/// the ambient dimension and the declared length ratios hold.
void validate(const RestrictedPair& pair);

Rational pair_inner(const RestrictedPair& pair, const WeightVector& v, const WeightVector& w);

struct RhoDecomposition {
  std::vector<Rational> coeffs;
  bool nonnegative = false;
};

/// Solves rho = sum c_i a_i exactly.
RhoDecomposition rho_coefficients(const RestrictedPair& pair);

/// sum c_i a_i.
WeightVector combine_simple_roots(const RestrictedPair& pair, std::span<const Rational> coeffs);

/// Fundamental weights w_i with (w_i, a_j) = delta_ij (a_j, a_j) / 2.
std::vector<WeightVector> fundamental_weights(const RestrictedPair& pair);

bool is_dominant(const RestrictedPair& pair, const WeightVector& lambda);

/// (lambda + 2 rho, lambda).
Rational casimir_eigenvalue(const RestrictedPair& pair, const WeightVector& lambda);

/// True iff the Casimir eigenvalue is positive. Requires lambda dominant and
/// nonzero.
bool positivity_check(const RestrictedPair& pair, const WeightVector& lambda);

/// Nonzero dominant weights sum a_i w_i with a_i on a grid of [0, 5]; the
/// step is 1/20, 1/2 or 1 for rank 1, 2, 3.
std::vector<WeightVector> dominant_grid(const RestrictedPair& pair);

/// lambda_l = (l+1) e_1 + (l-1)(e_2 + e_3), with lambda_0 = 0.
WeightVector d21a_weight(unsigned l);
/// a* is spanned by e_1, e_2.
bool d21a_in_a_star(unsigned l);
/// Edges of the extension graph on lambda_0..lambda_max: 0-2, 1-2 and
/// l-(l+1) for l >= 2.
std::vector<std::pair<unsigned, unsigned>> d21a_extension_edges(unsigned max_l);

}  // namespace supergr
