// SPDX-License-Identifier: Apache-2.0
#pragma once

// Root data of contragredient Lie superalgebras (and of q(n), which is not
// contragredient), the invariant form, isotropy and defect.

#include <cstddef>
#include <string>
#include <vector>

#include "supergr/matrix.hpp"
#include "supergr/rational.hpp"

namespace supergr {

enum class Family { gl, sl, osp, d21a, g3, f4, q };

std::string family_name(Family f);
Family parse_family(const std::string& name);

/// Parameters of a family. gl/sl: (m|n). osp: (M|2n) stored as m = M,
/// n = n. d21a: alpha. q: n. g3/f4 take none.
struct FamilyParams {
  int m = 0;
  int n = 0;
  Rational alpha = 1;
};

struct WeightVector {
  std::vector<Rational> coords;

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;
  WeightVector operator-() const;
  friend WeightVector operator+(const WeightVector& a, const WeightVector& b);
  friend WeightVector operator*(const Rational& s, const WeightVector& v);
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

struct Root {
  WeightVector vector;
  int even_dim = 0;  // (1|0) even, (0|1) odd, (1|1) for q(n)
  int odd_dim = 0;

  bool is_odd() const { return odd_dim > 0 && even_dim == 0; }
  bool is_even() const { return even_dim > 0 && odd_dim == 0; }
};

class RootSystem {
 public:
  RootSystem(Family family, FamilyParams params, std::vector<std::string> basis_labels,
             Matrix gram, std::vector<Root> roots);

  Family family() const { return family_; }
  const FamilyParams& params() const { return params_; }
  std::string name() const;
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const Matrix& gram() const { return gram_; }
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t rank() const { return labels_.size(); }
  bool contragredient() const { return family_ != Family::q; }

  std::string format(const WeightVector& v) const;

 private:
  Family family_;
  FamilyParams params_;
  std::vector<std::string> labels_;
  Matrix gram_;
  std::vector<Root> roots_;
};

RootSystem build_root_system(Family family, const FamilyParams& params);

/// (v, w) under the system's invariant form.
Rational inner(const RootSystem& system, const WeightVector& v, const WeightVector& w);

/// Odd roots with (a, a) = 0. Throws for q(n).
std::vector<Root> isotropic_roots(const RootSystem& system);

/// Maximal number of mutually orthogonal, linearly independent isotropic
/// roots, found by exhaustive search.
int defect(const RootSystem& system);

/// Known defect per family: min(m,n) for gl/sl, min(floor(M/2), n) for
/// osp(M|2n), 1 for D(2,1;a), g(3), f(4).
int defect_closed_form(const RootSystem& system);

/// Lexicographically first maximal orthogonal independent isotropic set,
/// one positive representative per pair {+a, -a}.
std::vector<Root> defect_subgroup_roots(const RootSystem& system);

/// Normalizes v to the representative of {v, -v} whose first nonzero
/// coordinate is positive.
WeightVector positive_representative(const WeightVector& v);

/// Strict order used for tie-breaking: sparse (index ascending, coefficient
/// descending) sequence of nonzero coordinates.
bool root_order_less(const WeightVector& a, const WeightVector& b);

}  // namespace supergr
