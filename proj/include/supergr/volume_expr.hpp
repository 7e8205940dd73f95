// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exact symbolic volumes: coeff * (2pi)^k * prod V(a,b)^e, where V(a,b) is
// the opaque volume of the classical Grassmannian Gr(a,b).

#include <compare>
#include <map>
#include <string>

#include "supergr/rational.hpp"

namespace supergr {

struct Atom {
  int a = 0;
  int b = 0;
  auto operator<=>(const Atom&) const = default;
};

class VolumeExpr {
 public:
  using AtomMap = std::map<Atom, long>;

  /// The zero expression.
  VolumeExpr() = default;
  VolumeExpr(Rational coeff, long two_pi_power, const AtomMap& atoms = {});

  static VolumeExpr zero() { return {}; }
  static VolumeExpr one() { return VolumeExpr(Rational(1), 0); }
  /// V(a, b) for 0 <= a <= b.
  static VolumeExpr atom(int a, int b);

  const Rational& coeff() const { return coeff_; }
  long two_pi_power() const { return two_pi_power_; }
  const AtomMap& atoms() const { return atoms_; }
  bool is_zero() const { return coeff_.is_zero(); }

  VolumeExpr operator-() const;
  friend VolumeExpr operator*(const VolumeExpr& x, const VolumeExpr& y);
  friend VolumeExpr operator/(const VolumeExpr& x, const VolumeExpr& y);
  friend bool operator==(const VolumeExpr&, const VolumeExpr&) = default;

  /// "0", "2·(2π)^2", "-(2π)^4·V(1,3)", "1".
  std::string str() const;

 private:
  void canonicalize();

  Rational coeff_;
  long two_pi_power_ = 0;
  AtomMap atoms_;
};

VolumeExpr operator*(const Rational& s, const VolumeExpr& x);

/// Rewrites V(a,b) with a > b-a to V(b-a,b). V(0,b) and V(b,b) map to
/// a = 0, which callers drop.
Atom canonical_atom(Atom atom);

}  // namespace supergr
