// SPDX-License-Identifier: Apache-2.0
#include "supergr/volume_expr.hpp"

#include <sstream>

#include "supergr/errors.hpp"

namespace supergr {

Atom canonical_atom(Atom atom) {
  if (atom.a < 0 || atom.a > atom.b)
    throw DomainError("invalid Grassmannian atom V(" + std::to_string(atom.a) + "," + std::to_string(atom.b) + ")");
  if (atom.a > atom.b - atom.a) atom.a = atom.b - atom.a;
  return atom;
}

VolumeExpr::VolumeExpr(Rational coeff, long two_pi_power, const AtomMap& atoms)
    : coeff_(std::move(coeff)), two_pi_power_(two_pi_power) {
  for (const auto& [atom, e] : atoms) atoms_[canonical_atom(atom)] += e;
  canonicalize();
}

VolumeExpr VolumeExpr::atom(int a, int b) { return VolumeExpr(Rational(1), 0, {{Atom{a, b}, 1}}); }

void VolumeExpr::canonicalize() {
  if (coeff_.is_zero()) {
    two_pi_power_ = 0;
    atoms_.clear();
    return;
  }
  for (auto it = atoms_.begin(); it != atoms_.end();) {
    if (it->second == 0 || it->first.a == 0) it = atoms_.erase(it);
    else ++it;
  }
}

VolumeExpr VolumeExpr::operator-() const { return Rational(-1) * *this; }

VolumeExpr operator*(const VolumeExpr& x, const VolumeExpr& y) {
  VolumeExpr::AtomMap atoms = x.atoms_;
  for (const auto& [atom, e] : y.atoms_) atoms[atom] += e;
  return VolumeExpr(x.coeff_ * y.coeff_, x.two_pi_power_ + y.two_pi_power_, atoms);
}

VolumeExpr operator/(const VolumeExpr& x, const VolumeExpr& y) {
  if (y.is_zero()) throw DomainError("division by zero volume");
  VolumeExpr::AtomMap atoms = x.atoms_;
  for (const auto& [atom, e] : y.atoms_) atoms[atom] -= e;
  return VolumeExpr(x.coeff_ / y.coeff_, x.two_pi_power_ - y.two_pi_power_, atoms);
}

VolumeExpr operator*(const Rational& s, const VolumeExpr& x) { return VolumeExpr(s, 0) * x; }

std::string VolumeExpr::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool need_dot = false;
  if (two_pi_power_ == 0 && atoms_.empty()) return coeff_.str();
  if (coeff_ == -1) os << '-';
  else if (coeff_ != 1) {
    os << coeff_;
    need_dot = true;
  }
  auto sep = [&] {
    if (need_dot) os << "·";
    need_dot = true;
  };
  if (two_pi_power_ != 0) {
    sep();
    os << "(2π)";
    if (two_pi_power_ != 1) os << '^' << two_pi_power_;
  }
  for (const auto& [atom, e] : atoms_) {
    sep();
    os << "V(" << atom.a << ',' << atom.b << ')';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace supergr
