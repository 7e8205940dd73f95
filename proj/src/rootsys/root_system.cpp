// SPDX-License-Identifier: Apache-2.0
#include "supergr/root_system.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "supergr/errors.hpp"

namespace supergr {

std::string family_name(Family f) {
  switch (f) {
    case Family::gl: return "gl";
    case Family::sl: return "sl";
    case Family::osp: return "osp";
    case Family::d21a: return "d21a";
    case Family::g3: return "g3";
    case Family::f4: return "f4";
    case Family::q: return "q";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "gl") return Family::gl;
  if (s == "sl") return Family::sl;
  if (s == "osp") return Family::osp;
  if (s == "d21a" || s == "d21") return Family::d21a;
  if (s == "g3") return Family::g3;
  if (s == "f4") return Family::f4;
  if (s == "q") return Family::q;
  throw DomainError("unknown family '" + name + "' (expected gl, sl, osp, d21a, g3, f4, q)");
}

bool WeightVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return x.is_zero(); });
}

WeightVector WeightVector::operator-() const { return Rational(-1) * *this; }

WeightVector operator+(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size()) throw DomainError("weight dimension mismatch");
  WeightVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

WeightVector operator*(const Rational& s, const WeightVector& v) {
  WeightVector out = v;
  for (auto& x : out.coords) x *= s;
  return out;
}

RootSystem::RootSystem(Family family, FamilyParams params, std::vector<std::string> basis_labels,
                       Matrix gram, std::vector<Root> roots)
    : family_(family),
      params_(std::move(params)),
      labels_(std::move(basis_labels)),
      gram_(std::move(gram)),
      roots_(std::move(roots)) {
  if (gram_.rows() != labels_.size() || !gram_.is_symmetric())
    throw DomainError("root system form must be symmetric and match the basis");
  for (const auto& r : roots_) {
    if (r.vector.size() != labels_.size()) throw DomainError("root dimension mismatch");
    if (r.vector.is_zero()) throw DomainError("zero vector listed as a root");
  }
}

std::string RootSystem::name() const {
  switch (family_) {
    case Family::gl: return "gl(" + std::to_string(params_.m) + "|" + std::to_string(params_.n) + ")";
    case Family::sl: return "sl(" + std::to_string(params_.m) + "|" + std::to_string(params_.n) + ")";
    case Family::osp:
      return "osp(" + std::to_string(params_.m) + "|" + std::to_string(2 * params_.n) + ")";
    case Family::d21a: return "D(2,1;" + params_.alpha.str() + ")";
    case Family::g3: return "g(3)";
    case Family::f4: return "f(4)";
    case Family::q: return "q(" + std::to_string(params_.n) + ")";
  }
  return "?";
}

std::string RootSystem::format(const WeightVector& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational& c = v.coords[i];
    if (c.is_zero()) continue;
    if (c.sign() < 0) os << '-';
    else if (!first) os << '+';
    const Rational a = c.abs();
    if (a != 1) os << a;
    os << labels_[i];
    first = false;
  }
  return first ? "0" : os.str();
}

namespace {

struct Builder {
  std::size_t dim;
  std::vector<Root> roots;

  WeightVector unit(std::size_t i, Rational c = 1) const {
    WeightVector v{std::vector<Rational>(dim)};
    v.coords[i] = c;
    return v;
  }
  void add(WeightVector v, bool odd) {
    roots.push_back(Root{std::move(v), odd ? 0 : 1, odd ? 1 : 0});
  }
  void add_pm(const WeightVector& v, bool odd) {
    add(v, odd);
    add(-v, odd);
  }
};

std::vector<std::string> labels(const std::string& prefix, int count, std::size_t offset = 0) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i + 1 + offset));
  return out;
}

RootSystem build_gl_like(Family family, const FamilyParams& p) {
  if (p.m < 0 || p.n < 0) throw DomainError("gl/sl requires m, n >= 0");
  const std::size_t m = p.m, n = p.n, dim = m + n;
  Builder b{dim, {}};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) b.add(b.unit(i) + b.unit(j, -1), false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) b.add(b.unit(m + i) + b.unit(m + j, -1), false);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) b.add_pm(b.unit(i) + b.unit(m + j, -1), true);

  std::vector<Rational> diag(dim, 1);
  for (std::size_t j = 0; j < n; ++j) diag[m + j] = -1;
  auto names = labels("e", p.m);
  auto dnames = labels("d", p.n);
  names.insert(names.end(), dnames.begin(), dnames.end());
  return RootSystem(family, p, std::move(names), Matrix::diagonal(diag), std::move(b.roots));
}

RootSystem build_osp(const FamilyParams& p) {
  if (p.m < 0 || p.n < 0) throw DomainError("osp(M|2n) requires M, n >= 0");
  const std::size_t k = p.m / 2, n = p.n, dim = k + n;
  const bool odd_m = p.m % 2 == 1;
  Builder b{dim, {}};
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      b.add_pm(b.unit(i) + b.unit(j), false);
      b.add_pm(b.unit(i) + b.unit(j, -1), false);
    }
    if (odd_m) b.add_pm(b.unit(i), false);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      b.add_pm(b.unit(k + i) + b.unit(k + j), false);
      b.add_pm(b.unit(k + i) + b.unit(k + j, -1), false);
    }
    b.add_pm(b.unit(k + i, 2), false);
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      b.add_pm(b.unit(i) + b.unit(k + j), true);
      b.add_pm(b.unit(i) + b.unit(k + j, -1), true);
    }
  if (odd_m)
    for (std::size_t j = 0; j < n; ++j) b.add_pm(b.unit(k + j), true);

  std::vector<Rational> diag(dim, 1);
  for (std::size_t j = 0; j < n; ++j) diag[k + j] = -1;
  auto names = labels("e", static_cast<int>(k));
  auto dnames = labels("d", p.n);
  names.insert(names.end(), dnames.begin(), dnames.end());
  return RootSystem(Family::osp, p, std::move(names), Matrix::diagonal(diag), std::move(b.roots));
}

RootSystem build_d21a(const FamilyParams& p) {
  if (p.alpha.is_zero() || p.alpha == -1) throw DomainError("D(2,1;alpha) requires alpha not in {0, -1}");
  Builder b{3, {}};
  for (std::size_t i = 0; i < 3; ++i) b.add_pm(b.unit(i, 2), false);
  for (int s2 : {1, -1})
    for (int s3 : {1, -1}) b.add_pm(b.unit(0) + b.unit(1, s2) + b.unit(2, s3), true);
  // (2e1,2e1) : (2e2,2e2) : (2e3,2e3) = -(1+alpha) : 1 : alpha
  std::vector<Rational> diag{-(Rational(1) + p.alpha), Rational(1), p.alpha};
  return RootSystem(Family::d21a, p, {"e1", "e2", "e3"}, Matrix::diagonal(diag), std::move(b.roots));
}

RootSystem build_g3(const FamilyParams& p) {
  // basis (e1, e2, d) with e3 = -e1 - e2; (e_i, e_j) = 1 - 3 delta_ij, (d, d) = 2
  Builder b{3, {}};
  const WeightVector e1 = b.unit(0), e2 = b.unit(1), e3 = -(e1 + e2), d = b.unit(2);
  const WeightVector eps[3] = {e1, e2, e3};
  for (const auto& e : eps) b.add_pm(e, false);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) b.add(eps[i] + -eps[j], false);
  b.add_pm(Rational(2) * d, false);
  b.add_pm(d, true);
  for (const auto& e : eps) {
    b.add_pm(e + d, true);
    b.add_pm(e + -d, true);
  }
  Matrix gram{{-2, 1, 0}, {1, -2, 0}, {0, 0, 2}};
  return RootSystem(Family::g3, p, {"e1", "e2", "d"}, std::move(gram), std::move(b.roots));
}

RootSystem build_f4(const FamilyParams& p) {
  // (e_i, e_j) = 2 delta_ij, (d, d) = -6
  Builder b{4, {}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      b.add_pm(b.unit(i) + b.unit(j), false);
      b.add_pm(b.unit(i) + b.unit(j, -1), false);
    }
    b.add_pm(b.unit(i), false);
  }
  b.add_pm(b.unit(3), false);
  const Rational half(1, 2);
  for (int s2 : {1, -1})
    for (int s3 : {1, -1})
      for (int s4 : {1, -1})
        b.add_pm(b.unit(0, half) + b.unit(1, half * s2) + b.unit(2, half * s3) + b.unit(3, half * s4),
                 true);
  std::vector<Rational> diag{2, 2, 2, -6};
  return RootSystem(Family::f4, p, {"e1", "e2", "e3", "d"}, Matrix::diagonal(diag), std::move(b.roots));
}

RootSystem build_q(const FamilyParams& p) {
  if (p.n < 0) throw DomainError("q(n) requires n >= 0");
  const std::size_t n = p.n;
  Builder b{n, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) b.roots.push_back(Root{b.unit(i) + b.unit(j, -1), 1, 1});
  return RootSystem(Family::q, p, labels("e", p.n), Matrix::identity(n), std::move(b.roots));
}

void require_contragredient(const RootSystem& system) {
  if (!system.contragredient())
    throw DomainError("isotropy undefined: q(n) handled by parity criteria");
}

// Incrementally maintained echelon basis for linear independence tests.
class EchelonBasis {
 public:
  bool try_push(const WeightVector& v) {
    std::vector<Rational> w = v.coords;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (w[p].is_zero()) continue;
      const Rational f = w[p] / rows_[k][p];
      for (std::size_t j = 0; j < w.size(); ++j) w[j] -= f * rows_[k][j];
    }
    const auto it = std::find_if(w.begin(), w.end(), [](const Rational& x) { return !x.is_zero(); });
    if (it == w.end()) return false;
    pivots_.push_back(static_cast<std::size_t>(it - w.begin()));
    rows_.push_back(std::move(w));
    return true;
  }
  void pop() {
    rows_.pop_back();
    pivots_.pop_back();
  }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

// Depth-first search over positive isotropic representatives in root order.
// Include-first DFS visits valid sets in lexicographic order of index tuples,
// so the first set found at each size is the lexicographically smallest.
class DefectSearch {
 public:
  explicit DefectSearch(const RootSystem& system) : system_(system) {
    for (const auto& r : isotropic_roots(system)) candidates_.push_back(positive_representative(r.vector));
    std::sort(candidates_.begin(), candidates_.end(), root_order_less);
    candidates_.erase(std::unique(candidates_.begin(), candidates_.end()), candidates_.end());

    const std::size_t count = candidates_.size();
    orthogonal_.assign(count, std::vector<bool>(count));
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j)
        orthogonal_[i][j] = inner(system, candidates_[i], candidates_[j]).is_zero();

    // A totally isotropic subspace has dimension <= min(n+, n-) + n0.
    const Inertia in = inertia(system.gram());
    bound_ = std::min(in.positive, in.negative) + in.zero;
  }

  std::vector<WeightVector> run() {
    dfs(0);
    std::vector<WeightVector> out;
    for (std::size_t i : best_) out.push_back(candidates_[i]);
    return out;
  }

 private:
  void dfs(std::size_t start) {
    if (current_.size() > best_.size()) {
      best_ = current_;
      if (best_.size() >= bound_) done_ = true;
    }
    for (std::size_t i = start; i < candidates_.size() && !done_; ++i) {
      if (current_.size() + (candidates_.size() - i) <= best_.size()) return;
      const bool orth = std::all_of(current_.begin(), current_.end(),
                                    [&](std::size_t c) { return orthogonal_[i][c]; });
      if (!orth) continue;
      if (!basis_.try_push(candidates_[i])) continue;
      current_.push_back(i);
      dfs(i + 1);
      current_.pop_back();
      basis_.pop();
    }
  }

  const RootSystem& system_;
  std::vector<WeightVector> candidates_;
  std::vector<std::vector<bool>> orthogonal_;
  std::size_t bound_ = 0;
  std::vector<std::size_t> current_, best_;
  EchelonBasis basis_;
  bool done_ = false;
};

}  // namespace

RootSystem build_root_system(Family family, const FamilyParams& params) {
  switch (family) {
    case Family::gl:
    case Family::sl: return build_gl_like(family, params);
    case Family::osp: return build_osp(params);
    case Family::d21a: return build_d21a(params);
    case Family::g3: return build_g3(params);
    case Family::f4: return build_f4(params);
    case Family::q: return build_q(params);
  }
  throw DomainError("unsupported family");
}

Rational inner(const RootSystem& system, const WeightVector& v, const WeightVector& w) {
  return bilinear(system.gram(), v.coords, w.coords);
}

std::vector<Root> isotropic_roots(const RootSystem& system) {
  require_contragredient(system);
  std::vector<Root> out;
  for (const auto& r : system.roots())
    if (r.is_odd() && inner(system, r.vector, r.vector).is_zero()) out.push_back(r);
  return out;
}

int defect(const RootSystem& system) {
  require_contragredient(system);
  return static_cast<int>(DefectSearch(system).run().size());
}

int defect_closed_form(const RootSystem& system) {
  const auto& p = system.params();
  switch (system.family()) {
    case Family::gl:
    case Family::sl: return std::min(p.m, p.n);
    case Family::osp: return std::min(p.m / 2, p.n);
    case Family::d21a:
    case Family::g3:
    case Family::f4: return 1;
    case Family::q: break;
  }
  require_contragredient(system);
  return 0;
}

std::vector<Root> defect_subgroup_roots(const RootSystem& system) {
  require_contragredient(system);
  auto chosen = DefectSearch(system).run();
  std::vector<Root> out;
  for (auto& v : chosen) out.push_back(Root{std::move(v), 0, 1});
  return out;
}

WeightVector positive_representative(const WeightVector& v) {
  for (const auto& c : v.coords)
    if (!c.is_zero()) return c.sign() > 0 ? v : -v;
  return v;
}

bool root_order_less(const WeightVector& a, const WeightVector& b) {
  std::size_t i = 0, j = 0;
  const std::size_t na = a.size(), nb = b.size();
  while (true) {
    while (i < na && a.coords[i].is_zero()) ++i;
    while (j < nb && b.coords[j].is_zero()) ++j;
    if (i == na || j == nb) return i == na && j != nb;
    if (i != j) return i < j;
    if (a.coords[i] != b.coords[j]) return a.coords[i] > b.coords[j];
    ++i;
    ++j;
  }
}

}  // namespace supergr
