// SPDX-License-Identifier: Apache-2.0
#include "supergr/splitting.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "supergr/errors.hpp"

namespace supergr {

bool GroupFactor::is_trivial() const {
  if (kind == GroupKind::Q) return n == 0;
  if (kind == GroupKind::SL) return m + n <= 1;
  return m == 0 && n == 0;
}

std::string GroupFactor::str() const {
  switch (kind) {
    case GroupKind::GL: return "GL(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    case GroupKind::SL: return "SL(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    case GroupKind::Q: return "Q(" + std::to_string(n) + ")";
  }
  return "?";
}

GroupDesc::GroupDesc(std::vector<GroupFactor> factors) {
  for (const auto& f : factors) {
    if (f.m < 0 || f.n < 0) throw DomainError("group parameters must be nonnegative: " + f.str());
    if (!f.is_trivial()) factors_.push_back(f);
  }
}

GroupDesc::GroupDesc(GroupFactor single) : GroupDesc(std::vector<GroupFactor>{single}) {}

std::string GroupDesc::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (!out.empty()) out += "×";
    out += factors_[i].str();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

GroupDesc operator*(const GroupDesc& a, const GroupDesc& b) {
  std::vector<GroupFactor> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return GroupDesc(std::move(f));
}

GroupDesc parse_group(const std::string& text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    if (text.compare(i, 2, "×") == 0) {
      s += '*';
      ++i;
      continue;
    }
    s += text[i];
  }
  static const std::regex term(R"(^(GL|SL|Q)\((\d+)(?:\|(\d+))?\)(?:\^(\d+))?$)", std::regex::icase);
  std::vector<GroupFactor> factors;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find_first_of("*xX", start);
    // Do not split inside a name; 'x' never occurs in one.
    const std::string piece = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
    std::smatch mt;
    if (!std::regex_match(piece, mt, term)) throw DomainError("cannot parse group '" + text + "'");
    std::string kind = mt[1];
    std::transform(kind.begin(), kind.end(), kind.begin(), ::toupper);
    const int a = std::stoi(mt[2]);
    const int power = mt[4].matched ? std::stoi(mt[4]) : 1;
    GroupFactor f;
    if (kind == "Q") {
      if (mt[3].matched) throw DomainError("Q(n) takes one parameter: '" + piece + "'");
      f = GroupFactor::q(a);
    } else {
      if (!mt[3].matched) throw DomainError(kind + " needs (m|n): '" + piece + "'");
      const int b = std::stoi(mt[3]);
      f = kind == "GL" ? GroupFactor::gl(a, b) : GroupFactor::sl(a, b);
    }
    for (int k = 0; k < power; ++k) factors.push_back(f);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return GroupDesc(std::move(factors));
}

SuperDim lie_dims(const GroupFactor& f) {
  const long m = f.m, n = f.n;
  switch (f.kind) {
    case GroupKind::GL: return {m * m + n * n, 2 * m * n};
    case GroupKind::SL: return {f.is_trivial() ? 0 : m * m + n * n - 1, 2 * m * n};
    case GroupKind::Q: return {n * n, n * n};
  }
  return {};
}

SuperDim lie_dims(const GroupDesc& g) {
  SuperDim out;
  for (const auto& f : g.factors()) {
    const SuperDim d = lie_dims(f);
    out.even += d.even;
    out.odd += d.odd;
  }
  return out;
}

std::string rule_name(SplitRule rule) {
  switch (rule) {
    case SplitRule::LeviGL: return "LEVI_GL";
    case SplitRule::LeviQ: return "LEVI_Q";
    case SplitRule::OddPartsEqual: return "ODD_PARTS_EQUAL";
    case SplitRule::FactorSplit: return "FACTOR_SPLIT";
  }
  return "?";
}

Verdict is_splitting_levi_gl(int r, int s, int m, int n) {
  const long value = sdim(GrassSpec{r, s, m, n});
  return {value >= 0, value};
}

Verdict is_splitting_levi_q(int r, int n) {
  if (r < 0 || r > n) throw DomainError("need 0 <= r <= n for Q(r)×Q(n-r) in Q(n)");
  const long value = static_cast<long>(r) * (n - r);
  return {value % 2 == 0, value};
}

namespace {

GroupDesc replace_factor(const GroupDesc& g, std::size_t index, const std::vector<GroupFactor>& with) {
  std::vector<GroupFactor> f;
  for (std::size_t i = 0; i < g.factors().size(); ++i) {
    if (i == index) f.insert(f.end(), with.begin(), with.end());
    else f.push_back(g.factors()[i]);
  }
  return GroupDesc(std::move(f));
}

SubgroupChain gl_chain(int m, int n) {
  SubgroupChain chain{GroupDesc(GroupFactor::gl(m, n)), {}};
  GroupDesc cur = chain.top;
  const int d = std::min(m, n);
  for (int k = 0; k < d && !(m - k == 1 && n - k == 1); ++k) {
    const std::size_t last = cur.factors().size() - 1;
    const int mm = m - k, nn = n - k;
    GroupDesc next = replace_factor(cur, last, {GroupFactor::gl(1, 1), GroupFactor::gl(mm - 1, nn - 1)});
    const Verdict v = is_splitting_levi_gl(1, 1, mm, nn);
    chain.steps.push_back({next, cur, SplitRule::LeviGL, last, {{1, 1, mm, nn}, v.evidence}});
    cur = next;
  }
  if (m != n) {
    const std::size_t last = cur.factors().size() - 1;
    const SuperDim rest = lie_dims(cur.factors()[last]);
    GroupDesc next = replace_factor(cur, last, {});
    chain.steps.push_back({next, cur, SplitRule::FactorSplit, last, {{rest.even, rest.odd}, rest.odd}});
    cur = next;
  }
  if (d > 0) {
    GroupDesc next(std::vector<GroupFactor>(d, GroupFactor::sl(1, 1)));
    const long g1 = lie_dims(cur).odd, k1 = lie_dims(next).odd;
    chain.steps.push_back({next, cur, SplitRule::OddPartsEqual, 0, {{g1, k1}, g1 - k1}});
  }
  return chain;
}

SubgroupChain q_chain(int n) {
  SubgroupChain chain{GroupDesc(GroupFactor::q(n)), {}};
  GroupDesc cur = chain.top;
  for (int k = n; k >= 3; k -= 2) {
    const std::size_t last = cur.factors().size() - 1;
    GroupDesc next = replace_factor(cur, last, {GroupFactor::q(2), GroupFactor::q(k - 2)});
    const Verdict v = is_splitting_levi_q(2, k);
    chain.steps.push_back({next, cur, SplitRule::LeviQ, last, {{2, k}, v.evidence}});
    cur = next;
  }
  return chain;
}

std::string check_step(const ChainStep& step) {
  const auto& sup = step.sup.factors();
  const auto& ev = step.evidence;
  const bool has_factor = step.factor < sup.size();
  switch (step.rule) {
    case SplitRule::LeviGL: {
      if (!has_factor || sup[step.factor].kind != GroupKind::GL || ev.inputs.size() != 4)
        return "LEVI_GL step does not act on a GL factor";
      const int r = ev.inputs[0], s = ev.inputs[1], m = ev.inputs[2], n = ev.inputs[3];
      if (sup[step.factor] != GroupFactor::gl(m, n)) return "LEVI_GL evidence names the wrong factor";
      if (r < 0 || s < 0 || r > m || s > n) return "LEVI_GL block sizes out of range";
      if (step.sub != replace_factor(step.sup, step.factor, {GroupFactor::gl(r, s), GroupFactor::gl(m - r, n - s)}))
        return "LEVI_GL subgroup is not the stated Levi";
      const Verdict v = is_splitting_levi_gl(r, s, m, n);
      if (v.evidence != ev.value) return "LEVI_GL evidence does not recompute";
      if (!v.splitting) return "LEVI_GL step has sdim < 0";
      return {};
    }
    case SplitRule::LeviQ: {
      if (!has_factor || sup[step.factor].kind != GroupKind::Q || ev.inputs.size() != 2)
        return "LEVI_Q step does not act on a Q factor";
      const int r = ev.inputs[0], n = ev.inputs[1];
      if (sup[step.factor] != GroupFactor::q(n) || r < 0 || r > n) return "LEVI_Q evidence names the wrong factor";
      if (step.sub != replace_factor(step.sup, step.factor, {GroupFactor::q(r), GroupFactor::q(n - r)}))
        return "LEVI_Q subgroup is not the stated Levi";
      const Verdict v = is_splitting_levi_q(r, n);
      if (v.evidence != ev.value) return "LEVI_Q evidence does not recompute";
      if (!v.splitting) return "LEVI_Q step has odd r(n-r)";
      return {};
    }
    case SplitRule::FactorSplit: {
      if (!has_factor) return "FACTOR_SPLIT step does not name a factor";
      const SuperDim d = lie_dims(sup[step.factor]);
      if (ev.inputs != std::vector<long>{d.even, d.odd} || ev.value != d.odd)
        return "FACTOR_SPLIT evidence does not recompute";
      if (d.odd != 0) return "FACTOR_SPLIT removes a factor with odd part";
      if (step.sub != replace_factor(step.sup, step.factor, {})) return "FACTOR_SPLIT subgroup is not the complement factor";
      return {};
    }
    case SplitRule::OddPartsEqual: {
      const auto& sub = step.sub.factors();
      if (sub.size() != sup.size()) return "ODD_PARTS_EQUAL changes the number of factors";
      for (std::size_t i = 0; i < sub.size(); ++i) {
        const bool same = sub[i] == sup[i];
        const bool special = sup[i].kind == GroupKind::GL && sub[i] == GroupFactor::sl(sup[i].m, sup[i].n);
        if (!same && !special) return "ODD_PARTS_EQUAL subgroup is not contained factorwise";
      }
      const long g1 = lie_dims(step.sup).odd, k1 = lie_dims(step.sub).odd;
      if (ev.inputs != std::vector<long>{g1, k1} || ev.value != g1 - k1)
        return "ODD_PARTS_EQUAL evidence does not recompute";
      if (g1 != k1) return "ODD_PARTS_EQUAL odd parts differ";
      return {};
    }
  }
  return "unknown rule";
}

}  // namespace

SubgroupChain minimal_chain(const GroupDesc& g) {
  if (g.is_trivial()) return {g, {}};
  if (g.factors().size() != 1)
    throw DomainError("minimal_chain supports a single GL(m|n) or Q(n), got " + g.str());
  const GroupFactor& f = g.factors().front();
  if (f.kind == GroupKind::GL) return gl_chain(f.m, f.n);
  if (f.kind == GroupKind::Q) return q_chain(f.n);
  throw DomainError("unsupported family for minimal_chain: " + g.str());
}

std::string validate_chain(const SubgroupChain& chain) {
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const auto& step = chain.steps[i];
    const GroupDesc& expected_sup = i == 0 ? chain.top : chain.steps[i - 1].sub;
    const std::string where = "step " + std::to_string(i + 1) + ": ";
    if (step.sup != expected_sup) return where + "does not compose with the previous group";
    if (std::string err = check_step(step); !err.empty()) return where + err;
  }
  return {};
}

long sdim_quotient(const SuperDim& g, const SuperDim& k) { return (g.even - k.even) - (g.odd - k.odd); }

bool sdim_necessity(const SuperDim& g, const SuperDim& k) {
  if (k.even > g.even || k.odd > g.odd) throw DomainError("subgroup dimensions exceed group dimensions");
  return sdim_quotient(g, k) >= 0;
}

std::vector<DefectOneEntry> defect_one_table() {
  const std::string osp_route =
      "SOSp(m-1|2n) ⊂ SOSp(m|2n) and SOSp(2m|2n-2)×Sp(2) ⊂ SOSp(2m|2n), down to SOSp(2|2) ≅ SL(1|2)";
  return {
      {"SL(2|1)", Family::sl, {2, 1, 1}, "SL(1|1)", "Levi chain in GL(2|1), then equal odd parts"},
      {"SL(3|1)", Family::sl, {3, 1, 1}, "SL(1|1)", "Levi chain in GL(3|1), then equal odd parts"},
      {"OSp(2|2)", Family::osp, {2, 1, 1}, "SL(1|1)", "SOSp(2|2) ≅ SL(1|2)"},
      {"OSp(3|2)", Family::osp, {3, 1, 1}, "SL(1|1)", osp_route},
      {"OSp(4|2)", Family::osp, {4, 1, 1}, "SL(1|1)", osp_route},
      {"OSp(5|2)", Family::osp, {5, 1, 1}, "SL(1|1)", osp_route},
      {"OSp(2|4)", Family::osp, {2, 2, 1}, "SL(1|1)", osp_route},
      {"OSp(3|4)", Family::osp, {3, 2, 1}, "SL(1|1)", osp_route},
      {"D(2,1;2)", Family::d21a, {0, 0, 2}, "SL(1|1)", "SOSp(2|2)×SO(2) ⊂ D(2,1;α)"},
      {"G(3)", Family::g3, {}, "SL(1|1)", "D(2,1;3) ⊂ G(3)"},
      {"F(4)", Family::f4, {}, "SL(1|1)", "D(2,1;2)×SL(2) ⊂ F(4)"},
  };
}

std::vector<Reduction> documented_reductions() {
  return {
      {"PSL(n|n)", "P(SL(1|1)^n)", "GL(n|n) ⊃ SL(1|1)^n"},
      {"PGL(n|n)", "image of SL(1|1)^n", "GL(n|n) ⊃ SL(1|1)^n"},
      {"SQ(n)", "K ∩ SQ(n)", "Q(n) ⊃ K"},
      {"PQ(n)", "image of K", "Q(n) ⊃ K"},
      {"PSQ(n)", "image of K ∩ SQ(n)", "Q(n) ⊃ K"},
  };
}

}  // namespace supergr
