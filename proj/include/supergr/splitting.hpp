// SPDX-License-Identifier: Apache-2.0
#pragma once

// Splitting-subgroup predicates and certified chains of splitting subgroups
// for GL(m|n) and Q(n).

#include <string>
#include <vector>

#include "supergr/grassmannian.hpp"
#include "supergr/root_system.hpp"

namespace supergr {

enum class GroupKind { GL, SL, Q };

struct GroupFactor {
  GroupKind kind = GroupKind::GL;
  int m = 0;  // GL/SL: (m|n). Q: n, with m unused (kept 0).
  int n = 0;

  static GroupFactor gl(int m, int n) { return {GroupKind::GL, m, n}; }
  static GroupFactor sl(int m, int n) { return {GroupKind::SL, m, n}; }
  static GroupFactor q(int n) { return {GroupKind::Q, 0, n}; }

  bool is_trivial() const;
  std::string str() const;
  friend bool operator==(const GroupFactor&, const GroupFactor&) = default;
};

/// A flattened product of factors; trivial factors are dropped.
class GroupDesc {
 public:
  GroupDesc() = default;
  explicit GroupDesc(std::vector<GroupFactor> factors);
  GroupDesc(GroupFactor single);

  const std::vector<GroupFactor>& factors() const { return factors_; }
  bool is_trivial() const { return factors_.empty(); }
  /// "GL(1|1)^2×GL(1|0)"; the trivial group prints as "1".
  std::string str() const;
  friend bool operator==(const GroupDesc&, const GroupDesc&) = default;

  /// Flattened product.
  friend GroupDesc operator*(const GroupDesc& a, const GroupDesc& b);

 private:
  std::vector<GroupFactor> factors_;
};

/// Parses "GL(m|n)", "SL(m|n)", "Q(n)" factors joined by "x" or "×", with
/// optional "^k" powers.
GroupDesc parse_group(const std::string& text);

/// Superdimension of the Lie superalgebra: gl (m²+n² | 2mn),
/// sl (m²+n²-1 | 2mn), q (n² | n²).
SuperDim lie_dims(const GroupFactor& f);
SuperDim lie_dims(const GroupDesc& g);

enum class SplitRule { LeviGL, LeviQ, OddPartsEqual, FactorSplit };
std::string rule_name(SplitRule rule);

struct Evidence {
  /// LeviGL: (r, s, m, n). LeviQ: (r, n). FactorSplit: (even, odd) of the
  /// removed factor. OddPartsEqual: (odd dim of sup, odd dim of sub).
  std::vector<long> inputs;
  /// LeviGL: sdim Gr. LeviQ: r(n-r). FactorSplit: odd dim of the removed
  /// factor. OddPartsEqual: difference of odd dims.
  long value = 0;
  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct ChainStep {
  GroupDesc sub;
  GroupDesc sup;
  SplitRule rule = SplitRule::LeviGL;
  /// Index into sup.factors() of the factor the rule acts on (unused for
  /// OddPartsEqual).
  std::size_t factor = 0;
  Evidence evidence;
};

struct SubgroupChain {
  GroupDesc top;
  /// Ordered from the top group G downwards; steps[i].sub == steps[i+1].sup.
  std::vector<ChainStep> steps;

  const GroupDesc& bottom() const { return steps.empty() ? top : steps.back().sub; }
  std::size_t group_count() const { return steps.size() + 1; }
};

struct Verdict {
  bool splitting = false;
  long evidence = 0;
};

/// GL(r|s) x GL(m-r|n-s) in GL(m|n) splits iff sdim Gr(r|s,m|n) >= 0.
Verdict is_splitting_levi_gl(int r, int s, int m, int n);
/// Q(r) x Q(n-r) in Q(n) splits iff r(n-r) is even.
Verdict is_splitting_levi_q(int r, int n);

/// Chain from GL(m|n) down to SL(1|1)^min(m,n), or from Q(n) down to
/// Q(2)^d or Q(2)^d x Q(1).
SubgroupChain minimal_chain(const GroupDesc& g);

/// Recomputes each step's evidence and checks that it certifies the rule
/// and that adjacent steps compose. Returns an empty string when valid,
/// otherwise a description of the first failure.
std::string validate_chain(const SubgroupChain& chain);
inline bool is_valid(const SubgroupChain& chain) { return validate_chain(chain).empty(); }

/// (g.even - k.even) - (g.odd - k.odd).
long sdim_quotient(const SuperDim& g, const SuperDim& k);
/// sdim G/K >= 0. Requires k <= g componentwise.
bool sdim_necessity(const SuperDim& g, const SuperDim& k);

/// Groups whose Lie superalgebra is basic classical of defect one. Each has
/// SL(1|1) as a splitting subgroup, established through symmetric pairs.
struct DefectOneEntry {
  std::string group;
  Family family;
  FamilyParams params;
  std::string subgroup;
  std::string route;
};
std::vector<DefectOneEntry> defect_one_table();

/// Quotient and normal-subgroup variants that reduce to GL or Q.
struct Reduction {
  std::string group;
  std::string subgroup;
  std::string reduces_to;
};
std::vector<Reduction> documented_reductions();

}  // namespace supergr
