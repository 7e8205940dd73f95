// SPDX-License-Identifier: Apache-2.0
#include "supergr/cli/verify.hpp"

#include <random>

#include "supergr/errors.hpp"
#include "supergr/grassmannian.hpp"
#include "supergr/localization.hpp"
#include "supergr/pfaffian.hpp"
#include "supergr/root_system.hpp"
#include "supergr/splitting.hpp"
#include "supergr/symmetric_pair.hpp"

namespace supergr::cli {

namespace {

constexpr std::size_t kMaxRecordedFailures = 10;

std::string spec_str(int r, int s, int m, int n) { return GrassSpec{r, s, m, n}.str(); }

Matrix random_skew(std::size_t size, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-5, 5);
  Matrix m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) {
      m(i, j) = Rational(entry(rng));
      m(j, i) = -m(i, j);
    }
  return m;
}

Rational random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  long p = 0;
  while (p == 0) p = num(rng);
  return Rational(p, den(rng));
}

SuiteResult exactnum_suite(const VerifyOptions& o) {
  SuiteResult s{"exactnum"};
  std::mt19937_64 rng(o.seed);
  for (int k = 0; k < 100; ++k) {
    const std::size_t size = 2 * (1 + k % 5);
    const Matrix m = random_skew(size, rng);
    const Rational pf = pfaffian(SkewMatrix(m));
    s.check(pf * pf == determinant(m), [&] { return "Pf^2 != det for sample " + std::to_string(k); });
  }
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 1 + k % 4;
    std::vector<Rational> c, d;
    for (std::size_t i = 0; i < n; ++i) {
      c.push_back(random_nonzero(rng));
      d.push_back(random_nonzero(rng));
    }
    s.check(alpha_pfaffian(diagonal_model(c, d)) == alpha_diagonal(c, d),
            [&] { return "alpha_pfaffian != alpha_diagonal for sample " + std::to_string(k); });
  }
  return s;
}

SuiteResult rootsys_suite(const VerifyOptions&) {
  SuiteResult s{"rootsys"};
  auto check_defect = [&](Family f, FamilyParams p) {
    const RootSystem sys = build_root_system(f, p);
    const int d = defect(sys);
    s.check(d == defect_closed_form(sys), [&] { return "defect mismatch for " + sys.name(); });
    const auto roots = defect_subgroup_roots(sys);
    bool orthogonal = true;
    for (const auto& a : roots)
      for (const auto& b : roots) orthogonal = orthogonal && inner(sys, a.vector, b.vector).is_zero();
    s.check(orthogonal && static_cast<int>(roots.size()) == d,
            [&] { return "defect subgroup roots not orthogonal for " + sys.name(); });
  };
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) check_defect(Family::gl, {m, n});
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 3; ++n) check_defect(Family::sl, {m, n});
  for (int big_m = 1; big_m <= 6; ++big_m)
    for (int n = 1; n <= 3; ++n) check_defect(Family::osp, {big_m, n});
  for (const Rational& a : {Rational(1), Rational(2), Rational(1, 2), Rational(-1, 3), Rational(5, 7)})
    check_defect(Family::d21a, {0, 0, a});
  check_defect(Family::g3, {});
  check_defect(Family::f4, {});
  return s;
}

SuiteResult sympair_suite(const VerifyOptions&) {
  SuiteResult s{"sympair"};
  std::vector<RestrictedPair> pairs;
  for (int n = 1; n <= 6; ++n)
    for (int m = 0; m < n; ++m) {
      pairs.push_back(osp_pair(m, n));
      const auto rho = rho_coefficients(pairs.back());
      s.check(rho.coeffs == std::vector<Rational>{Rational(n - m - 1)} && rho.nonnegative,
              [&] { return "osp rho coefficient mismatch at m=" + std::to_string(m) + ", n=" + std::to_string(n); });
    }
  pairs.push_back(g12_pair());
  s.check(rho_coefficients(pairs.back()).coeffs == std::vector<Rational>{1, 1}, [] { return "g(1|2) rho != (1,1)"; });
  pairs.push_back(f31_pair());
  s.check(rho_coefficients(pairs.back()).coeffs == std::vector<Rational>{1, 2, 3}, [] { return "F(3|1) rho != (1,2,3)"; });

  for (const auto& p : pairs) {
    s.check(leading_minors_positive(p.form), [&] { return p.name + ": form not positive definite"; });
    const auto grid = dominant_grid(p);
    s.check(grid.size() >= 100, [&] { return p.name + ": dominant grid has fewer than 100 points"; });
    long bad = 0;
    for (const auto& lambda : grid)
      if (!positivity_check(p, lambda)) ++bad;
    s.check(bad == 0, [&] { return p.name + ": " + std::to_string(bad) + " grid weights with eigenvalue <= 0"; });
    const auto rho = rho_coefficients(p);
    s.check(combine_simple_roots(p, rho.coeffs) == p.rho, [&] { return p.name + ": rho round trip failed"; });
  }
  for (unsigned l = 0; l <= 100; ++l)
    s.check(d21a_in_a_star(l) == (l <= 1), [&] { return "D(2,1;a) weight test wrong at l=" + std::to_string(l); });
  return s;
}

SuiteResult grassvol_suite(const VerifyOptions& o) {
  SuiteResult s{"grassvol"};
  for (int m = 0; m <= o.max_n; ++m)
    for (int n = 0; n <= o.max_n; ++n)
      for (int r = 0; r <= m; ++r)
        for (int t = 0; t <= n; ++t) {
          const GrassSpec g{r, t, m, n};
          const VolumeExpr v = volume(g);
          const long sd = sdim(g);
          s.check(!v.is_zero() == (sd >= 0), [&] { return "nonvanishing fails at " + g.str(); });
          s.check(check_symmetry(g), [&] { return "symmetry fails at " + g.str(); });
          s.check(check_lemma_sign(g), [&] { return "duality sign fails at " + g.str(); });
          if (sd >= 0) {
            s.check(v.two_pi_power() == dims(g).odd, [&] { return "2pi power != odd dim at " + g.str(); });
            if (r >= t)
              s.check(volume_via_general_positive(g) == v, [&] { return "general-positive mismatch at " + g.str(); });
          }
        }
  for (int n = 0; n <= 8; ++n)
    for (int r = 0; r <= n; ++r)
      s.check(volume({r, r, n, n}) == VolumeExpr(Rational(binomial(n, r)), 2L * r * (n - r)),
              [&] { return "equal-rank volume wrong at " + spec_str(r, r, n, n); });
  for (int m = 1; m <= 8; ++m)
    for (int n = 0; n < m; ++n)
      s.check(volume({m - n, 0, m, n}) == VolumeExpr(Rational(1), static_cast<long>(n) * (m - n)),
              [&] { return "one-zero volume wrong at " + spec_str(m - n, 0, m, n); });
  for (int c = 0; c <= 8; ++c)
    for (int b = 0; b <= c; ++b)
      for (int a = 0; a <= b; ++a)
        s.check(check_cor_one(a, b, c), [&] {
          return "cor-one identity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
        });
  return s;
}

SuiteResult qlocal_suite(const VerifyOptions& o) {
  SuiteResult s{"qlocal"};
  std::vector<std::vector<Integer>> brute(o.max_n_c + 1);
  for (int n = 0; n <= o.max_n_c; ++n) {
    const auto samples = seeded_param_vectors(n, 3, o.seed + n);
    for (int r = 0; r <= n; ++r) {
      try {
        const auto report = c_bruteforce(r, n, samples);
        brute[n].push_back(report.consensus.numerator());
        s.check(report.consensus == Rational(c_closed(r, n)),
                [&] { return "C(" + std::to_string(r) + "," + std::to_string(n) + ") brute force != closed form"; });
      } catch (const DomainError& e) {
        brute[n].push_back(0);
        s.check(false, [&] { return std::string(e.what()); });
      }
    }
  }
  s.check(check_recursions(20), [] { return "recursions fail on closed form"; });
  s.check(check_recursions(o.max_n_c, [&](int r, int n) { return brute[n][r]; }),
          [] { return "recursions fail on brute-force values"; });
  for (int n = 0; n <= 20; ++n)
    for (int r = 0; r <= n; ++r)
      s.check((c_closed(r, n) != 0) == (r * (n - r) % 2 == 0),
              [&] { return "C(" + std::to_string(r) + "," + std::to_string(n) + ") parity criterion fails"; });
  for (int n = 0; n <= 10; ++n) {
    const auto samples = seeded_param_vectors(n, 3, o.seed + 1000 + n);
    for (int r = 0; r <= n; ++r)
      for (const auto& a : samples) {
        const auto rep = gl_localization_report(r, n, a);
        s.check(rep.alpha_identically_one && rep.sum == Rational(binomial(n, r)), [&] {
          return "GL localization at r=" + std::to_string(r) + ", n=" + std::to_string(n) + " with a=" + a.str();
        });
      }
  }
  return s;
}

SuiteResult splitting_suite(const VerifyOptions& o) {
  SuiteResult s{"splitting"};
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n) {
      const auto chain = minimal_chain(GroupFactor::gl(m, n));
      const std::string failure = validate_chain(chain);
      s.check(failure.empty(), [&] { return "GL(" + std::to_string(m) + "|" + std::to_string(n) + ") chain: " + failure; });
      bool zero = true;
      for (const auto& st : chain.steps)
        if (st.rule == SplitRule::LeviGL) zero = zero && st.evidence.value == 0;
      s.check(zero, [&] { return "GL chain Levi step with nonzero sdim"; });
      const std::vector<GroupFactor> d(std::min(m, n), GroupFactor::sl(1, 1));
      s.check(chain.bottom() == GroupDesc(d), [&] { return "GL chain does not end at SL(1|1)^d"; });
    }
  for (int n = 0; n <= 10; ++n) {
    const auto chain = minimal_chain(GroupFactor::q(n));
    s.check(is_valid(chain), [&] { return "Q(" + std::to_string(n) + ") chain invalid"; });
    bool even = true;
    for (const auto& st : chain.steps) even = even && st.evidence.value % 2 == 0;
    s.check(even, [&] { return "Q chain step with odd evidence"; });
    std::vector<GroupFactor> bottom(n / 2, GroupFactor::q(2));
    if (n % 2 == 1) bottom.push_back(GroupFactor::q(1));
    s.check(chain.bottom() == GroupDesc(bottom), [&] { return "Q(" + std::to_string(n) + ") chain ends at " + chain.bottom().str(); });
  }
  const int top = std::max(o.max_n, 6);
  for (int m = 0; m <= top; ++m)
    for (int n = 0; n <= top; ++n)
      for (int r = 0; r <= m; ++r)
        for (int t = 0; t <= n; ++t) {
          const Verdict v = is_splitting_levi_gl(r, t, m, n);
          s.check(v.splitting == !volume({r, t, m, n}).is_zero(),
                  [&] { return "GL predicate disagrees with volume at " + spec_str(r, t, m, n); });
          const GroupDesc g(GroupFactor::gl(m, n));
          const GroupDesc k(std::vector<GroupFactor>{GroupFactor::gl(r, t), GroupFactor::gl(m - r, n - t)});
          s.check(sdim_quotient(lie_dims(g), lie_dims(k)) == 2 * v.evidence,
                  [&] { return "dimension count disagrees with sdim at " + spec_str(r, t, m, n); });
        }
  for (int n = 0; n <= 20; ++n)
    for (int r = 0; r <= n; ++r)
      s.check(is_splitting_levi_q(r, n).splitting == (c_closed(r, n) != 0),
              [&] { return "Q predicate disagrees with C(r,n) at r=" + std::to_string(r) + ", n=" + std::to_string(n); });
  for (const auto& e : defect_one_table())
    s.check(defect(build_root_system(e.family, e.params)) == 1, [&] { return e.group + " is not defect one"; });
  return s;
}

}  // namespace

void SuiteResult::check(bool ok, const std::function<std::string()>& describe) {
  if (ok) {
    ++passed;
    return;
  }
  ++failed;
  if (failures.size() < kMaxRecordedFailures) failures.push_back(describe());
}

std::vector<std::string> suite_names() { return {"exactnum", "rootsys", "sympair", "grassvol", "qlocal", "splitting"}; }

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "exactnum") return exactnum_suite(options);
  if (name == "rootsys") return rootsys_suite(options);
  if (name == "sympair") return sympair_suite(options);
  if (name == "grassvol") return grassvol_suite(options);
  if (name == "qlocal") return qlocal_suite(options);
  if (name == "splitting") return splitting_suite(options);
  throw DomainError("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& options) {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, options));
  return out;
}

}  // namespace supergr::cli
