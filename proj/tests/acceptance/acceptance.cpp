// SPDX-License-Identifier: Apache-2.0
// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic only.
// Exit status is 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "supergr/errors.hpp"
#include "supergr/grassmannian.hpp"
#include "supergr/localization.hpp"
#include "supergr/pfaffian.hpp"
#include "supergr/root_system.hpp"
#include "supergr/splitting.hpp"
#include "supergr/symmetric_pair.hpp"

using namespace supergr;

namespace {

constexpr std::uint64_t kSeed = 12345;

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

bool report(int id, const char* title, const std::function<void(Tally&)>& body) {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.check(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = t.failures == 0 && t.checks > 0;
  std::printf("%s %2d %s (%ld checks, %.2f s)", ok ? "PASS" : "FAIL", id, title, t.checks, secs);
  if (!ok) std::printf(": %ld failed, first: %s", t.failures, t.first_failure.c_str());
  std::printf("\n");
  std::fflush(stdout);
  return ok;
}

std::string rn(int r, int n) { return "(r,n)=(" + std::to_string(r) + "," + std::to_string(n) + ")"; }

std::string spec_str(int r, int s, int m, int n) { return GrassSpec{r, s, m, n}.str(); }

// Brute-force C(r,n) table for n <= nmax, three seeded samples per n.
std::map<std::pair<int, int>, Rational> brute_table(int nmax) {
  std::map<std::pair<int, int>, Rational> table;
  for (int n = 0; n <= nmax; ++n) {
    const auto samples = seeded_param_vectors(static_cast<std::size_t>(n), 3, kSeed + static_cast<std::uint64_t>(n));
    for (int r = 0; r <= n; ++r) table[{r, n}] = c_bruteforce(r, n, samples).consensus;
  }
  return table;
}

void criterion1(Tally& t) {
  for (int n = 0; n <= 12; ++n) {
    const auto samples = seeded_param_vectors(static_cast<std::size_t>(n), 3, kSeed + static_cast<std::uint64_t>(n));
    for (int r = 0; r <= n; ++r) {
      const LocalizationReport rep = c_bruteforce(r, n, samples);
      t.check(rep.agrees && rep.samples.size() == 3, "sample disagreement at " + rn(r, n));
      t.check(rep.consensus == Rational(c_closed(r, n)), "brute force != closed form at " + rn(r, n));
      if (n % 2 == 0 && r % 2 == 1) t.check(rep.consensus.is_zero(), "expected zero at " + rn(r, n));
    }
  }
  t.check(c_bruteforce(1, 2, seeded_param_vectors(2, 3, kSeed)).consensus.is_zero(), "C(1,2) != 0");
}

void criterion2(Tally& t) {
  t.check(check_recursions(20), "closed-form recursions fail for n <= 20");
  const auto table = brute_table(12);
  const auto lookup = [&](int r, int n) -> Integer {
    const Rational& q = table.at({r, n});
    if (!q.is_integer()) throw DomainError("non-integral brute-force value at " + rn(r, n));
    return q.numerator();
  };
  t.check(check_recursions(12, lookup), "brute-force recursions fail for n <= 12");
  // Restate both laws directly on the brute-force table.
  for (int n = 1; n <= 12; ++n)
    for (int r = 0; r <= n; ++r) {
      const Integer below = r <= n - 1 ? lookup(r, n - 1) : Integer(0);
      const Integer diag = r >= 1 ? lookup(r - 1, n - 1) : Integer(0);
      if (r >= 1) t.check(lookup(r, n) == below + sign_power(n - r) * diag, "Pascal law at " + rn(r, n));
      t.check(lookup(r, n) == sign_power(static_cast<long>(r) * (n - r)) * lookup(n - r, n), "symmetry at " + rn(r, n));
    }
}

void criterion3(Tally& t) {
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      for (int r = 0; r <= m; ++r)
        for (int s = 0; s <= n; ++s) {
          const bool nonzero = !volume({r, s, m, n}).coeff().is_zero();
          const bool predicted = (r - s) * ((m - r) - (n - s)) >= 0;
          t.check(nonzero == predicted, "nonvanishing mismatch at " + spec_str(r, s, m, n));
        }
}

void criterion4(Tally& t) {
  for (int n = 0; n <= 8; ++n)
    for (int r = 0; r <= n; ++r) {
      const VolumeExpr expected(Rational(binomial(n, r)), 2L * r * (n - r));
      t.check(volume({r, r, n, n}) == expected, "equal-rank volume at " + spec_str(r, r, n, n));
    }
  for (int m = 1; m <= 8; ++m)
    for (int n = 0; n < m; ++n) {
      const VolumeExpr expected(Rational(1), static_cast<long>(n) * (m - n));
      t.check(volume({m - n, 0, m, n}) == expected, "one-zero volume at " + spec_str(m - n, 0, m, n));
    }
}

void criterion5(Tally& t) {
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      for (int r = 0; r <= m; ++r)
        for (int s = 0; s <= n; ++s) {
          const GrassSpec g{r, s, m, n};
          t.check(check_lemma_sign(g), "duality sign at " + g.str());
          if (r >= s && sdim(g) >= 0)
            t.check(volume_via_general_positive(g) == volume(g), "general-positive route at " + g.str());
        }
  for (int c = 0; c <= 8; ++c)
    for (int b = 0; b <= c; ++b)
      for (int a = 0; a <= b; ++a)
        t.check(check_cor_one(a, b, c),
                "fibration identity at (a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," +
                    std::to_string(c) + ")");
}

void criterion6(Tally& t) {
  for (int n = 0; n <= 10; ++n)
    for (const auto& a : seeded_param_vectors(static_cast<std::size_t>(n), 3, kSeed + 1000 + static_cast<std::uint64_t>(n)))
      for (int r = 0; r <= n; ++r) {
        const GlLocalization rep = gl_localization_report(r, n, a);
        t.check(rep.alpha_identically_one, "alpha != 1 at a fixed point, " + rn(r, n));
        t.check(rep.fixed_points == binomial(n, r), "fixed-point count at " + rn(r, n));
        t.check(rep.sum == Rational(binomial(n, r)), "localization sum at " + rn(r, n));
      }
}

void criterion7(Tally& t) {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<long> num(-7, 7), den(1, 4), size(1, 5);
  int samples = 0;
  for (int i = 0; i < 120; ++i) {
    const std::size_t n = 2 * static_cast<std::size_t>(size(rng));
    Matrix m(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        m(a, b) = Rational(num(rng), den(rng));
        m(b, a) = -m(a, b);
      }
    const Rational pf = pfaffian(SkewMatrix(m));
    t.check(pf * pf == determinant(m), "Pf^2 != det for a " + std::to_string(n) + "x" + std::to_string(n) + " sample");
    ++samples;
  }
  t.check(samples >= 100, "fewer than 100 Pfaffian samples");

  std::uniform_int_distribution<long> nonzero(1, 9), sign(0, 1), width(1, 4);
  const auto draw = [&] { return Rational(nonzero(rng) * (sign(rng) ? 1 : -1), nonzero(rng)); };
  for (int i = 0; i < 60; ++i) {
    const auto k = static_cast<std::size_t>(width(rng));
    std::vector<Rational> c(k), d(k);
    for (std::size_t j = 0; j < k; ++j) {
      c[j] = draw();
      d[j] = draw();
    }
    t.check(alpha_diagonal(c, d) == alpha_pfaffian(diagonal_model(c, d)), "alpha models disagree (n=" +
                                                                              std::to_string(k) + ")");
  }
}

void criterion8(Tally& t) {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      t.check(defect(build_root_system(Family::gl, {m, n, 1})) == std::min(m, n),
              "defect gl(" + std::to_string(m) + "|" + std::to_string(n) + ")");
  const std::vector<std::pair<std::string, RootSystem>> ones{
      {"osp(3|2)", build_root_system(Family::osp, {3, 1, 1})},
      {"osp(2|2)", build_root_system(Family::osp, {2, 1, 1})},
      {"D(2,1;1/2)", build_root_system(Family::d21a, {0, 0, Rational(1, 2)})},
      {"D(2,1;3)", build_root_system(Family::d21a, {0, 0, Rational(3)})},
      {"D(2,1;-2/5)", build_root_system(Family::d21a, {0, 0, Rational(-2, 5)})},
      {"g(3)", build_root_system(Family::g3, {})},
      {"f(4)", build_root_system(Family::f4, {})},
  };
  for (const auto& [name, sys] : ones) t.check(defect(sys) == 1, "defect " + name);
}

void criterion9(Tally& t) {
  std::vector<std::pair<RestrictedPair, std::vector<Rational>>> pairs;
  for (int n = 1; n <= 6; ++n)
    for (int m = 0; m < n; ++m) pairs.push_back({osp_pair(m, n), {Rational(n - m - 1)}});
  pairs.push_back({g12_pair(), {1, 1}});
  pairs.push_back({f31_pair(), {1, 2, 3}});
  for (const auto& [pair, expected] : pairs) {
    validate(pair);
    t.check(rho_coefficients(pair).coeffs == expected, "rho coefficients of " + pair.name);
    const auto grid = dominant_grid(pair);
    long nonzero = 0;
    for (const auto& lambda : grid) {
      if (lambda.is_zero()) continue;
      ++nonzero;
      t.check(is_dominant(pair, lambda) && casimir_eigenvalue(pair, lambda).sign() > 0,
              "nonpositive eigenvalue for " + pair.name + "");
    }
    t.check(nonzero >= 100, "grid too small for " + pair.name);
  }
}

void criterion10(Tally& t) {
  for (unsigned l = 0; l <= 100; ++l) t.check(d21a_in_a_star(l) == (l <= 1), "weight test at l=" + std::to_string(l));
}

void criterion11(Tally& t) {
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n) {
      const SubgroupChain c = minimal_chain(GroupFactor::gl(m, n));
      const std::string name = GroupFactor::gl(m, n).str();
      t.check(validate_chain(c).empty(), name + ": " + validate_chain(c));
      for (const auto& step : c.steps)
        if (step.rule == SplitRule::LeviGL) t.check(step.evidence.value == 0, name + ": Levi step with sdim != 0");
      for (int r = 0; r <= m; ++r)
        for (int s = 0; s <= n; ++s)
          t.check(is_splitting_levi_gl(r, s, m, n).splitting == !volume({r, s, m, n}).is_zero(),
                  "GL predicate vs volume at " + spec_str(r, s, m, n));
    }
  for (int n = 1; n <= 10; ++n) {
    const SubgroupChain c = minimal_chain(GroupFactor::q(n));
    const std::string name = GroupFactor::q(n).str();
    t.check(validate_chain(c).empty(), name + ": " + validate_chain(c));
    for (const auto& step : c.steps) t.check(step.evidence.value % 2 == 0, name + ": odd parity evidence");
    for (int r = 0; r <= n; ++r)
      t.check(is_splitting_levi_q(r, n).splitting == (c_closed(r, n) != 0), "Q predicate vs C at " + rn(r, n));
  }
}

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "C-table: brute force equals closed form, n <= 12", criterion1);
  all &= report(2, "C recursions: closed form n <= 20, brute force n <= 12", criterion2);
  all &= report(3, "Volume nonvanishing iff sdim >= 0, m,n <= 6", criterion3);
  all &= report(4, "Equal-rank and one-zero volumes, n,m <= 8", criterion4);
  all &= report(5, "Cross-formula consistency, m,n <= 6 and a <= b <= c <= 8", criterion5);
  all &= report(6, "GL localization equals binom(n,r) with alpha = 1, n <= 10", criterion6);
  all &= report(7, "Pfaffian: Pf^2 = det and diagonal alpha = Pfaffian alpha", criterion7);
  all &= report(8, "Defects: gl(m|n) = min(m,n) and defect-one algebras", criterion8);
  all &= report(9, "Casimir positivity and rho coefficients", criterion9);
  all &= report(10, "D(2,1;alpha) weight test, l <= 100", criterion10);
  all &= report(11, "Splitting chains and predicate agreement", criterion11);
  return all ? 0 : 1;
}
