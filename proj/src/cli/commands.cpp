// SPDX-License-Identifier: Apache-2.0
#include "supergr/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "supergr/cli/json_io.hpp"
#include "supergr/cli/verify.hpp"
#include "supergr/errors.hpp"

namespace supergr::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  json result;
  std::string headline;
  std::vector<std::string> identities;
  bool failed = false;
  std::string rows_key;  // sweeps: one json-lines record per element
};

constexpr int kMaxTableN = 60;

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw UsageError(what + ": expected an integer, got '" + text + "'");
  return value;
}

Rational parse_rational(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(what + ": expected a rational p or p/q, got '" + text + "'");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

// ---- verbs ---------------------------------------------------------------

struct SpecArgs {
  int r = 0, s = 0, m = 0, n = 0;
  GrassSpec spec() const {
    GrassSpec g{r, s, m, n};
    try {
      validate(g);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    return g;
  }
};

Outcome do_volume(const SpecArgs& a) {
  const GrassSpec g = a.spec();
  const VolumeExpr v = volume(g);
  Outcome o;
  o.result = {{"spec", encode(g)},     {"dims", encode(dims(g))}, {"sdim", sdim(g)},
              {"volume", encode(v)},   {"rendered", v.str()},     {"nonzero", !v.is_zero()}};
  o.headline = "volume " + g.str() + " = " + v.str();
  o.identities = {"V(r|s,m|n) = (-1)^{s(m+n+r+s)} C(n,s) (2π)^A V(r-s,m-n), A = (m-r)s + (n-s)r",
                  "V(r|s,m|n) = V(s|r,n|m)", "V(r|s,m|n) = 0 when sdim < 0"};
  return o;
}

Outcome do_qvolume(int r, int n) {
  const Integer c = c_closed(r, n);
  const VolumeExpr v = q_volume(r, n);
  Outcome o;
  o.result = {{"r", r},
              {"n", n},
              {"C", integer_json(c)},
              {"volume", encode(v)},
              {"rendered", v.str()},
              {"parity_evidence", static_cast<long>(r) * (n - r)},
              {"nonzero", c != 0}};
  o.headline = "volume QGr(" + std::to_string(r) + "," + std::to_string(n) + ") = " + v.str() + " (C = " + c.get_str() + ")";
  o.identities = {"vol QGr(r,n) = C(r,n) (2π)^{2r(n-r)}", "C(r,n) != 0 iff r(n-r) is even"};
  return o;
}

Outcome do_sdim(const SpecArgs& a) {
  const GrassSpec g = a.spec();
  Outcome o;
  o.result = {{"spec", encode(g)}, {"sdim", sdim(g)}};
  o.headline = "sdim " + g.str() + " = " + std::to_string(sdim(g));
  o.identities = {"sdim Gr = (r-s)((m-r)-(n-s))"};
  return o;
}

Outcome do_dims(const SpecArgs& a) {
  const GrassSpec g = a.spec();
  const SuperDim d = dims(g);
  Outcome o;
  o.result = {{"spec", encode(g)}, {"even", d.even}, {"odd", d.odd}};
  o.headline = "dim " + g.str() + " = " + d.str();
  o.identities = {"dim Gr = (r(m-r)+s(n-s) | r(n-s)+s(m-r))"};
  return o;
}

Outcome do_defect(const std::string& family_text, const std::vector<std::string>& params) {
  Family family;
  try {
    family = parse_family(family_text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  auto need = [&](std::size_t count, const std::string& shape) {
    if (params.size() != count) throw UsageError("defect " + family_name(family) + " expects " + shape);
  };
  FamilyParams p;
  switch (family) {
    case Family::gl:
    case Family::sl:
      need(2, "m n");
      p.m = parse_int(params[0], "m");
      p.n = parse_int(params[1], "n");
      break;
    case Family::osp: {
      need(2, "M 2n (as in osp(M|2n))");
      p.m = parse_int(params[0], "M");
      const int two_n = parse_int(params[1], "2n");
      if (two_n % 2 != 0) throw UsageError("osp(M|2n) needs an even second parameter");
      p.n = two_n / 2;
      break;
    }
    case Family::d21a:
      need(1, "alpha");
      p.alpha = parse_rational(params[0], "alpha");
      break;
    case Family::g3:
    case Family::f4: need(0, "no parameters"); break;
    case Family::q:
      need(1, "n");
      p.n = parse_int(params[0], "n");
      break;
  }
  const RootSystem sys = build_root_system(family, p);
  const int d = defect(sys);
  const int closed = defect_closed_form(sys);
  json roots = json::array();
  for (const auto& r : defect_subgroup_roots(sys)) roots.push_back(sys.format(r.vector));
  Outcome o;
  o.result = {{"algebra", sys.name()},
              {"rank", sys.rank()},
              {"root_count", sys.roots().size()},
              {"isotropic_root_count", isotropic_roots(sys).size()},
              {"defect", d},
              {"closed_form", closed},
              {"agrees", d == closed},
              {"defect_subgroup_roots", roots}};
  o.headline = "defect " + sys.name() + " = " + std::to_string(d);
  o.identities = {"defect = max number of mutually orthogonal, linearly independent isotropic roots"};
  o.failed = d != closed;
  return o;
}

Outcome do_ctable(int max_n, bool brute, int samples, std::uint64_t seed) {
  if (max_n < 0 || max_n > kMaxTableN) throw UsageError("--max-n must lie in [0, " + std::to_string(kMaxTableN) + "]");
  if (samples < 1) throw UsageError("--samples must be positive");
  Outcome o;
  json rows = json::array();
  bool all_agree = true;
  for (int n = 0; n <= max_n; ++n) {
    json values = json::array();
    for (int r = 0; r <= n; ++r) values.push_back(integer_json(c_closed(r, n)));
    json row = {{"n", n}, {"values", values}};
    if (brute && n <= kMaxBruteForceN) {
      const auto params = seeded_param_vectors(n, samples, seed + n);
      bool agree = true;
      for (int r = 0; r <= n; ++r)
        agree = agree && c_bruteforce(r, n, params).consensus == Rational(c_closed(r, n));
      row["brute_force_agrees"] = agree;
      all_agree = all_agree && agree;
    }
    rows.push_back(row);
  }
  o.result = {{"max_n", max_n}, {"brute_force", brute}, {"seed", seed}, {"rows", rows}};
  if (brute) o.result["all_agree"] = all_agree;
  o.headline = "C(r,n) for 0 <= r <= n <= " + std::to_string(max_n);
  o.identities = {"C(r,n) = sum over |S| = r of prod_{i in S, j not in S} (a_i+a_j)/(a_i-a_j)",
                  "C(r,n) = binom(m,l) for (n,r) = (2m,2l), (2m+1,2l), (2m+1,2l+1); 0 for (2m,2l+1)"};
  o.failed = !all_agree;
  o.rows_key = "rows";
  return o;
}

std::vector<ParamVector> localize_samples(int n, int samples, const std::optional<std::string>& params,
                                          std::uint64_t seed) {
  if (params) {
    std::vector<Rational> values;
    for (const auto& t : split_list(*params)) values.push_back(parse_rational(t, "--params"));
    if (values.size() != static_cast<std::size_t>(n))
      throw UsageError("--params needs exactly n = " + std::to_string(n) + " values");
    return {ParamVector(std::move(values))};
  }
  if (samples < 1) throw UsageError("--samples must be positive");
  if (n < 0) throw DomainError("n must be nonnegative");
  return seeded_param_vectors(n, samples, seed);
}

Outcome do_localize(int r, int n, const std::string& mode, int samples, const std::optional<std::string>& params,
                    std::uint64_t seed) {
  const auto vectors = localize_samples(n, samples, params, seed);
  Outcome o;
  if (mode == "q") {
    const auto report = c_bruteforce(r, n, vectors);
    const Integer closed = c_closed(r, n);
    o.result = encode(report);
    o.result["closed"] = integer_json(closed);
    o.result["matches_closed"] = report.consensus == Rational(closed);
    o.failed = !o.result["matches_closed"].get<bool>();
    o.headline = "C(" + std::to_string(r) + "," + std::to_string(n) + ") = " + report.consensus.str() + " over " +
                 std::to_string(vectors.size()) + " parameter vector(s)";
    o.identities = {"alpha(S) = prod_{i in S, j not in S} (a_i+a_j)/(a_i-a_j)", "C(r,n) = sum_{|S|=r} alpha(S)"};
    return o;
  }
  json rows = json::array();
  const Rational expected(binomial(n < 0 ? 0 : n, r < 0 ? 0 : r));
  bool agrees = true;
  for (const auto& a : vectors) {
    const auto rep = gl_localization_report(r, n, a);
    agrees = agrees && rep.alpha_identically_one && rep.sum == expected;
    rows.push_back({{"params", encode(a)},
                    {"fixed_points", integer_json(rep.fixed_points)},
                    {"alpha_identically_one", rep.alpha_identically_one},
                    {"sum", encode(rep.sum)}});
  }
  o.result = {{"r", r}, {"n", n}, {"samples", rows}, {"expected", encode(expected)}, {"agrees", agrees}};
  o.failed = !agrees;
  o.headline = "GL localization on Gr(" + std::to_string(r) + "|" + std::to_string(r) + "," + std::to_string(n) +
               "|" + std::to_string(n) + ") = " + expected.str();
  o.identities = {"alpha at each fixed point = prod (a_i+a_j)/(a_i-a_j) * (a_i-a_j)/(a_i+a_j) = 1",
                  "number of fixed points = binom(n,r)"};
  return o;
}

Outcome do_splitting(const std::string& family, const std::vector<int>& nums) {
  Outcome o;
  if (family == "gl" || family == "GL") {
    if (nums.size() != 4) throw UsageError("splitting gl expects r s m n");
    const GrassSpec g = SpecArgs{nums[0], nums[1], nums[2], nums[3]}.spec();
    const Verdict v = is_splitting_levi_gl(g.r, g.s, g.m, g.n);
    const VolumeExpr vol = volume(g);
    const GroupDesc sub(std::vector<GroupFactor>{GroupFactor::gl(g.r, g.s), GroupFactor::gl(g.m - g.r, g.n - g.s)});
    o.result = {{"group", GroupDesc(GroupFactor::gl(g.m, g.n)).str()},
                {"subgroup", sub.str()},
                {"splitting", v.splitting},
                {"sdim", v.evidence},
                {"volume", encode(vol)},
                {"volume_nonzero", !vol.is_zero()},
                {"agrees", v.splitting == !vol.is_zero()}};
    o.headline = sub.str() + " ⊂ GL(" + std::to_string(g.m) + "|" + std::to_string(g.n) + ") is " +
                 (v.splitting ? "" : "not ") + "splitting (sdim = " + std::to_string(v.evidence) + ")";
    o.identities = {"GL(r|s)×GL(m-r|n-s) is splitting in GL(m|n) iff sdim Gr(r|s,m|n) >= 0"};
    o.failed = !o.result["agrees"].get<bool>();
    return o;
  }
  if (family == "q" || family == "Q") {
    if (nums.size() != 2) throw UsageError("splitting q expects r n");
    const int r = nums[0], n = nums[1];
    const Verdict v = is_splitting_levi_q(r, n);
    const Integer c = c_closed(r, n);
    const GroupDesc sub(std::vector<GroupFactor>{GroupFactor::q(r), GroupFactor::q(n - r)});
    o.result = {{"group", GroupDesc(GroupFactor::q(n)).str()},
                {"subgroup", sub.str()},
                {"splitting", v.splitting},
                {"parity_evidence", v.evidence},
                {"C", integer_json(c)},
                {"agrees", v.splitting == (c != 0)}};
    o.headline = sub.str() + " ⊂ Q(" + std::to_string(n) + ") is " + (v.splitting ? "" : "not ") +
                 "splitting (r(n-r) = " + std::to_string(v.evidence) + ")";
    o.identities = {"Q(r)×Q(n-r) is splitting in Q(n) iff r(n-r) is even"};
    o.failed = !o.result["agrees"].get<bool>();
    return o;
  }
  throw UsageError("splitting expects 'gl r s m n' or 'q r n'");
}

GroupDesc group_from_tokens(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw UsageError("chain expects a group, e.g. 'GL 3 2', 'Q 5' or 'GL(3|2)'");
  try {
    if (tokens.size() == 1) return parse_group(tokens[0]);
    std::string kind = tokens[0];
    std::transform(kind.begin(), kind.end(), kind.begin(), ::toupper);
    if (kind == "GL" && tokens.size() == 3)
      return GroupFactor::gl(parse_int(tokens[1], "m"), parse_int(tokens[2], "n"));
    if (kind == "Q" && tokens.size() == 2) return GroupFactor::q(parse_int(tokens[1], "n"));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("chain expects 'GL m n', 'Q n' or a group such as 'GL(3|2)'");
}

Outcome do_chain(const std::vector<std::string>& tokens) {
  const GroupDesc g = group_from_tokens(tokens);
  const SubgroupChain chain = minimal_chain(g);
  Outcome o;
  o.result = encode(chain);
  std::string path = chain.top.str();
  for (const auto& s : chain.steps) path += " ⊃ " + s.sub.str();
  o.headline = path + " (" + std::to_string(chain.steps.size()) + " steps, " +
               (o.result["valid"].get<bool>() ? "valid" : "INVALID") + ")";
  o.identities = {"LEVI_GL: GL(r|s)×GL(m-r|n-s) splits in GL(m|n) iff sdim Gr(r|s,m|n) >= 0",
                  "LEVI_Q: Q(r)×Q(n-r) splits in Q(n) iff r(n-r) is even",
                  "FACTOR_SPLIT: K1×K2 splits in G1×G2 when each Ki splits in Gi; a purely even reductive factor splits "
                  "off",
                  "ODD_PARTS_EQUAL: K splits in G when Lie(K)_1 = Lie(G)_1",
                  "splitting subgroups compose along chains"};
  o.failed = !o.result["valid"].get<bool>();
  return o;
}

RestrictedPair pair_by_name(const std::string& name, int m, int n) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), ::tolower);
  if (s == "osp") return osp_pair(m, n);
  if (s == "g12" || s == "g(1|2)") return g12_pair();
  if (s == "f31" || s == "f(3|1)") return f31_pair();
  throw UsageError("unknown pair '" + name + "' (expected osp, g12, f31)");
}

Outcome do_casimir(const std::string& name, const std::vector<std::string>& coords, int m, int n,
                   const std::string& basis) {
  const RestrictedPair pair = pair_by_name(name, m, n);
  const RhoDecomposition rho = rho_coefficients(pair);
  json simple = json::array();
  for (const auto& a : pair.simple_roots) simple.push_back(encode(a));
  json rho_c = json::array();
  for (const auto& c : rho.coeffs) rho_c.push_back(encode(c));
  Outcome o;
  o.result = {{"pair", pair.name},          {"simple_roots", simple},
              {"rho", encode(pair.rho)},    {"rho_coefficients", rho_c},
              {"rho_nonnegative", rho.nonnegative}};
  o.identities = {"Casimir eigenvalue on weight λ = (λ+2ρ, λ)", "ρ = Σ c_i α_i with c_i >= 0"};

  if (coords.empty()) {
    const auto grid = dominant_grid(pair);
    std::optional<Rational> lowest;
    bool all_positive = true;
    for (const auto& lambda : grid) {
      const Rational e = casimir_eigenvalue(pair, lambda);
      if (!lowest || e < *lowest) lowest = e;
      all_positive = all_positive && e.sign() > 0;
    }
    o.result["grid_points"] = grid.size();
    o.result["min_eigenvalue"] = lowest ? encode(*lowest) : json(nullptr);
    o.result["all_positive"] = all_positive;
    o.failed = !all_positive;
    o.headline = pair.name + ": (λ+2ρ,λ) " + (all_positive ? "> 0" : "NOT > 0") + " on " +
                 std::to_string(grid.size()) + " nonzero dominant grid weights";
    return o;
  }

  std::vector<Rational> c;
  for (const auto& t : coords) c.push_back(parse_rational(t, "λ coordinate"));
  WeightVector lambda;
  if (basis == "ambient") {
    lambda.coords = c;
    if (lambda.size() != pair.dimension())
      throw UsageError("λ needs " + std::to_string(pair.dimension()) + " ambient coordinates");
  } else {
    if (c.size() != pair.rank()) throw UsageError("λ needs " + std::to_string(pair.rank()) + " coefficients");
    if (basis == "simple") {
      lambda = combine_simple_roots(pair, c);
    } else {
      const auto w = fundamental_weights(pair);
      lambda.coords.assign(pair.dimension(), Rational(0));
      for (std::size_t i = 0; i < c.size(); ++i) lambda = lambda + c[i] * w[i];
    }
  }
  const bool dominant = is_dominant(pair, lambda);
  const Rational e = casimir_eigenvalue(pair, lambda);
  o.result["lambda"] = encode(lambda);
  o.result["dominant"] = dominant;
  o.result["eigenvalue"] = encode(e);
  if (dominant) o.result["positive"] = positivity_check(pair, lambda);
  o.headline = pair.name + ": (λ+2ρ,λ) = " + e.str() + (dominant ? "" : " (λ not dominant)");
  return o;
}

Outcome do_verify(const VerifyOptions& options, const std::string& suite) {
  std::vector<SuiteResult> suites;
  if (suite.empty()) suites = run_all_suites(options);
  else suites.push_back(run_suite(suite, options));
  json list = json::array();
  long passed = 0, failed = 0;
  for (const auto& s : suites) {
    list.push_back({{"suite", s.name}, {"passed", s.passed}, {"failed", s.failed}, {"failures", s.failures}});
    passed += s.passed;
    failed += s.failed;
  }
  Outcome o;
  o.result = {{"seed", options.seed}, {"max_n", options.max_n}, {"max_n_c", options.max_n_c},
              {"suites", list},       {"passed", passed},       {"failed", failed},
              {"ok", failed == 0}};
  o.headline = "verify: " + std::to_string(passed) + " passed, " + std::to_string(failed) + " failed";
  o.failed = failed != 0;
  o.rows_key = "suites";
  return o;
}

// ---- rendering -----------------------------------------------------------

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void flatten(const json& j, const std::string& key, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, key.empty() ? k : key + "." + k, out);
    return;
  }
  if (j.is_array()) {
    const bool scalars = std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
    if (scalars) {
      out << key << ": [";
      for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << scalar_text(j[i]);
      out << "]\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], key + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << key << ": " << scalar_text(j) << '\n';
}

void render(const std::string& format, const std::string& verb, const std::vector<std::string>& args,
            const Outcome& o, std::ostream& out) {
  const json envelope = {{"command", {{"verb", verb}, {"args", args}}},
                         {"result", o.result},
                         {"identities", o.identities}};
  if (format == "json") {
    out << envelope.dump(2) << '\n';
  } else if (format == "jsonl") {
    if (o.rows_key.empty()) {
      out << envelope.dump() << '\n';
    } else {
      for (const auto& row : o.result.at(o.rows_key)) out << json{{"verb", verb}, {"record", row}}.dump() << '\n';
    }
  } else {
    out << o.headline << '\n';
    flatten(o.result, "", out);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact volumes, localization sums and splitting subgroups for Lie supergroups", "supergr"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  app.add_option("--format", format, "Output format: text, json, or jsonl (one record per line for sweeps)")
      ->check(CLI::IsMember({"text", "json", "jsonl"}));
  app.add_option("--seed", seed, "Seed for random parameter vectors")->capture_default_str();

  auto add_spec = [](CLI::App* cmd, SpecArgs& a) {
    cmd->add_option("r", a.r, "even rank of the subspace")->required();
    cmd->add_option("s", a.s, "odd rank of the subspace")->required();
    cmd->add_option("m", a.m, "even dimension of the ambient space")->required();
    cmd->add_option("n", a.n, "odd dimension of the ambient space")->required();
  };

  SpecArgs spec;
  auto* volume_cmd = app.add_subcommand("volume", "Invariant volume of Gr(r|s,m|n)");
  add_spec(volume_cmd, spec);
  auto* sdim_cmd = app.add_subcommand("sdim", "Superdimension of Gr(r|s,m|n)");
  add_spec(sdim_cmd, spec);
  auto* dims_cmd = app.add_subcommand("dims", "Dimension (even|odd) of Gr(r|s,m|n)");
  add_spec(dims_cmd, spec);

  int qr = 0, qn = 0;
  auto* qvolume_cmd = app.add_subcommand("qvolume", "Volume of the Q-grassmannian QGr(r,n)");
  qvolume_cmd->add_option("r", qr)->required();
  qvolume_cmd->add_option("n", qn)->required();

  std::string family;
  std::vector<std::string> family_params;
  auto* defect_cmd = app.add_subcommand("defect", "Defect of gl, sl, osp (M 2n), d21a (alpha), g3, f4");
  defect_cmd->add_option("family", family)->required();
  defect_cmd->add_option("params", family_params, "family parameters");

  int table_max_n = 12, table_samples = 3;
  bool table_brute = false;
  auto* ctable_cmd = app.add_subcommand("c-table", "Table of C(r,n)");
  ctable_cmd->add_option("--max-n", table_max_n, "largest n")->capture_default_str();
  ctable_cmd->add_flag("--brute", table_brute, "also check against brute-force sums (n <= 14)");
  ctable_cmd->add_option("--samples", table_samples, "parameter vectors per n")->capture_default_str();

  int lr = 0, ln = 0, l_samples = 3;
  std::string l_mode = "q";
  std::optional<std::string> l_params;
  auto* localize_cmd = app.add_subcommand("localize", "Localization sum C(r,n) (q) or the GL equal-rank count (gl)");
  localize_cmd->add_option("r", lr)->required();
  localize_cmd->add_option("n", ln)->required();
  localize_cmd->add_option("--mode", l_mode)->check(CLI::IsMember({"q", "gl"}))->capture_default_str();
  localize_cmd->add_option("--samples", l_samples)->capture_default_str();
  localize_cmd->add_option("--params", l_params, "comma-separated a_1,...,a_n");

  std::string split_family;
  std::vector<int> split_nums;
  auto* splitting_cmd = app.add_subcommand("splitting", "Levi splitting predicate: 'gl r s m n' or 'q r n'");
  splitting_cmd->add_option("family", split_family)->required();
  splitting_cmd->add_option("params", split_nums)->required();

  std::vector<std::string> chain_tokens;
  auto* chain_cmd = app.add_subcommand("chain", "Certified chain of splitting subgroups for GL(m|n) or Q(n)");
  chain_cmd->add_option("group", chain_tokens, "'GL m n', 'Q n' or 'GL(3|2)'")->required();

  std::string pair_name;
  std::vector<std::string> lambda_coords;
  int pm = 1, pn = 3;
  std::string basis = "ambient";
  auto* casimir_cmd = app.add_subcommand("casimir", "Casimir eigenvalue (λ+2ρ,λ) for osp, g12, f31");
  casimir_cmd->add_option("pair", pair_name)->required();
  casimir_cmd->add_option("lambda", lambda_coords, "coordinates of λ; omit for a dominant grid sweep");
  casimir_cmd->add_option("--m", pm, "osp pair m")->capture_default_str();
  casimir_cmd->add_option("--n", pn, "osp pair n")->capture_default_str();
  casimir_cmd->add_option("--basis", basis)
      ->check(CLI::IsMember({"ambient", "simple", "fundamental"}))
      ->capture_default_str();

  VerifyOptions verify_options;
  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "Run the identity suites");
  verify_cmd->add_option("--max-n", verify_options.max_n, "bound for Grassmannian sweeps")->capture_default_str();
  verify_cmd->add_option("--max-n-c", verify_options.max_n_c, "bound for C(r,n) brute force")->capture_default_str();
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));

  CLI::App* active = &app;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    active = app.get_subcommands().front();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto parsed = app.get_subcommands();
    err << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitUsageError;
  }

  const std::string verb = active->get_name();
  // Echo the verb's arguments without the verb itself or the output format.
  std::vector<std::string> echoed;
  bool verb_seen = false;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format") {
      ++i;
      continue;
    }
    if (args[i].rfind("--format=", 0) == 0) continue;
    if (!verb_seen && args[i] == verb) {
      verb_seen = true;
      continue;
    }
    echoed.push_back(args[i]);
  }
  try {
    Outcome o;
    if (verb == "volume") o = do_volume(spec);
    else if (verb == "qvolume") o = do_qvolume(qr, qn);
    else if (verb == "sdim") o = do_sdim(spec);
    else if (verb == "dims") o = do_dims(spec);
    else if (verb == "defect") o = do_defect(family, family_params);
    else if (verb == "c-table") o = do_ctable(table_max_n, table_brute, table_samples, seed);
    else if (verb == "localize") o = do_localize(lr, ln, l_mode, l_samples, l_params, seed);
    else if (verb == "splitting") o = do_splitting(split_family, split_nums);
    else if (verb == "chain") o = do_chain(chain_tokens);
    else if (verb == "casimir") o = do_casimir(pair_name, lambda_coords, pm, pn, basis);
    else if (verb == "verify") {
      if (verify_options.max_n < 0 || verify_options.max_n_c < 0 || verify_options.max_n_c > kMaxBruteForceN)
        throw UsageError("--max-n must be >= 0 and --max-n-c must lie in [0, " + std::to_string(kMaxBruteForceN) + "]");
      verify_options.seed = seed;
      o = do_verify(verify_options, suite);
    }
    render(format, verb, echoed, o, out);
    return o.failed ? kExitDomainError : kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    if (format != "text") {
      const json envelope = {{"command", {{"verb", verb}, {"args", echoed}}}, {"error", e.what()}};
      out << (format == "json" ? envelope.dump(2) : envelope.dump()) << '\n';
    }
    return kExitDomainError;
  }
}

}  // namespace supergr::cli
