// SPDX-License-Identifier: Apache-2.0
#include "supergr/cli/json_io.hpp"

#include "supergr/errors.hpp"

namespace supergr::cli {

json encode(const Rational& q) { return q.str(); }

Rational decode_rational(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw DomainError("expected a rational string, got " + j.dump());
}

json encode(const VolumeExpr& v) {
  json atoms = json::array();
  for (const auto& [atom, e] : v.atoms()) atoms.push_back({{"a", atom.a}, {"b", atom.b}, {"exp", e}});
  return {{"coeff", encode(v.coeff())}, {"two_pi_power", v.two_pi_power()}, {"atoms", atoms}};
}

VolumeExpr decode_volume(const json& j) {
  VolumeExpr::AtomMap atoms;
  for (const auto& a : j.at("atoms")) atoms[Atom{a.at("a").get<int>(), a.at("b").get<int>()}] += a.at("exp").get<long>();
  return VolumeExpr(decode_rational(j.at("coeff")), j.at("two_pi_power").get<long>(), atoms);
}

json encode(const SuperDim& d) { return {{"even", d.even}, {"odd", d.odd}}; }

SuperDim decode_superdim(const json& j) { return {j.at("even").get<long>(), j.at("odd").get<long>()}; }

json encode(const GrassSpec& g) { return {{"r", g.r}, {"s", g.s}, {"m", g.m}, {"n", g.n}}; }

GrassSpec decode_grass_spec(const json& j) {
  return {j.at("r").get<int>(), j.at("s").get<int>(), j.at("m").get<int>(), j.at("n").get<int>()};
}

json encode(const WeightVector& w) {
  json out = json::array();
  for (const auto& c : w.coords) out.push_back(encode(c));
  return out;
}

WeightVector decode_weight(const json& j) {
  WeightVector w;
  for (const auto& c : j) w.coords.push_back(decode_rational(c));
  return w;
}

json encode(const ParamVector& a) {
  json out = json::array();
  for (const auto& c : a.values()) out.push_back(encode(c));
  return out;
}

ParamVector decode_params(const json& j) { return ParamVector(decode_weight(j).coords); }

json encode(const LocalizationReport& report) {
  json samples = json::array();
  for (const auto& [a, sum] : report.samples) samples.push_back({{"params", encode(a)}, {"sum", encode(sum)}});
  return {{"r", report.r},
          {"n", report.n},
          {"samples", samples},
          {"consensus", encode(report.consensus)},
          {"agrees", report.agrees}};
}

LocalizationReport decode_localization(const json& j) {
  LocalizationReport out{j.at("r").get<int>(), j.at("n").get<int>(), {}, decode_rational(j.at("consensus")),
                         j.at("agrees").get<bool>()};
  for (const auto& s : j.at("samples"))
    out.samples.emplace_back(decode_params(s.at("params")), decode_rational(s.at("sum")));
  return out;
}

SplitRule decode_rule(const std::string& name) {
  for (SplitRule r : {SplitRule::LeviGL, SplitRule::LeviQ, SplitRule::OddPartsEqual, SplitRule::FactorSplit})
    if (rule_name(r) == name) return r;
  throw DomainError("unknown splitting rule '" + name + "'");
}

json encode(const ChainStep& step) {
  return {{"sup", step.sup.str()},
          {"sub", step.sub.str()},
          {"rule", rule_name(step.rule)},
          {"factor", step.factor},
          {"evidence", {{"inputs", step.evidence.inputs}, {"value", step.evidence.value}}}};
}

namespace {

GroupDesc decode_group(const json& j) {
  const auto s = j.get<std::string>();
  return s == "1" ? GroupDesc() : parse_group(s);
}

}  // namespace

ChainStep decode_step(const json& j) {
  return {decode_group(j.at("sub")),
          decode_group(j.at("sup")),
          decode_rule(j.at("rule").get<std::string>()),
          j.at("factor").get<std::size_t>(),
          {j.at("evidence").at("inputs").get<std::vector<long>>(), j.at("evidence").at("value").get<long>()}};
}

json encode(const SubgroupChain& chain) {
  json steps = json::array();
  for (const auto& s : chain.steps) steps.push_back(encode(s));
  const std::string failure = validate_chain(chain);
  json out = {{"top", chain.top.str()},
              {"bottom", chain.bottom().str()},
              {"steps", steps},
              {"step_count", chain.steps.size()},
              {"group_count", chain.group_count()},
              {"valid", failure.empty()}};
  if (!failure.empty()) out["failure"] = failure;
  return out;
}

SubgroupChain decode_chain(const json& j) {
  SubgroupChain out{decode_group(j.at("top")), {}};
  for (const auto& s : j.at("steps")) out.steps.push_back(decode_step(s));
  return out;
}

}  // namespace supergr::cli
