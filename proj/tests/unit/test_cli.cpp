// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <sstream>

#include "supergr/cli/commands.hpp"
#include "supergr/cli/json_io.hpp"

using namespace supergr;
using namespace supergr::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Run r = run_cli(args);
  REQUIRE(r.code == kExitOk);
  return json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes") {
  CHECK(run_cli({"volume", "1", "1", "2", "2"}).code == kExitOk);
  CHECK(run_cli({"volume", "1", "1", "2"}).code == kExitUsageError);
  CHECK(run_cli({"volume", "3", "0", "2", "2"}).code == kExitUsageError);
  CHECK(run_cli({"frobnicate"}).code == kExitUsageError);
  CHECK(run_cli({}).code == kExitUsageError);
  CHECK(run_cli({"defect", "q", "3"}).code == kExitDomainError);
  CHECK(run_cli({"casimir", "osp", "--m", "3", "--n", "2"}).code == kExitDomainError);
}

TEST_CASE("domain errors produce a JSON error envelope") {
  const Run r = run_cli({"defect", "q", "3", "--format", "json"});
  CHECK(r.code == kExitDomainError);
  const json j = json::parse(r.out);
  CHECK(j.contains("error"));
}

TEST_CASE("volume output") {
  const json j = run_json({"volume", "1", "1", "2", "2"});
  CHECK(j["command"]["verb"] == "volume");
  CHECK(j["command"]["args"] == json::array({"1", "1", "2", "2"}));
  const json v = j["result"]["volume"];
  CHECK(v["coeff"] == "2");
  CHECK(v["two_pi_power"] == 2);
  CHECK(v["atoms"].empty());
  CHECK(decode_volume(v) == volume({1, 1, 2, 2}));
  CHECK(j["identities"].is_array());

  const Run text = run_cli({"volume", "1", "1", "2", "2"});
  CHECK(text.out.find("2·(2π)^2") != std::string::npos);
}

TEST_CASE("text and JSON agree on numbers") {
  const json j = run_json({"sdim", "2", "0", "3", "4"});
  CHECK(j["result"]["sdim"] == -6);
  CHECK(run_cli({"sdim", "2", "0", "3", "4"}).out.find("-6") != std::string::npos);
  const json d = run_json({"dims", "1", "1", "2", "2"});
  CHECK(d["result"]["even"] == 2);
  CHECK(d["result"]["odd"] == 2);
}

TEST_CASE("qvolume and c-table") {
  CHECK(run_json({"qvolume", "1", "2"})["result"]["C"] == 0);
  CHECK(run_json({"qvolume", "2", "5"})["result"]["C"] == 2);
  const Run rows = run_cli({"c-table", "--max-n", "4", "--format", "jsonl"});
  REQUIRE(rows.code == kExitOk);
  std::istringstream lines(rows.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const json rec = json::parse(line);
    CHECK(rec["verb"] == "c-table");
    ++count;
  }
  CHECK(count == 5);
}

TEST_CASE("chain output round trips") {
  const json j = run_json({"chain", "GL", "3", "2"});
  const json c = j["result"];
  CHECK(c["step_count"] == 4);
  CHECK(c["valid"] == true);
  const SubgroupChain decoded = decode_chain(c);
  CHECK(is_valid(decoded));
  CHECK(encode(decoded) == c);
}

TEST_CASE("encoders round trip") {
  for (const Rational& q : {Rational(0), Rational(-7, 3), Rational(12)}) CHECK(decode_rational(encode(q)) == q);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (int r = 0; r <= m; ++r)
        for (int s = 0; s <= n; ++s) {
          const GrassSpec g{r, s, m, n};
          CHECK(decode_grass_spec(encode(g)) == g);
          CHECK(decode_volume(encode(volume(g))) == volume(g));
          CHECK(decode_superdim(encode(dims(g))) == dims(g));
        }
  const WeightVector w{{Rational(1, 2), Rational(-3)}};
  CHECK(decode_weight(encode(w)) == w);
  const ParamVector p(std::vector<Rational>{1, Rational(-5, 2), 4});
  CHECK(decode_params(encode(p)).values() == p.values());
  for (int n = 1; n <= 9; ++n) {
    const SubgroupChain c = minimal_chain(GroupFactor::q(n));
    CHECK(encode(decode_chain(encode(c))) == encode(c));
  }
  CHECK_THROWS(decode_rational(json("1/0")));
  CHECK_THROWS(decode_rule("NOPE"));
}

TEST_CASE("verify is deterministic and clean") {
  const Run a = run_cli({"verify", "--max-n", "4", "--max-n-c", "8", "--format", "json"});
  const Run b = run_cli({"verify", "--max-n", "4", "--max-n-c", "8", "--format", "json"});
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  CHECK(j["result"]["failed"] == 0);
  CHECK(j["result"]["ok"] == true);
}

}  // TEST_SUITE
