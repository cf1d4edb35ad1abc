#include <cstdio>
#include <fstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "nsag/groebner.hpp"
#include "nsag/infinidim.hpp"
#include "nsag/shadow.hpp"
#include "nsag/starmod.hpp"

using namespace nsag;
using nsag::cli::run_command;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  Json json;
  std::string text;
};

Run run(std::vector<std::string> args) {
  const auto r = run_command(args);
  return {r.exit_code, Json::parse(r.output), r.output};
}

std::vector<StdPoly> Ss(const char* text) {
  std::vector<StdPoly> out;
  for (const auto& p : parse_poly_list(text)) out.push_back(*as_standard(p));
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("envelope") {
  const Run r = run({"st", "3+2*eps"});
  CHECK(r.code == 0);
  CHECK(r.text ==
        R"({"config":{"truncation":"16","order":"grevlex","seed":0,"power_bound":6},"ok":true,"result":"3"})");
  const Run m = run({"member", "--ideal", "z1", "--poly", "z1*z2"});
  CHECK(m.code == 0);
  CHECK(m.json["ok"] == true);
  CHECK(m.json["result"] == true);
  const Run bad = run({"frobnicate"});
  CHECK(bad.code == 2);
  CHECK(bad.json["ok"] == false);
  CHECK(bad.json["error"]["code"] == "usage");
  CHECK(bad.json["error"].contains("message"));
}

TEST_CASE("config flags are echoed") {
  const Run r = run({"--trunc", "5/2", "--order", "lex", "--seed", "9", "--power-bound", "3", "st", "1"});
  CHECK(r.json["config"]["truncation"] == "5/2");
  CHECK(r.json["config"]["order"] == "lex");
  CHECK(r.json["config"]["seed"] == 9);
  CHECK(r.json["config"]["power_bound"] == 3);
  const Json keys = r.json["config"];
  std::vector<std::string> order;
  for (const auto& [k, v] : keys.items()) order.push_back(k);
  CHECK(order == std::vector<std::string>{"truncation", "order", "seed", "power_bound"});
  CHECK(run({"--trunc", "-1", "st", "1"}).code == 2);
  CHECK(run({"--trunc", "x", "st", "1"}).code == 2);
  CHECK(run({"--trunc", "1/0", "st", "1"}).code == 2);
  CHECK(run({"--order", "plex", "st", "1"}).code == 2);
}

TEST_CASE("config file with flag overrides") {
  const std::string path = "nsag_test_config.cfg";
  {
    std::ofstream out(path);
    out << "trunc=4\norder=lex\n# comment\npower-bound=2\n";
  }
  const Run r = run({"--config", path, "st", "1"});
  CHECK(r.json["config"]["truncation"] == "4");
  CHECK(r.json["config"]["order"] == "lex");
  CHECK(r.json["config"]["power_bound"] == 2);
  const Run o = run({"--config", path, "--order", "grevlex", "st", "1"});
  CHECK(o.json["config"]["order"] == "grevlex");
  std::remove(path.c_str());
  CHECK(run({"--config", "no_such_file.cfg", "st", "1"}).code == 2);
}

TEST_CASE("exit codes") {
  const Run domain = run({"st", "eps^(-1)"});
  CHECK(domain.code == 1);
  CHECK(domain.json["error"]["code"] == "unlimited_value");
  const Run parse = run({"st", "3 +"});
  CHECK(parse.code == 2);
  CHECK(parse.json["error"]["code"] == "parse_error");
  CHECK(run({"groebner"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"st", "1", "2"}).code == 2);
  CHECK(run_command({"--help"}).exit_code == 0);
  CHECK(run({"lift", "--poly", "z1*z2", "--at", "0"}).json["error"]["code"] == "invalid_argument");
  CHECK(run({"kernel-check", "--matrix", "{}"}).json["error"]["code"] == "parse_error");
  CHECK(run({"kernel-check", "--matrix", "[[\"eps*z1\"]]"}).code == 1);
}

TEST_CASE("results match library calls") {
  CHECK(run({"classify", "eps^(1/2)"}).json["result"] ==
        Json::parse(R"({"valuation":"1/2","class":"infinitesimal"})"));
  CHECK(run({"shadow-poly", "z1 + eps*z2"}).json["result"] == format_poly(poly_shadow(parse_poly("z1 + eps*z2"))));
  CHECK(run({"normalize", "eps*z1 + eps^2*z2"}).json["result"] ==
        format_poly(max_abs_normalize(parse_poly("eps*z1 + eps^2*z2"))));

  const auto red = reduce_on_variety(parse_poly("z1 + eps*z2"), VarietyPresentation({z(1), z(2)}, Ss("z1")));
  const Json rv = run({"reduce-on-variety", "--poly", "z1 + eps*z2", "--ideal", "z1", "--vars", "z1, z2"}).json["result"];
  CHECK(rv["all_of_x"] == red.all_of_x);
  CHECK(rv["g"] == format_poly(red.g));
  CHECK(rv["iterations"] == red.iterations);
  CHECK(rv["same_ideal"] == red.same_ideal);

  const auto lift = newton_puiseux_lift(parse_poly("z1^2 - (1+eps)"), GaussianRational(1), TruncationOrder(Rational(6)));
  const Json lj = run({"--trunc", "6", "lift", "--poly", "z1^2 - (1+eps)", "--at", "1"}).json["result"];
  CHECK(lj["point"]["z1"] == to_string(*lift.find(z(1))));

  const auto xi = open_shadow_witness(parse_poly("z1*z2"), parse_point("z1=0, z2=0"), 4);
  const Json ow = run({"--seed", "4", "open-witness", "--poly", "z1*z2", "--at", "z1=0, z2=0"}).json["result"];
  CHECK(ow["point"]["z1"] == to_string(*xi.find(z(1))));
  CHECK(ow["point"]["z2"] == to_string(*xi.find(z(2))));
  CHECK(ow["in_halo"] == true);

  const auto closure = verify_shadow_closure({parse_number("1+eps"), parse_number("eps^(-1)")}, TruncationOrder());
  const Json cj = run({"verify-closure", "--roots", "1+eps, eps^(-1)"}).json["result"];
  CHECK(cj["pass"] == closure.pass);
  CHECK(cj["instance"]["polynomial"] == format_poly(closure.f));
  CHECK(cj["lhs"] == Json::array({"1"}));
  std::vector<std::string> top;
  for (const auto& [k, v] : cj.items()) top.push_back(k);
  CHECK(top == std::vector<std::string>{"instance", "lhs", "rhs", "witnesses", "pass"});

  const auto basis = buchberger(Ss("z1^2 - z2, z1*z2 - 1"), MonomialOrder::lex());
  const Json gj = run({"--order", "lex", "groebner", "--gens", "z1^2 - z2, z1*z2 - 1"}).json["result"];
  REQUIRE(gj["basis"].size() == basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) CHECK(gj["basis"][i] == format_poly(basis[i]));
  CHECK(gj["domain"] == "standard");
  CHECK(run({"groebner", "--gens", "eps*z1"}).json["result"]["domain"] == "extended");

  CHECK(run({"radical-member", "--ideal", "z1^2, z2^2", "--poly", "z1 + z2"}).json["result"] == true);
  CHECK(run({"member", "--ideal", "z1^2, z2^2", "--poly", "z1 + z2"}).json["result"] == false);
  CHECK(run({"member", "--ideal", "eps*z1", "--poly", "z1"}).json["result"] == true);

  const auto contracted = contraction(StdIdeal(Ss("z1 - z3, z2 - z3^2")), 2).basis();
  const Json kj = run({"contract", "--ideal", "z1 - z3, z2 - z3^2", "--n", "2"}).json["result"];
  REQUIRE(kj["generators"].size() == contracted.size());
  for (std::size_t i = 0; i < contracted.size(); ++i) CHECK(kj["generators"][i] == format_poly(contracted[i]));

  const auto syz = syzygy_basis(Ss("z1, z2, z1 + z2"));
  const Json sj = run({"syzygy", "--gens", "z1, z2, z1 + z2"}).json["result"];
  REQUIRE(sj["generators"].size() == syz.generators.size());
  for (std::size_t i = 0; i < syz.generators.size(); ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(sj["generators"][i][j] == format_poly(syz.generators[i][j]));
  }

  CHECK(run({"point-ideal", "--ideal", "z1 - 1, z2 - i"}).json["result"]["point"] ==
        Json::parse(R"({"z1":"1","z2":"i"})"));
  CHECK(run({"point-ideal", "--ideal", "z1^2"}).json["result"]["point"].is_null());

  const Json dw = run({"domain-witness", "--denominators", "z1, z1 - 1"}).json["result"];
  CHECK(dw["point"] == Json::parse(R"({"z1":"2"})"));
  CHECK(dw["certificate"] == true);
  CHECK(run({"domain-witness", "--denominators", "z1, z1 - 1", "--count", "1"}).json["result"]["values"].size() == 1);

  const FamilyReport fam = family_checks(FamilySpec{{1, 2, 3}, false}, 5);
  const Json fj = run({"--power-bound", "5", "family-check", "--params", "1, 2, 3"}).json["result"];
  CHECK(fj["pass"] == fam.pass);
  CHECK(fj["powers"].size() == 5);
  CHECK(fj["common_zero"]["z2"] == "-1");
  CHECK(fj["common_zero"]["z4"] == "-1/3");
  CHECK(fj["variables"]["base"] == "z1");
  CHECK(run({"family-build", "--params", "1, 2", "--extra"}).json["result"]["generators"][2] == "z1*z4 - 1");

  CHECK(run({"flat-witness", "--equation", "z1, z2", "--solution", "eps*z2, -eps*z1"}).json["result"]["r"] ==
        Json::array({"eps"}));
  CHECK(run({"kernel-check", "--matrix", R"([["z1","z2"]])"}).json["result"]["standard_kernel"] ==
        Json::parse(R"([["z2","-z1"]])"));
  CHECK(run({"exact-check", "--a", R"([["z1^2"]])", "--b", R"([["0"]])"}).json["result"]["standard_exact"] == false);
  CHECK(run({"tensor-check", "--matrix", R"([["z1","z2"]])"}).json["result"]["pass"] == true);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::string> args{"verify-closure", "--roots", "eps, 2 + eps^(1/2), eps^(-2)"};
  CHECK(run_command(args).output == run_command(args).output);
}

TEST_CASE("corpus") {
  const Run r = run({"corpus", "--file", NSAG_CORPUS_PATH, "--threads", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.json["result"]["all_match"] == true);
  CHECK(r.json["result"]["fixtures"].size() == r.json["result"]["count"]);
  const Run one = run({"corpus", "--file", NSAG_CORPUS_PATH, "--threads", "1"});
  CHECK(one.text == r.text);
  CHECK(run({"corpus", "--file", "missing.json"}).code == 1);
  CHECK(run({"corpus", "--threads", "0"}).code == 2);
  const std::string nested = "nsag_nested_corpus.json";
  {
    std::ofstream out(nested);
    out << R"({"fixtures":[{"name":"loop","args":["corpus"]}]})";
  }
  CHECK(run({"corpus", "--file", nested}).code == 2);
  std::remove(nested.c_str());
}

}
