#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "mobius/cli.hpp"
#include "mobius/errors.hpp"
#include "mobius/io.hpp"

using namespace mobius;
using namespace mobius::cli;

namespace {

std::string data(const std::string& name) { return std::string(MOBIUS_DATA_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_args") {
  auto cfg = parse_args({"cohomology", "m.json", "--at", "a"});
  CHECK(cfg.command == Command::cohomology);
  CHECK(cfg.at == std::optional<std::string>{"a"});
  CHECK(cfg.inputs == std::vector<std::string>{"m.json"});

  CHECK_THROWS_AS(parse_args({"cohomology", "m.json", "--at", "a", "--spread", "a,b"}), UsageError);

  auto inv = parse_args({"invert", "p.json", "f.json", "--lower"});
  CHECK(inv.command == Command::invert);
  CHECK(inv.lower);
  CHECK_FALSE(parse_args({"invert", "p.json", "f.json"}).lower);

  CHECK_THROWS_AS(parse_args({}), UsageError);
  CHECK_THROWS_AS(parse_args({"frobnicate"}), UsageError);
  CHECK_THROWS_AS(parse_args({"mobius", "p.json", "--format", "xml"}), UsageError);
  CHECK_THROWS_AS(parse_args({"galois-check", "P.json", "Q.json", "--f", "f.json", "--g", "g.json", "--rota",
                              "--rota-inversion", "n.json"}),
                  UsageError);
  CHECK_THROWS_AS(parse_args({"galois-check", "P.json", "Q.json", "--f", "f.json", "--g", "g.json", "--rota-ext", "n.json"}),
                  UsageError);
  auto ext = parse_args({"galois-check", "P.json", "Q.json", "--f", "f.json", "--g", "g.json", "--rota-ext", "n.json", "--at", "b"});
  CHECK(ext.rota_ext == std::optional<std::string>{"n.json"});
  CHECK(parse_args({"--help"}).command == Command::help);
}

TEST_CASE("seed precedence") {
  CHECK(parse_args({"selftest"}).seed == 42);
  CHECK(parse_args({"selftest"}, "7").seed == 7);
  CHECK(parse_args({"selftest", "--seed", "9"}, "7").seed == 9);
  CHECK_THROWS_AS(parse_args({"selftest"}, "seven"), UsageError);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"mobius", data("diamond.json")}).code == kExitPass);
  CHECK(run_cli({"cohomology"}).code == kExitUsage);
  CHECK(run_cli({"mobius", data("cycle.json")}).code == kExitInvalidInput);
  CHECK(run_cli({"mobius", data("missing.json")}).code == kExitInvalidInput);

  auto bad = run_cli({"cohomology", data("module_diamond_noncommuting.json")});
  CHECK(bad.code == kExitInvalidInput);
  CHECK(bad.err.find("'0'") != std::string::npos);
  auto shape = run_cli({"euler-check", data("module_bad_shape.json")});
  CHECK(shape.code == kExitInvalidInput);
  CHECK(shape.err.find("a<b") != std::string::npos);
  CHECK(run_cli({"cohomology", data("module_chain2.json"), "--spread", "a,q"}).code == kExitInvalidInput);

  std::vector<std::string> galois{"galois-check", data("chain3.json"), data("chain2.json"), "--f",
                                  data("map_f_chain3_to_chain2.json"), "--g", data("map_g_chain2_to_chain3.json")};
  auto plain = run_cli(galois);
  CHECK(plain.code == kExitPass);
  // g given with the wrong domain
  auto wrong = galois;
  wrong[6] = data("map_bad.json");
  CHECK(run_cli(wrong).code == kExitInvalidInput);

  auto rota = galois;
  rota.push_back("--rota");
  CHECK(run_cli(rota).code == kExitPass);
  auto rinv = galois;
  rinv.insert(rinv.end(), {"--rota-inversion", data("fn_chain2.json")});
  CHECK(run_cli(rinv).code == kExitPass);
  auto rext = galois;
  rext.insert(rext.end(), {"--rota-ext", data("module_chain2.json"), "--at", "c"});
  CHECK(run_cli(rext).code == kExitPass);
  auto adj = galois;
  adj.insert(adj.end(), {"--adjunctions", data("module_chain3_on_P.json"), data("module_chain2.json")});
  CHECK(run_cli(adj).code == kExitPass);

  CHECK(run_cli({"euler-check", data("module_diamond.json")}).code == kExitPass);
  CHECK(run_cli({"resolution-check", data("module_gf7_chain3.json")}).code == kExitPass);
  CHECK(run_cli({"selftest", "--trials", "0"}).code == kExitPass);
}

TEST_CASE("failing checks exit with 1") {
  // f is monotone but the supplied g is not its right adjoint
  std::vector<std::string> args{"galois-check", data("chain2.json"), data("chain2.json"), "--f",
                                data("map_identity_chain2.json"), "--g", data("map_bottom_chain2.json")};
  auto r = run_cli(args);
  CHECK(r.code == kExitCheckFailed);
}

TEST_CASE("table and json carry the same numbers") {
  auto table = run_cli({"cohomology", data("module_diamond.json")});
  auto json = run_cli({"cohomology", data("module_diamond.json"), "--format", "json"});
  REQUIRE(table.code == 0);
  REQUIRE(json.code == 0);
  auto j = io::Json::parse(json.out);
  std::istringstream lines(table.out);
  std::string header;
  std::getline(lines, header);
  for (const auto& r : j.at("results")) {
    std::string line;
    REQUIRE(std::getline(lines, line));
    std::istringstream fields(line);
    std::string at;
    fields >> at;
    CHECK(at == r.at("at").get<std::string>());
    for (const auto& b : r.at("betti")) {
      long v;
      fields >> v;
      CHECK(v == b.get<long>());
    }
    long euler;
    fields >> euler;
    CHECK(euler == r.at("euler").get<long>());
  }

  auto mt = run_cli({"mobius", data("diamond.json")});
  auto mj = io::Json::parse(run_cli({"mobius", data("diamond.json"), "--format", "json"}).out);
  CHECK(mj.at("mobius").size() == 9);
  for (const auto& e : mj.at("mobius")) CHECK(mt.out.find(std::to_string(e.at("value").get<long>())) != std::string::npos);

  auto inv = io::Json::parse(run_cli({"invert", data("chain3.json"), data("fn_chain3.json"), "--format", "json"}).out);
  CHECK(inv.at("values") == io::Json::parse(R"({"a": 3, "b": -6, "c": 5})"));
  auto low = io::Json::parse(run_cli({"invert", data("chain3.json"), data("fn_chain3.json"), "--lower", "--format", "json"}).out);
  CHECK(low.at("values") == io::Json::parse(R"({"a": 2, "b": -3, "c": 6})"));
}

TEST_CASE("json output is a single document") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"euler-check", data("module_diamond.json"), "--format", "json"},
           {"resolution-check", data("module_diamond.json"), "--format", "json"},
           {"enumerate-galois", data("chain3.json"), data("chain2.json"), "--format", "json"},
           {"selftest", "--trials", "2", "--format", "json"},
       }) {
    auto r = run_cli(args);
    CHECK(r.code == 0);
    CHECK_NOTHROW(io::Json::parse(r.out));
  }
}

TEST_CASE("selftest output is reproducible") {
  auto a = run_cli({"selftest", "--trials", "5", "--seed", "3", "--format", "json"});
  auto b = run_cli({"selftest", "--trials", "5", "--seed", "3", "--format", "json", "--jobs", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = io::Json::parse(a.out);
  CHECK(j.at("status") == "pass");
}

TEST_CASE("enumerate-galois lists connections") {
  auto r = io::Json::parse(run_cli({"enumerate-galois", data("chain2.json"), data("point.json"), "--format", "json"}).out);
  REQUIRE(r.at("connections").size() == 1);
  CHECK(run_cli({"enumerate-galois", data("chain3.json"), data("chain3.json"), "--max-size", "2"}).code == kExitInvalidInput);
}
