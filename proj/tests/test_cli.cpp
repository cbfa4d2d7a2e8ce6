#include <doctest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>

#include "bundlecon/cli.hpp"
#include "bundlecon/economy_io.hpp"
#include "bundlecon/equilibrium.hpp"
#include "support.hpp"

using namespace bundlecon;
using nlohmann::json;

namespace {

std::string dataFile(const std::string& name) { return std::string(BUNDLECON_DATA_DIR) + "/" + name; }

std::string tempFile(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("bundlecon_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

json resultOf(const CommandReport& r) { return json::parse(r.json).at("result"); }

const char* kTwoGoods = R"({
  "goods": ["x", "y"],
  "M": 1,
  "agents": [
    {"id": "a", "valuation": {"type": "min", "scale": 3, "goods": ["x", "y"]}, "endowment": {"x": 1}},
    {"id": "b", "valuation": {"type": "linear", "prices": {"x": 1, "y": 2}}, "endowment": {"y": 1}}
  ]
})";

}  // namespace

TEST_CASE("cli: equilibrium nonexistence report on the three-cycle economy") {
  auto r = runCommand({"--format", "json", "equilibrium", dataFile("three-cycle.json")});
  CHECK(r.exitCode == 0);
  CHECK(r.command == "equilibrium");
  auto res = resultOf(r);
  CHECK(res.at("exists") == false);
  CHECK(res.at("welfare") == "3");
  CHECK(res.at("lyapunovMinimum") == "9/2");
  CHECK(res.at("gap") == "3/2");
  auto text = runCommand({"equilibrium", dataFile("three-cycle.json")});
  CHECK(text.output().find("no competitive equilibrium") != std::string::npos);
}

TEST_CASE("cli: demand prints the whole tie set and accepts decimals") {
  auto r = runCommand({"demand", dataFile("three-cycle.json"), "--agent", "1", "--price", "1,2,3"});
  CHECK(r.exitCode == 0);
  CHECK(r.text.find("{(0,0,0), (1,1,0)}") != std::string::npos);
  auto d = runCommand({"--format", "json", "demand", dataFile("three-cycle.json"), "--agent", "1", "--price", "0.5,1,1"});
  CHECK(d.exitCode == 0);
  auto res = resultOf(d);
  CHECK(res.at("price")[0] == "1/2");
  CHECK(res.at("demand") == json::array({json::array({1, 1, 0})}));
  auto bad = runCommand({"demand", dataFile("three-cycle.json"), "--agent", "9", "--price", "1,2,3"});
  CHECK(bad.exitCode == 2);
}

TEST_CASE("cli: tu-check on the nine-column matrix and on relevant bundles") {
  auto r = runCommand({"--format", "json", "tu-check", dataFile("dkl-matrix.json")});
  CHECK(r.exitCode == 0);
  CHECK(resultOf(r).at("totallyUnimodular") == true);
  CHECK(resultOf(r).at("vectors").size() == 9);
  auto cyc = runCommand({"--format", "json", "tu-check", dataFile("three-cycle.json")});
  CHECK(cyc.exitCode == 0);
  CHECK(resultOf(cyc).at("totallyUnimodular") == false);
  CHECK(resultOf(cyc).contains("witness"));
}

TEST_CASE("cli: check-consistency with both methods") {
  auto r = runCommand({"--format", "json", "--prices", "nonnegative", "check-consistency", dataFile("consecutive.json"),
                       "--method", "both"});
  CHECK(r.exitCode == 0);
  auto res = resultOf(r);
  CHECK(res.at("bundleConsistent") == true);
  CHECK(res.at("unitConsistent") == true);
  auto cyc = runCommand({"--format", "json", "check-consistency", dataFile("three-cycle.json")});
  CHECK(resultOf(cyc).at("bundleConsistent") == false);
}

TEST_CASE("cli: malformed and invalid inputs exit with code 2") {
  auto broken = tempFile("broken.json", "{\n  \"goods\": [\"x\",\n}");
  auto p = runCommand({"--format", "json", "equilibrium", broken});
  CHECK(p.exitCode == 2);
  CHECK(resultOf(p).at("error") == "ParseError");
  CHECK(resultOf(p).at("message").get<std::string>().find("line 3") != std::string::npos);

  std::string over = kTwoGoods;
  over.replace(over.find("{\"x\": 1}"), 8, "{\"x\": 2}");
  auto s = runCommand({"--format", "json", "equilibrium", tempFile("over.json", over)});
  CHECK(s.exitCode == 2);
  CHECK(resultOf(s).at("error") == "SchemaError");
  CHECK(resultOf(s).at("message").get<std::string>().find("agents[0].endowment") != std::string::npos);

  std::string fl = kTwoGoods;
  fl.replace(fl.find("\"x\": 1, \"y\": 2"), 14, "\"x\": 1.5, \"y\": 2");
  auto f = runCommand({"equilibrium", tempFile("float.json", fl)});
  CHECK(f.exitCode == 2);
  CHECK(f.text.find("n/d") != std::string::npos);

  CHECK(runCommand({"equilibrium", dataFile("missing.json")}).exitCode == 2);
  CHECK(runCommand({"no-such-command"}).exitCode == 2);
  CHECK(runCommand({}).exitCode == 2);
  CHECK(runCommand({"--help"}).exitCode == 0);
}

TEST_CASE("cli: unknown fields are errors unless lenient") {
  std::string extra = kTwoGoods;
  extra.replace(extra.find("\"M\": 1"), 6, "\"M\": 1, \"colour\": \"red\"");
  auto path = tempFile("extra.json", extra);
  CHECK(runCommand({"equilibrium", path}).exitCode == 2);
  auto r = runCommand({"--lenient", "--format", "json", "equilibrium", path});
  CHECK(r.exitCode == 0);
  CHECK(resultOf(r).contains("notes"));
}

TEST_CASE("cli: utility agents are labelled as a fixed-utility-level analysis") {
  auto r = runCommand({"--format", "json", "equilibrium", dataFile("income-effects.json")});
  CHECK(r.exitCode == 0);
  auto res = resultOf(r);
  CHECK(res.at("analysis") == "fixed-utility-level analysis");
  CHECK(runCommand({"equilibrium", dataFile("income-effects.json")}).text.find("fixed-utility-level analysis") !=
        std::string::npos);
}

TEST_CASE("cli: JSON results round-trip without loss") {
  auto r = runCommand({"--format", "json", "equilibrium", dataFile("consecutive.json")});
  REQUIRE(r.exitCode == 0);
  auto res = resultOf(r);
  REQUIRE(res.at("exists") == true);
  RationalVector price;
  for (const auto& x : res.at("price")) price.push_back(parseRational(x.get<std::string>()));
  auto e = loadEconomy(dataFile("consecutive.json"));
  Allocation alloc;
  for (const auto& agent : e.agents) alloc.push_back(res.at("allocation").at(agent.id).get<IntVector>());
  CHECK(verifyEquilibrium(e, price, alloc).ok);
  CHECK(json::parse(r.json).dump() == json::parse(runCommand({"--format", "json", "equilibrium",
                                                              dataFile("consecutive.json")}).json).dump());
}

TEST_CASE("cli: the inputs digest depends on arguments and file contents") {
  auto path = tempFile("digest.json", kTwoGoods);
  auto a = runCommand({"equilibrium", path});
  auto b = runCommand({"equilibrium", path});
  CHECK(a.inputsDigest == b.inputsDigest);
  CHECK(a.inputsDigest.size() == 16);
  std::string changed = kTwoGoods;
  changed.replace(changed.find("\"scale\": 3"), 10, "\"scale\": 4");
  tempFile("digest.json", changed);
  CHECK(runCommand({"equilibrium", path}).inputsDigest != a.inputsDigest);
  CHECK(runCommand({"--format", "json", "equilibrium", path}).inputsDigest != a.inputsDigest);
}

TEST_CASE("cli: synthesized counterexamples have no equilibrium") {
  auto input = tempFile("pair.json", R"({
  "goods": ["x", "y"],
  "agents": [
    {"id": "c", "valuation": {"type": "min", "scale": 3, "goods": ["x", "y"]}},
    {"id": "s", "valuation": {"type": "min_of_sum", "scale": 3, "goods": ["x", "y"], "cap": 1}}
  ]
})");
  auto out = (std::filesystem::temp_directory_path() / "bundlecon_test_syn.json").string();
  auto r = runCommand({"--format", "json", "synthesize-counterexample", input, "--pair", "c,s", "--goods", "x,y",
                       "--output", out});
  REQUIRE(r.exitCode == 0);
  CHECK(resultOf(r).at("equilibrium").at("exists") == false);
  CHECK_FALSE(findEquilibrium(loadEconomy(out)).exists);
  auto swapped = runCommand({"synthesize-counterexample", input, "--pair", "s,c", "--goods", "x,y"});
  CHECK(swapped.exitCode == 2);
  for (const char* seed : {"1", "7"}) {
    auto s = runCommand({"--format", "json", "synthesize-counterexample", "--seed", seed});
    REQUIRE(s.exitCode == 0);
    CHECK(resultOf(s).at("equilibrium").at("exists") == false);
  }
}

TEST_CASE("cli: bundled demand and price effects") {
  auto r = runCommand({"--format", "json", "bundled-demand", dataFile("three-cycle.json"), "--price", "1,2,1",
                       "--bundling", "1,0,0;1,1,0;0,0,1", "--agent", "2"});
  CHECK(r.exitCode == 0);
  CHECK(resultOf(r).at("goodsPrices") == json::array({"1", "1", "1"}));
  auto e = runCommand({"--format", "json", "price-effects", dataFile("multiunit-split.json"), "--unit-box"});
  CHECK(e.exitCode == 0);
  for (const auto& a : resultOf(e).at("agents"))
    for (const auto& pe : a.at("effects"))
      for (const auto& x : pe.at("delta")) CHECK(std::abs(x.get<int>()) <= 1);
}
