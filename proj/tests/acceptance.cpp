// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "bundlecon/consistency.hpp"
#include "bundlecon/demand.hpp"
#include "bundlecon/equilibrium.hpp"
#include "bundlecon/geometry.hpp"
#include "bundlecon/polyhedra.hpp"
#include "bundlecon/reference_scenarios.hpp"
#include "bundlecon/scenarios.hpp"
#include "oracles.hpp"

using namespace bundlecon;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

const std::vector<ScenarioOutcome>& scenarioTable() {
  static const auto table = runReferenceScenarios();
  return table;
}

Outcome scenario(const std::string& name) {
  for (const auto& s : scenarioTable())
    if (s.name == name) return {s.passed, s.passed ? s.actual : "expected " + s.expected + "; got " + s.actual};
  return {false, "scenario '" + name + "' missing"};
}

Outcome allOf(std::initializer_list<Outcome> parts) {
  Outcome out{true, ""};
  for (const auto& p : parts) {
    out.passed = out.passed && p.passed;
    out.detail += (out.detail.empty() ? "" : " | ") + p.detail;
  }
  return out;
}

Valuation randomTable(std::mt19937_64& rng, const GoodSpace& s, int maxValue) {
  std::uniform_int_distribution<int> value(0, maxValue);
  std::map<IntVector, Rational> t;
  for (const auto& x : s.box()) t.emplace(x, Rational(value(rng)));
  return tableValuation(s, std::move(t));
}

IntVector randomBundle(std::mt19937_64& rng, const GoodSpace& s) {
  std::uniform_int_distribution<std::int64_t> u(0, s.maxUnits);
  IntVector x(s.size());
  for (auto& c : x) c = u(rng);
  return x;
}

std::vector<std::string> goodNames(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

// Shared by criteria 7 and 8.
struct RandomEconomy {
  std::vector<Valuation> agents;
  bool consistent = false;
};

std::vector<RandomEconomy>& randomEconomies() {
  static std::vector<RandomEconomy> list;
  return list;
}

Outcome nonexistenceWithOracles() {
  const Economy e = scenarios::threeCycle();
  auto r = findEquilibrium(e);
  auto brute = oracles::bruteWelfare(e);
  auto lp = oracles::configurationLP(e);
  const bool ok = !r.exists && r.ipValue == 3 && r.lpValue == Rational(9, 2) && brute && *brute == 3 &&
                  lp == Rational(9, 2) && oracles::lyapunovAt(e, lyapunovMinimum(e).price) == lp;
  std::ostringstream d;
  d << (r.exists ? "exists" : "none") << ", ip=" << toString(r.ipValue) << ", lp=" << toString(r.lpValue)
    << ", gap=" << toString(r.lpValue - r.ipValue) << "; oracle ip=" << (brute ? toString(*brute) : "-")
    << ", oracle lp=" << toString(lp);
  return {ok, d.str()};
}

Outcome directVersusTu() {
  std::mt19937_64 rng(20240607);
  auto& list = randomEconomies();
  list.clear();
  std::size_t disagreements = 0, consistent = 0;
  for (int t = 0; t < 200; ++t) {
    GoodSpace s(goodNames(2 + t % 2), 1);
    RandomEconomy re{{randomTable(rng, s, 4), randomTable(rng, s, 4)}, false};
    auto d = checkBundleConsistencyDirect(re.agents);
    auto u = checkBundleConsistencyTU(re.agents);
    if (d.bundleConsistent != u.bundleConsistent) ++disagreements;
    re.consistent = d.bundleConsistent && u.bundleConsistent;
    consistent += re.consistent;
    list.push_back(std::move(re));
  }
  return {disagreements == 0, "200 economies, " + std::to_string(consistent) + " consistent, " +
                                  std::to_string(disagreements) + " disagreements"};
}

Outcome consistentEconomiesHaveEquilibria() {
  std::mt19937_64 rng(777);
  std::size_t economies = 0, runs = 0, verified = 0;
  for (const auto& re : randomEconomies()) {
    if (!re.consistent) continue;
    ++economies;
    const GoodSpace& s = re.agents.front().space();
    for (int k = 0; k < 10; ++k) {
      Economy e;
      e.space = s;
      for (std::size_t j = 0; j < re.agents.size(); ++j)
        e.agents.push_back({std::to_string(j + 1), re.agents[j], randomBundle(rng, s), {}, {}, {}});
      auto r = findEquilibrium(e);
      ++runs;
      if (r.exists && verifyEquilibrium(e, r.price, r.allocation).ok) ++verified;
    }
  }
  return {economies > 0 && verified == runs, std::to_string(economies) + " consistent economies, " +
                                                 std::to_string(verified) + "/" + std::to_string(runs) +
                                                 " verified equilibria"};
}

Outcome classificationVersusFiniteDifferences() {
  std::mt19937_64 rng(4242);
  std::size_t mismatches = 0;
  for (int t = 0; t < 100; ++t) {
    GoodSpace s({"a", "b"}, 1 + t % 2);
    auto v = randomTable(rng, s, 4);
    auto kind = classifyGoodPair(std::vector<Valuation>{v}, 0, 1).kind;
    auto signs = oracles::finiteDifferenceSigns(v);
    const bool comp = kind == PairKind::Complementary || kind == PairKind::Inconsistent;
    const bool subs = kind == PairKind::Substitutable || kind == PairKind::Inconsistent;
    if (comp != signs.complement || subs != signs.substitute) ++mismatches;
  }
  return {mismatches == 0, "100 valuations, " + std::to_string(mismatches) + " mismatches"};
}

Outcome cellsAndWitnesses() {
  std::size_t cells = 0, badCells = 0, effects = 0, badEffects = 0;
  for (const auto& e : {scenarios::threeCycle(), scenarios::consecutive(), scenarios::dkl(),
                        scenarios::hiddenComplement(), scenarios::multiunitSplit(),
                        scenarios::nonConsecutiveSingleGood()}) {
    for (const auto& a : e.agents) {
      const Valuation& v = a.valuation;
      for (const auto& c : faceLattice(v.lifted())) {
        std::vector<IntVector> members;
        for (auto i : c.members) members.push_back(v.domain()[i]);
        ++cells;
        if (demandSet(v, c.supportingPrice) != members) ++badCells;
      }
      for (const auto& pe : priceEffectSet(v, false).effects) {
        ++effects;
        auto before = demandSet(v, pe.price);
        auto after = demandSet(v, pe.newPrice);
        IntVector diff(pe.after.size());
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = pe.after[i] - pe.before[i];
        const bool ok = before == std::vector<IntVector>{pe.before} &&
                        std::binary_search(after.begin(), after.end(), pe.after) && diff == pe.delta &&
                        pe.newPrice[pe.good] < pe.price[pe.good];
        if (!ok) ++badEffects;
      }
    }
  }
  return {badCells == 0 && badEffects == 0 && cells > 0 && effects > 0,
          std::to_string(cells) + " cells (" + std::to_string(badCells) + " bad), " + std::to_string(effects) +
              " witnesses (" + std::to_string(badEffects) + " bad)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"three-cycle bundled demand", [] { return scenario("three-cycle bundled demand"); }},
      {"three-cycle nonexistence with oracle cross-check", nonexistenceWithOracles},
      {"consecutive bundled demand and equilibria for all 27 splits",
       [] {
         return allOf({scenario("consecutive bundled demand"),
                       scenario("consecutive equilibria for all endowments")});
       }},
      {"six-agent demand types, total unimodularity, both checkers",
       [] {
         return allOf({scenario("dkl demand types (p >= 0)"),
                       scenario("dkl total unimodularity and consistency (p >= 0)")});
       }},
      {"multiunit demand and unit-box exclusion",
       [] { return allOf({scenario("multiunit demand"), scenario("multiunit unit-box effects exclude (1,2,1)")}); }},
      {"hidden-complement bundled demand and sale-bundle witness",
       [] {
         return allOf({scenario("hidden-complement bundled demand (goods only)"),
                       scenario("hidden-complement bundled demand (with sales)"),
                       scenario("hidden-complement inconsistency needs a sale bundle")});
       }},
      {"direct and TU verdicts agree on 200 random economies", directVersusTu},
      {"consistent random economies have verified equilibria", consistentEconomiesHaveEquilibria},
      {"synthesized pair economy has no equilibrium",
       [] { return scenario("synthesized economy has no equilibrium"); }},
      {"sign-product classification matches finite differences", classificationVersusFiniteDifferences},
      {"cells equal demand sets and witnesses re-verify", cellsAndWitnesses},
      {"single-good unit-consistency diagnostics", [] { return scenario("single-good unit inconsistency"); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60) {
      o.passed = false;
      o.detail += " (over the 60 s budget)";
    }
    all = all && o.passed;
    std::printf("%s criterion %zu: %s [%.1fs] %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                secs, o.detail.c_str());
  }
  return all ? 0 : 1;
}
