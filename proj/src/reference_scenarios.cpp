#include "bundlecon/reference_scenarios.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "bundlecon/consistency.hpp"
#include "bundlecon/demand.hpp"
#include "bundlecon/equilibrium.hpp"
#include "bundlecon/scenarios.hpp"

namespace bundlecon {

namespace {

using Vectors = std::vector<RationalVector>;

std::string render(const Vectors& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + toString(vs[i]);
  return s + "}";
}

std::string render(const std::vector<IntVector>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + toString(vs[i]);
  return s + "}";
}

RationalVector prices(std::initializer_list<const char*> texts) {
  RationalVector p;
  for (auto t : texts) p.push_back(parseRational(t));
  return p;
}

// Each expected singleton is compared by set equality with the computed set.
struct BundledCase {
  std::string label;
  std::size_t agent;
  RationalVector bundlePrices;
  RationalVector expected;
};

ScenarioOutcome bundledDemands(const std::string& name, const Economy& e, const Bundling& b,
                               const std::vector<BundledCase>& cases) {
  ScenarioOutcome out{name, true, "", ""};
  for (const auto& c : cases) {
    auto got = bundledDemand(e.agents[c.agent].valuation, b, c.bundlePrices);
    const Vectors want{c.expected};
    out.expected += c.label + "=" + render(want) + " ";
    out.actual += c.label + "=" + render(got) + " ";
    if (got != want) out.passed = false;
  }
  return out;
}

std::vector<Allocation> unitSplits(std::size_t goods, std::size_t agents) {
  std::vector<Allocation> out;
  std::vector<std::size_t> owner(goods, 0);
  while (true) {
    Allocation a(agents, IntVector(goods, 0));
    for (std::size_t i = 0; i < goods; ++i) a[owner[i]][i] = 1;
    out.push_back(std::move(a));
    std::size_t i = 0;
    while (i < goods && ++owner[i] == agents) owner[i++] = 0;
    if (i == goods) break;
  }
  return out;
}

bool hasNegativeComponent(const std::vector<IntVector>& vs) {
  return std::any_of(vs.begin(), vs.end(),
                     [](const IntVector& v) { return std::any_of(v.begin(), v.end(), [](auto c) { return c < 0; }); });
}

std::set<IntVector> normalizedSet(const std::vector<IntVector>& vs) {
  std::set<IntVector> s;
  for (const auto& v : vs) s.insert(primitiveNormalized(v));
  return s;
}

}  // namespace

std::vector<ScenarioOutcome> runReferenceScenarios() {
  std::vector<ScenarioOutcome> out;
  const auto nonneg = PriceDomain::Nonnegative;

  // Three-cycle economy
  const Economy cycle = scenarios::threeCycle();
  const Bundling pairBundling({{1, 0, 0}, {1, 1, 0}, {0, 0, 1}});
  const auto p = prices({"1", "2", "3"});
  const auto pp = prices({"1", "2", "1"});
  out.push_back(bundledDemands("three-cycle bundled demand", cycle, pairBundling,
                               {{"D1(p)", 0, p, {0, 1, 0}},
                                {"D2(p)", 1, p, {0, 0, 0}},
                                {"D3(p)", 2, p, {0, 0, 0}},
                                {"D1(p')", 0, pp, {0, 1, 0}},
                                {"D2(p')", 1, pp, {-1, 1, 1}},
                                {"D3(p')", 2, pp, {1, 0, 1}}}));
  {
    auto r = findEquilibrium(cycle);
    out.push_back({"three-cycle nonexistence", !r.exists && r.ipValue == 3 && r.lpValue == Rational(9, 2),
                   "none, ip=3, lp=9/2",
                   std::string(r.exists ? "exists" : "none") + ", ip=" + toString(r.ipValue) +
                       ", lp=" + toString(r.lpValue)});
    auto v = checkBundleConsistencyDirect(cycle.valuations());
    out.push_back({"three-cycle bundle inconsistency", !v.bundleConsistent, "inconsistent",
                   v.bundleConsistent ? "consistent" : "inconsistent under " + render(v.witness->bundling)});
  }

  // Consecutive economy
  const Economy consec = scenarios::consecutive();
  out.push_back(bundledDemands("consecutive bundled demand", consec, pairBundling, {{"D3(p')", 2, pp, {0, 1, 1}}}));
  {
    std::size_t verified = 0, total = 0;
    for (const auto& split : unitSplits(3, 3)) {
      Economy e = consec;
      for (std::size_t j = 0; j < 3; ++j) e.agents[j].endowment = split[j];
      auto r = findEquilibrium(e);
      ++total;
      if (r.exists && verifyEquilibrium(e, r.price, r.allocation).ok) ++verified;
    }
    out.push_back({"consecutive equilibria for all endowments", verified == total && total == 27, "27/27",
                   std::to_string(verified) + "/" + std::to_string(total)});
    auto d = checkBundleConsistencyDirect(consec.valuations(), nonneg);
    auto t = checkBundleConsistencyTU(consec.valuations(), nonneg);
    out.push_back({"consecutive bundle consistency (p >= 0)", d.bundleConsistent && t.bundleConsistent,
                   "direct=true tu=true",
                   std::string("direct=") + (d.bundleConsistent ? "true" : "false") +
                       " tu=" + (t.bundleConsistent ? "true" : "false")});
  }

  // Six-agent, four-good economy
  {
    const Economy e = scenarios::dkl();
    std::set<IntVector> types;
    for (const auto& v : e.valuations())
      for (const auto& d : demandTypeVectors(v, nonneg)) types.insert(d);
    const auto want = normalizedSet(scenarios::dklColumns());
    out.push_back({"dkl demand types (p >= 0)", types == want, render(scenarios::dklColumns()),
                   render(std::vector<IntVector>(types.begin(), types.end()))});
    auto tu = isTotallyUnimodular(scenarios::dklColumns());
    auto d = checkBundleConsistencyDirect(e.valuations(), nonneg);
    auto t = checkBundleConsistencyTU(e.valuations(), nonneg);
    out.push_back({"dkl total unimodularity and consistency (p >= 0)",
                   tu.totallyUnimodular && d.bundleConsistent && t.bundleConsistent, "tu=true direct=true tu-check=true",
                   std::string("tu=") + (tu.totallyUnimodular ? "true" : "false") +
                       " direct=" + (d.bundleConsistent ? "true" : "false") +
                       " tu-check=" + (t.bundleConsistent ? "true" : "false")});
  }

  // Hidden complementarity economy
  {
    const Economy e = scenarios::hiddenComplement();
    const Bundling goodsOnly({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {1, 0, 0, 0, 1}});
    const Bundling withSales({{1, 0, 0, 0, 0}, {-1, 1, 0, 0, 0}, {0, -1, 1, 0, 0}, {0, 0, -1, 1, 0}, {0, 0, 0, 0, 1}});
    const auto q = prices({"1", "1", "1", "1", "4"});
    const auto qq = prices({"1", "1", "1", "1", "1"});
    const auto h = prices({"0.5", "0.5", "0.5", "0.5", "4"});
    const auto hh = prices({"0.5", "0.5", "0.5", "0.5", "1"});
    out.push_back(bundledDemands("hidden-complement bundled demand (goods only)", e, goodsOnly,
                                 {{"D4(p)", 3, q, {0, 0, 0, 1, 0}},
                                  {"D5(p)", 4, q, {0, 0, 0, 0, 0}},
                                  {"D4(p')", 3, qq, {-1, 0, 0, 0, 1}},
                                  {"D5(p')", 4, qq, {0, 0, 0, 0, 1}}}));
    out.push_back(bundledDemands("hidden-complement bundled demand (with sales)", e, withSales,
                                 {{"D4(p)", 3, h, {1, 1, 1, 1, 0}},
                                  {"D5(p)", 4, h, {0, 0, 0, 0, 0}},
                                  {"D4(p')", 3, hh, {0, 0, 0, 0, 1}},
                                  {"D5(p')", 4, hh, {1, 0, 0, 0, 1}}}));
    auto v = checkBundleConsistencyDirect(e.valuations());
    const bool ok = !v.bundleConsistent && v.witness && hasNegativeComponent(v.witness->bundling);
    out.push_back({"hidden-complement inconsistency needs a sale bundle", ok,
                   "inconsistent, witness bundling with a negative component",
                   v.bundleConsistent ? "consistent" : "inconsistent under " + render(v.witness->bundling)});
  }

  // Multiunit max-split valuation
  {
    const Economy e = scenarios::multiunitSplit();
    const Valuation& v = e.agents[0].valuation;
    auto d1 = demandSet(v, prices({"1", "3", "1"}));
    auto d2 = demandSet(v, prices({"1", "1", "1"}));
    const bool demandsOk = d1 == std::vector<IntVector>{{0, 0, 0}} && d2 == std::vector<IntVector>{{1, 2, 1}} &&
                           v.value({1, 2, 1}) == 6;
    out.push_back({"multiunit demand", demandsOk, "D(1,3,1)={(0,0,0)} D(1,1,1)={(1,2,1)} V(1,2,1)=6",
                   "D(1,3,1)=" + render(d1) + " D(1,1,1)=" + render(d2) + " V(1,2,1)=" + toString(v.value({1, 2, 1}))});
    auto effects = priceEffectSet(v, true);
    bool excluded = std::none_of(effects.effects.begin(), effects.effects.end(),
                                 [](const PriceEffect& pe) { return pe.delta == IntVector{1, 2, 1}; });
    out.push_back({"multiunit unit-box effects exclude (1,2,1)", excluded, "excluded",
                   excluded ? "excluded" : "present"});
  }

  // Single good with a non-consecutive demand
  {
    const Economy e = scenarios::nonConsecutiveSingleGood();
    const Valuation& v = e.agents[0].valuation;
    auto unit = isUnitConsistent(v);
    auto q = demandedQuantities(v, {Rational(3, 2)}, 0);
    auto pc = isPseudoconcave(v);
    auto r = findEquilibrium(e);
    const bool ok = !unit.consistent && unit.witness && q.quantities == std::vector<std::int64_t>{0, 2} &&
                    !q.consecutive && !pc.pseudoconcave && pc.missingPoint == IntVector{1} && !r.exists;
    out.push_back({"single-good unit inconsistency", ok,
                   "unit=false D(3/2)={0,2} pseudoconcave=false missing=(1) equilibrium=none",
                   std::string("unit=") + (unit.consistent ? "true" : "false") + " D(3/2)=" +
                       toString(q.quantities) + " pseudoconcave=" +
                       (pc.pseudoconcave ? "true" : "false") +
                       " missing=" + (pc.missingPoint ? toString(*pc.missingPoint) : "-") +
                       " equilibrium=" + (r.exists ? "exists" : "none")});
  }

  // Pairwise synthesizer
  {
    GoodSpace s({"k", "l"}, 1);
    auto syn = synthesizeInconsistencyEconomy(scaledMinValuation(s, 3, {0, 1}),
                                              scaledMinOfSumValuation(s, 3, {0, 1}, 1), 0, 1);
    auto r = findEquilibrium(syn);
    out.push_back({"synthesized economy has no equilibrium", !r.exists, "none",
                   std::string(r.exists ? "exists" : "none") + ", ip=" + toString(r.ipValue) +
                       ", lp=" + toString(r.lpValue)});
  }
  return out;
}

}  // namespace bundlecon
