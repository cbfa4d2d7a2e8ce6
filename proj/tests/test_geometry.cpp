#include <doctest.h>

#include <set>

#include "bundlecon/geometry.hpp"
#include "support.hpp"

using namespace bundlecon;

TEST_CASE("demand types of simple valuations") {
  GoodSpace s({"a", "b"}, 1);
  // the lifted unit square splits along the diagonal through the higher midpoint
  CHECK(demandTypeVectors(scaledMinValuation(s, 3, {0, 1})) == std::vector<IntVector>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(demandTypeVectors(scaledMinOfSumValuation(s, 3, {0, 1}, 1)) ==
        std::vector<IntVector>{{0, 1}, {1, -1}, {1, 0}});
  CHECK(demandTypeVectors(linearValuation(s, {1, 2})) == std::vector<IntVector>{{0, 1}, {1, 0}});
  CHECK(isOfDemandType(scaledMinValuation(s, 3, {0, 1}), {{1, 1}, {-1, 0}, {0, 2}}));
  CHECK_FALSE(isOfDemandType(scaledMinOfSumValuation(s, 3, {0, 1}, 1), {{1, 1}, {1, 0}, {0, 1}}));
  // the free-disposal edges sit at a zero price, so p >= 0 keeps them
  CHECK(demandTypeVectors(scaledMinValuation(s, 3, {0, 1}), PriceDomain::Nonnegative) ==
        std::vector<IntVector>{{0, 1}, {1, 0}, {1, 1}});
  // three-way complements pick up mixed directions only at some negative price
  GoodSpace s3({"a", "b", "c"}, 1);
  auto all = demandTypeVectors(scaledMinValuation(s3, 3, {0, 1, 2}));
  auto nonneg = demandTypeVectors(scaledMinValuation(s3, 3, {0, 1, 2}), PriceDomain::Nonnegative);
  CHECK(std::binary_search(all.begin(), all.end(), IntVector{1, 0, 1}));
  CHECK_FALSE(std::binary_search(nonneg.begin(), nonneg.end(), IntVector{1, 0, 1}));
  CHECK(std::binary_search(nonneg.begin(), nonneg.end(), IntVector{1, 1, 1}));
}

TEST_CASE("price-effect witnesses re-verify") {
  std::mt19937_64 rng(61);
  std::vector<Valuation> vals = testing::libraryValuations();
  for (int t = 0; t < 40; ++t) vals.push_back(testing::randomTable(rng, GoodSpace({"a", "b", "c"}, 1 + t % 2), 5));
  for (const auto& v : vals) {
    auto cells = demandCells(v);
    auto all = priceEffectSet(v, cells, false);
    for (const auto& e : all.effects) {
      CHECK(verifyPriceEffect(v, e));
      CHECK(demandSet(v, e.price) == std::vector<IntVector>{e.before});
      auto after = demandSet(v, e.newPrice);
      CHECK(std::binary_search(after.begin(), after.end(), e.after));
      CHECK(e.newPrice[e.good] < e.price[e.good]);
    }
    // the unit-box report is the subset of effects inside {-1,0,1}^I
    auto unit = priceEffectSet(v, cells, true);
    for (const auto& e : unit.effects)
      for (auto c : e.delta) CHECK(std::abs(c) <= 1);
    // every effect runs along a demand-type direction
    auto types = demandTypeVectors(cells);
    for (const auto& e : all.effects)
      CHECK(std::binary_search(types.begin(), types.end(), primitiveNormalized(e.delta)));
    auto bad = all.effects.empty() ? PriceEffect{} : all.effects.front();
    if (!all.effects.empty()) {
      bad.newPrice[bad.good] = bad.price[bad.good];
      CHECK_FALSE(verifyPriceEffect(v, bad));
    }
  }
}

TEST_CASE("pseudoconcavity") {
  auto single = scenarios::nonConsecutiveSingleGood().agents[0].valuation;
  auto pc = isPseudoconcave(single);
  CHECK_FALSE(pc.pseudoconcave);
  REQUIRE(pc.missingPoint);
  CHECK(*pc.missingPoint == IntVector{1});
  REQUIRE(pc.price);
  auto d = demandSet(single, *pc.price);
  CHECK(d == std::vector<IntVector>{{0}, {2}});
  for (const auto& v : testing::libraryValuations())
    if (v.numGoods() > 1) CHECK(isPseudoconcave(v).pseudoconcave);
}

TEST_CASE("nonnegative price domain keeps only cells realized at p >= 0") {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 30; ++t) {
    auto v = testing::randomTable(rng, GoodSpace({"a", "b"}, 1 + t % 2), 5);
    auto all = demandCells(v, PriceDomain::Unrestricted);
    auto nonneg = demandCells(v, PriceDomain::Nonnegative);
    std::set<std::vector<IntVector>> allSets;
    for (const auto& c : all) allSets.insert(c.bundles);
    for (const auto& c : nonneg) {
      CHECK(allSets.count(c.bundles) == 1);
      for (const auto& q : c.supportingPrice) CHECK(q >= 0);
      CHECK(demandSet(v, c.supportingPrice) == c.bundles);
    }
    // the demand set at any nonnegative price is a kept cell
    std::set<std::vector<IntVector>> kept;
    for (const auto& c : nonneg) kept.insert(c.bundles);
    for (int k = 0; k < 20; ++k) CHECK(kept.count(demandSet(v, testing::randomPrice(rng, 2, 0, 5, 2))) == 1);
  }
}

TEST_CASE("geometry report bundles the pieces") {
  auto v = scenarios::threeCycle().agents[0].valuation;
  auto g = analyzeGeometry(v);
  CHECK(g.demandType == demandTypeVectors(v));
  CHECK(g.pseudoconcavity.pseudoconcave);
  CHECK(effectDirections(g.unitEffects) == std::vector<IntVector>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}});
}
