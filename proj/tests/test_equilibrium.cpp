#include <doctest.h>

#include "bundlecon/equilibrium.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bundlecon;

namespace {

Economy randomEconomy(std::mt19937_64& rng, std::size_t goods, std::int64_t m, std::size_t agents) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < goods; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  GoodSpace s(names, m);
  Economy e;
  e.space = s;
  for (std::size_t j = 0; j < agents; ++j)
    e.agents.push_back({std::to_string(j + 1), testing::randomTable(rng, s, 5), testing::randomBundle(rng, s), {}, {}, {}});
  return e;
}

}  // namespace

TEST_CASE("three-cycle economy: welfare 3, fractional 9/2") {
  auto e = scenarios::threeCycle();
  auto w = welfareOptimum(e);
  CHECK(w.value == 3);
  CHECK(w.count == 9);  // one of three pairs, the third good to any of three agents
  CHECK(oracles::bruteWelfare(e) == 3);
  CHECK(oracles::configurationLP(e) == Rational(9, 2));
  auto l = lyapunovMinimum(e);
  CHECK(l.value == Rational(9, 2));
  CHECK(oracles::lyapunovAt(e, l.price) == l.value);
  auto r = findEquilibrium(e);
  CHECK_FALSE(r.exists);
}

TEST_CASE("welfare serial and parallel agree with brute force") {
  std::mt19937_64 rng(81);
  for (int t = 0; t < 60; ++t) {
    auto e = randomEconomy(rng, 2 + t % 2, 1 + t % 2, 2 + t % 3);
    auto ser = welfareOptimum(e, Execution::Serial);
    auto par = welfareOptimum(e, Execution::Parallel);
    CHECK(ser.value == par.value);
    CHECK(ser.count == par.count);
    CHECK(ser.maximizers == par.maximizers);
    CHECK(oracles::bruteWelfare(e) == ser.value);
    for (const auto& a : ser.maximizers) {
      Rational total = 0;
      IntVector sum(e.space.size(), 0);
      for (std::size_t j = 0; j < a.size(); ++j) {
        total += e.agents[j].valuation.value(a[j]);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += a[j][i];
      }
      CHECK(total == ser.value);
      CHECK(sum == e.totalSupply());
    }
  }
}

TEST_CASE("Lyapunov minimum equals the configuration LP and bounds welfare") {
  std::mt19937_64 rng(82);
  for (int t = 0; t < 60; ++t) {
    auto e = randomEconomy(rng, 2 + t % 2, 1, 2 + t % 2);
    auto l = lyapunovMinimum(e);
    CHECK(oracles::lyapunovAt(e, l.price) == l.value);
    CHECK(oracles::configurationLP(e) == l.value);
    // weak duality at random prices
    for (int k = 0; k < 5; ++k) CHECK(oracles::lyapunovAt(e, testing::randomPrice(rng, e.space.size())) >= l.value);
    auto r = findEquilibrium(e);
    CHECK(r.ipValue <= r.lpValue);
    CHECK(r.exists == (r.ipValue == r.lpValue));
    if (r.exists) {
      CHECK(verifyEquilibrium(e, r.price, r.allocation).ok);
      CHECK(oracles::lyapunovAt(e, r.price) == r.ipValue);
    }
  }
}

TEST_CASE("equilibrium verification reports violations") {
  auto e = scenarios::consecutive();
  auto r = findEquilibrium(e);
  REQUIRE(r.exists);
  CHECK(verifyEquilibrium(e, r.price, r.allocation).ok);
  auto wrongPrice = r.price;
  for (auto& q : wrongPrice) q = 0;
  auto check = verifyEquilibrium(e, wrongPrice, r.allocation);
  CHECK_FALSE(check.ok);
  bool notDemanded = false;
  for (const auto& v : check.violations) notDemanded = notDemanded || v.kind == Violation::Kind::NotDemanded;
  CHECK(notDemanded);
  Allocation short_ = r.allocation;
  short_[2] = {0, 0, 0};
  auto c2 = verifyEquilibrium(e, r.price, short_);
  CHECK_FALSE(c2.ok);
  CHECK_FALSE(c2.violations.front().describe(e).empty());
}

TEST_CASE("single good with non-consecutive demand has no equilibrium") {
  auto e = scenarios::nonConsecutiveSingleGood();
  auto r = findEquilibrium(e);
  CHECK_FALSE(r.exists);
  CHECK(r.ipValue == 0);
  CHECK(r.lpValue == Rational(3, 2));
}
