#pragma once

// Shared generators and brute-force oracles for the test suite.

#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "bundlecon/preferences.hpp"
#include "bundlecon/scenarios.hpp"

namespace testing {

using namespace bundlecon;

inline Valuation randomTable(std::mt19937_64& rng, const GoodSpace& s, int maxValue) {
  std::uniform_int_distribution<int> value(0, maxValue);
  std::map<IntVector, Rational> t;
  for (const auto& x : s.box()) t.emplace(x, Rational(value(rng)));
  return tableValuation(s, std::move(t));
}

inline RationalVector randomPrice(std::mt19937_64& rng, std::size_t n, int lo = -4, int hi = 8, int den = 4) {
  std::uniform_int_distribution<int> num(lo * den, hi * den);
  RationalVector p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(makeRational(num(rng), den));
  return p;
}

inline IntVector randomBundle(std::mt19937_64& rng, const GoodSpace& s) {
  std::uniform_int_distribution<std::int64_t> u(0, s.maxUnits);
  IntVector x(s.size());
  for (auto& c : x) c = u(rng);
  return x;
}

/// Every valuation the library ships as a scenario agent.
inline std::vector<Valuation> libraryValuations() {
  std::vector<Valuation> out;
  for (const auto& e : {scenarios::threeCycle(), scenarios::consecutive(), scenarios::dkl(),
                        scenarios::hiddenComplement(), scenarios::multiunitSplit(),
                        scenarios::nonConsecutiveSingleGood()})
    for (const auto& a : e.agents) out.push_back(a.valuation);
  return out;
}

/// Every split of the integer vector `supply` into `n` bundles within {0..M}.
inline std::vector<std::vector<IntVector>> allSplits(const IntVector& supply, std::size_t n) {
  std::vector<std::vector<IntVector>> out;
  std::vector<IntVector> cur(n, IntVector(supply.size(), 0));
  std::function<void(std::size_t, std::size_t, std::int64_t)> rec = [&](std::size_t good, std::size_t agent,
                                                                        std::int64_t left) {
    if (good == supply.size()) {
      out.push_back(cur);
      return;
    }
    if (agent + 1 == n) {
      cur[agent][good] = left;
      rec(good + 1, 0, good + 1 < supply.size() ? supply[good + 1] : 0);
      cur[agent][good] = 0;
      return;
    }
    for (std::int64_t q = 0; q <= left; ++q) {
      cur[agent][good] = q;
      rec(good, agent + 1, left - q);
    }
    cur[agent][good] = 0;
  };
  rec(0, 0, supply.empty() ? 0 : supply[0]);
  return out;
}

}  // namespace testing

namespace doctest {

template <>
struct StringMaker<bundlecon::IntVector> {
  static String convert(const bundlecon::IntVector& v) { return bundlecon::toString(v).c_str(); }
};

template <>
struct StringMaker<std::vector<bundlecon::IntVector>> {
  static String convert(const std::vector<bundlecon::IntVector>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + bundlecon::toString(vs[i]);
    return (s + "}").c_str();
  }
};

template <>
struct StringMaker<bundlecon::RationalVector> {
  static String convert(const bundlecon::RationalVector& v) { return bundlecon::toString(v).c_str(); }
};

}  // namespace doctest
