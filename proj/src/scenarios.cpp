#include "bundlecon/scenarios.hpp"

#include <algorithm>

namespace bundlecon::scenarios {

Valuation maxSplitValuation(const GoodSpace& space, Rational scale, std::size_t left, std::size_t shared,
                            std::size_t right, std::int64_t cap, const IntVector& upper) {
  std::map<IntVector, Rational> entries;
  for (auto& x : space.box()) {
    bool inside = true;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] > upper.at(i)) inside = false;
    if (!inside) continue;
    std::int64_t best = 0;
    for (std::int64_t y = 0; y <= x[shared]; ++y)
      best = std::max(best, std::min({x[left], y, cap}) + std::min({x[shared] - y, x[right], cap}));
    entries.emplace(std::move(x), scale * static_cast<long>(best));
  }
  return tableValuation(space, std::move(entries));
}

namespace {

Agent agent(std::string id, Valuation v, IntVector w) { return Agent{std::move(id), std::move(v), std::move(w), {}, {}, {}}; }

}  // namespace

Economy threeCycle() {
  GoodSpace s({"apple", "banana", "coconut"}, 1);
  Economy e;
  e.space = s;
  e.agents.push_back(agent("1", scaledMinValuation(s, 3, {0, 1}), {1, 0, 0}));
  e.agents.push_back(agent("2", scaledMinValuation(s, 3, {1, 2}), {0, 1, 0}));
  e.agents.push_back(agent("3", scaledMinValuation(s, 3, {0, 2}), {0, 0, 1}));
  e.validate();
  return e;
}

Economy consecutive() {
  Economy e = threeCycle();
  e.agents[2].valuation = scaledMinValuation(e.space, 3, {0, 1, 2});
  e.validate();
  return e;
}

Economy dkl() {
  GoodSpace s({"a", "b", "c", "d"}, 1);
  Economy e;
  e.space = s;
  e.agents.push_back(agent("1", linearValuation(s, {1, 1, 1, 1}), {1, 1, 1, 1}));
  e.agents.push_back(agent("2", scaledMinValuation(s, 3, {0, 1}), {0, 0, 0, 0}));
  e.agents.push_back(agent("3", scaledMinValuation(s, 3, {1, 2}), {0, 0, 0, 0}));
  e.agents.push_back(agent("4", scaledMinValuation(s, 3, {2, 3}), {0, 0, 0, 0}));
  e.agents.push_back(agent("5", scaledMinValuation(s, 3, {3, 0}), {0, 0, 0, 0}));
  e.agents.push_back(agent("6", scaledMinValuation(s, 3, {0, 1, 2, 3}), {0, 0, 0, 0}));
  e.validate();
  return e;
}

std::vector<IntVector> dklColumns() {
  return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0},
          {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}, {1, 1, 1, 1}};
}

Economy hiddenComplement() {
  GoodSpace s({"a", "b", "c", "d", "e"}, 1);
  Economy e;
  e.space = s;
  e.agents.push_back(agent("1", scaledMinOfSumValuation(s, 3, {0, 1}, 1), {1, 0, 0, 0, 0}));
  e.agents.push_back(agent("2", scaledMinOfSumValuation(s, 3, {1, 2}, 1), {0, 1, 0, 0, 0}));
  e.agents.push_back(agent("3", scaledMinOfSumValuation(s, 3, {2, 3}, 1), {0, 0, 1, 0, 0}));
  e.agents.push_back(agent("4", scaledMinOfSumValuation(s, 3, {3, 4}, 1), {0, 0, 0, 1, 0}));
  e.agents.push_back(agent("5", scaledMinValuation(s, 3, {0, 4}), {0, 0, 0, 0, 1}));
  e.validate();
  return e;
}

Economy multiunitSplit() {
  GoodSpace s({"apple", "banana", "coconut"}, 2);
  Economy e;
  e.space = s;
  e.agents.push_back(agent("1", maxSplitValuation(s, 3, 0, 1, 2, 1, {1, 2, 1}), {0, 0, 0}));
  e.validate();
  return e;
}

Economy nonConsecutiveSingleGood() {
  GoodSpace s({"g"}, 2);
  Economy e;
  e.space = s;
  e.agents.push_back(agent("1", tableValuation(s, {{{0}, 0}, {{1}, 0}, {{2}, 3}}), {1}));
  e.validate();
  return e;
}

}  // namespace bundlecon::scenarios
