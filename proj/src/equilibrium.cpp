#include "bundlecon/equilibrium.hpp"

#include <algorithm>
#include <set>

#include "bundlecon/demand.hpp"
#include "bundlecon/lp.hpp"

namespace bundlecon {

namespace {

struct WelfareAccumulator {
  std::optional<Rational> best;
  Integer count = 0;
  std::vector<Allocation> maximizers;

  void offer(const Rational& value, const Allocation& a) {
    if (!best || value > *best) {
      best = value;
      count = 0;
      maximizers.clear();
    }
    if (value == *best) {
      ++count;
      if (maximizers.size() < kMaxReportedAllocations) maximizers.push_back(a);
    }
  }

  /// `later` holds allocations that sort after ours.
  void absorb(WelfareAccumulator&& later) {
    if (!later.best) return;
    if (!best || *later.best > *best) {
      *this = std::move(later);
      return;
    }
    if (*later.best < *best) return;
    count += later.count;
    for (auto& a : later.maximizers)
      if (maximizers.size() < kMaxReportedAllocations) maximizers.push_back(std::move(a));
  }
};

class WelfareSearch {
 public:
  explicit WelfareSearch(const Economy& e) : e_(e), supply_(e.totalSupply()) {}

  void run(std::size_t firstBundle, WelfareAccumulator& acc) const {
    Allocation current(e_.agents.size());
    IntVector remaining = supply_;
    if (e_.agents.size() == 1) {
      dfs(0, remaining, Rational(0), current, acc);
      return;
    }
    const auto& x = e_.agents[0].valuation.domain()[firstBundle];
    if (!fits(x, remaining)) return;
    take(remaining, x, -1);
    current[0] = x;
    dfs(1, remaining, e_.agents[0].valuation.values()[firstBundle], current, acc);
  }

  std::size_t firstAgentDomainSize() const { return e_.agents.front().valuation.domain().size(); }
  bool singleAgent() const { return e_.agents.size() == 1; }

 private:
  static bool fits(const IntVector& x, const IntVector& remaining) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] > remaining[i]) return false;
    return true;
  }
  static void take(IntVector& remaining, const IntVector& x, int sign) {
    for (std::size_t i = 0; i < x.size(); ++i) remaining[i] += sign * x[i];
  }

  void dfs(std::size_t j, IntVector& remaining, const Rational& value, Allocation& current,
           WelfareAccumulator& acc) const {
    const Valuation& v = e_.agents[j].valuation;
    if (j + 1 == e_.agents.size()) {
      if (auto idx = v.indexOf(remaining)) {
        current[j] = remaining;
        acc.offer(value + v.values()[*idx], current);
      }
      return;
    }
    for (std::size_t b = 0; b < v.domain().size(); ++b) {
      const auto& x = v.domain()[b];
      if (!fits(x, remaining)) continue;
      take(remaining, x, -1);
      current[j] = x;
      dfs(j + 1, remaining, value + v.values()[b], current, acc);
      take(remaining, x, +1);
    }
  }

  const Economy& e_;
  IntVector supply_;
};

}  // namespace

WelfareResult welfareOptimum(const Economy& e, Execution exec) {
  e.validate();
  WelfareSearch search(e);
  WelfareAccumulator total;
  if (search.singleAgent()) {
    search.run(0, total);
  } else {
    const long long n = static_cast<long long>(search.firstAgentDomainSize());
    std::vector<WelfareAccumulator> parts(static_cast<std::size_t>(n));
    if (exec == Execution::Serial) {
      for (long long b = 0; b < n; ++b) search.run(static_cast<std::size_t>(b), parts[b]);
    } else {
#pragma omp parallel for schedule(dynamic, 1)
      for (long long b = 0; b < n; ++b) search.run(static_cast<std::size_t>(b), parts[b]);
    }
    for (auto& p : parts) total.absorb(std::move(p));
  }
  if (!total.best) throw InfeasibleSupply("no allocation of the domains sums to the total supply");
  return WelfareResult{*total.best, total.count, std::move(total.maximizers)};
}

LyapunovResult lyapunovMinimum(const Economy& e) {
  e.validate();
  const std::size_t n = e.space.size();
  const std::size_t J = e.agents.size();
  const IntVector W = e.totalSupply();
  LinearProgram lp(n + J, LinearProgram::Sense::Minimize);
  for (std::size_t i = 0; i < n + J; ++i) lp.freeVariable[i] = true;
  for (std::size_t i = 0; i < n; ++i) lp.objective[i] = static_cast<long>(W[i]);
  for (std::size_t j = 0; j < J; ++j) lp.objective[n + j] = 1;
  for (std::size_t j = 0; j < J; ++j) {
    const Valuation& v = e.agents[j].valuation;
    for (std::size_t b = 0; b < v.domain().size(); ++b) {
      RationalVector row(n + J, Rational(0));
      for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<long>(v.domain()[b][i]);
      row[n + j] = 1;
      lp.addConstraint(std::move(row), Relation::GreaterEqual, v.values()[b]);
    }
  }
  auto res = solveLP(lp);
  if (res.status != LpStatus::Optimal)
    throw InfeasibleSupply("Lyapunov LP is " + toString(res.status) + "; total supply lies outside the domains");
  return LyapunovResult{res.value, RationalVector(res.assignment.begin(), res.assignment.begin() + static_cast<long>(n))};
}

namespace {

bool extract(const std::vector<std::vector<IntVector>>& demand, std::size_t j, IntVector& remaining, Allocation& out,
             std::set<std::pair<std::size_t, IntVector>>& failed) {
  if (j == demand.size()) return std::all_of(remaining.begin(), remaining.end(), [](auto c) { return c == 0; });
  if (failed.count({j, remaining})) return false;
  for (const auto& x : demand[j]) {
    bool fits = true;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] > remaining[i]) fits = false;
    if (!fits) continue;
    for (std::size_t i = 0; i < x.size(); ++i) remaining[i] -= x[i];
    out[j] = x;
    const bool ok = extract(demand, j + 1, remaining, out, failed);
    for (std::size_t i = 0; i < x.size(); ++i) remaining[i] += x[i];
    if (ok) return true;
  }
  failed.insert({j, remaining});
  return false;
}

}  // namespace

EquilibriumResult findEquilibrium(const Economy& e, Execution exec) {
  EquilibriumResult r;
  r.ipValue = welfareOptimum(e, exec).value;
  const auto lyap = lyapunovMinimum(e);
  r.lpValue = lyap.value;
  if (r.lpValue < r.ipValue) throw InternalError("Lyapunov value below the welfare optimum");
  if (r.ipValue != r.lpValue) return r;

  std::vector<std::vector<IntVector>> demand;
  for (const auto& a : e.agents) demand.push_back(demandSet(a.valuation, lyap.price));
  IntVector remaining = e.totalSupply();
  Allocation alloc(e.agents.size());
  std::set<std::pair<std::size_t, IntVector>> failed;
  if (!extract(demand, 0, remaining, alloc, failed))
    throw InternalError("no market-clearing selection from demand at the Lyapunov-minimizing price");
  if (!verifyEquilibrium(e, lyap.price, alloc).ok) throw InternalError("extracted equilibrium failed verification");
  r.exists = true;
  r.price = lyap.price;
  r.allocation = std::move(alloc);
  return r;
}

std::string Violation::describe(const Economy& e) const {
  switch (kind) {
    case Kind::NotFeasible: return "agent " + e.agents[agent].id + ": bundle outside the domain";
    case Kind::NotDemanded:
      return "agent " + e.agents[agent].id + ": strictly prefers " + toString(better);
    case Kind::NotClearing: return "excess demand " + toString(excess);
  }
  return "?";
}

EquilibriumCheck verifyEquilibrium(const Economy& e, const RationalVector& p, const Allocation& a) {
  if (a.size() != e.agents.size()) throw InvalidArgument("allocation has wrong number of bundles");
  EquilibriumCheck check;
  IntVector excess(e.space.size(), 0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    const Valuation& v = e.agents[j].valuation;
    for (std::size_t i = 0; i < excess.size(); ++i) excess[i] += a[j].at(i) - e.agents[j].endowment[i];
    if (!v.contains(a[j])) {
      check.violations.push_back({Violation::Kind::NotFeasible, j, {}, {}});
      continue;
    }
    const auto best = demandSet(v, p);
    if (!std::binary_search(best.begin(), best.end(), a[j]))
      check.violations.push_back({Violation::Kind::NotDemanded, j, best.front(), {}});
  }
  if (std::any_of(excess.begin(), excess.end(), [](auto c) { return c != 0; }))
    check.violations.push_back({Violation::Kind::NotClearing, 0, {}, excess});
  check.ok = check.violations.empty();
  return check;
}

}  // namespace bundlecon
