#include "bundlecon/consistency.hpp"

#include <algorithm>
#include <set>

#include "bundlecon/combinatorics.hpp"
#include "bundlecon/demand.hpp"

namespace bundlecon {

std::string toString(PairKind kind) {
  switch (kind) {
    case PairKind::Substitutable: return "substitutable";
    case PairKind::Complementary: return "complementary";
    case PairKind::Both: return "both";
    case PairKind::Inconsistent: return "inconsistent";
  }
  return "?";
}

PairClassification classifyGoodPair(const std::vector<std::vector<IntVector>>& demandTypes, std::size_t i,
                                    std::size_t k) {
  if (i == k) throw InvalidArgument("a good cannot be paired with itself");
  PairClassification out;
  for (std::size_t j = 0; j < demandTypes.size(); ++j)
    for (const auto& d : demandTypes[j]) {
      const std::int64_t s = d.at(i) * d.at(k);
      if (s > 0 && !out.complementWitness) out.complementWitness = TypedDirection{j, d};
      if (s < 0 && !out.substituteWitness) out.substituteWitness = TypedDirection{j, d};
    }
  if (out.complementWitness && out.substituteWitness) out.kind = PairKind::Inconsistent;
  else if (out.complementWitness) out.kind = PairKind::Complementary;
  else if (out.substituteWitness) out.kind = PairKind::Substitutable;
  else out.kind = PairKind::Both;
  return out;
}

PairClassification classifyGoodPair(const std::vector<Valuation>& agents, std::size_t i, std::size_t k,
                                    PriceDomain domain) {
  std::vector<std::vector<IntVector>> types;
  for (const auto& v : agents) types.push_back(demandTypeVectors(v, domain));
  return classifyGoodPair(types, i, k);
}

UnitConsistency isUnitConsistent(const Valuation& v, PriceDomain domain) {
  UnitConsistency out;
  const std::int64_t M = v.space().maxUnits;
  if (M == 1) return out;
  const ItemExpansion ex = expandToItems(v);
  const LiftedPointSet pts = ex.items.lifted();
  const auto& dom = ex.items.domain();

  for (std::size_t a = 0; a < dom.size(); ++a)
    for (std::size_t b = a + 1; b < dom.size(); ++b) {
      IntVector d(dom[a].size());
      for (std::size_t c = 0; c < d.size(); ++c) d[c] = dom[b][c] - dom[a][c];
      // same-good item pair with a positive product
      std::optional<UnitWitness> candidate;
      for (std::size_t g = 0; g < ex.numGoods && !candidate; ++g)
        for (std::int64_t m = 1; m <= M && !candidate; ++m)
          for (std::int64_t m2 = m + 1; m2 <= M; ++m2)
            if (d[ex.itemIndex(g, m)] * d[ex.itemIndex(g, m2)] > 0) {
              candidate = UnitWitness{g, m, m2, primitiveNormalized(d)};
              break;
            }
      if (!candidate) continue;
      if (oneDimensionalCellThrough(pts, a, b, domain)) {
        out.consistent = false;
        out.witness = std::move(candidate);
        return out;
      }
    }
  return out;
}

std::vector<IntVector> relevantBundles(const std::vector<GeometryReport>& agents) {
  std::set<IntVector> out;
  std::size_t dim = 0;
  for (const auto& g : agents) {
    for (const auto& d : effectDirections(g.unitEffects)) out.insert(d);
    if (!g.cells.empty()) dim = g.cells.front().bundles.front().size();
  }
  for (std::size_t i = 0; i < dim; ++i) out.insert(unitVector(dim, i));
  return {out.begin(), out.end()};
}


std::optional<BundleWitness> checkBundlingPair(const std::vector<std::vector<IntVector>>& demandTypes,
                                               const std::vector<IntVector>& bundling, std::size_t k, std::size_t l) {
  const std::size_t n = bundling.size();
  const RationalMatrix inv = rationalInverse(RationalMatrix::fromColumns(bundling, n));
  std::optional<TypedDirection> pos, neg;
  for (std::size_t j = 0; j < demandTypes.size(); ++j)
    for (const auto& d : demandTypes[j]) {
      const auto y = inv.apply(d);
      const int s = sgn(y[k]) * sgn(y[l]);
      if (s > 0 && !pos) pos = TypedDirection{j, d};
      if (s < 0 && !neg) neg = TypedDirection{j, d};
    }
  if (!pos || !neg) return std::nullopt;
  return BundleWitness{bundling, k, l, *pos, *neg};
}

namespace {

std::vector<std::vector<IntVector>> typesOf(const std::vector<GeometryReport>& geometry) {
  std::vector<std::vector<IntVector>> t;
  for (const auto& g : geometry) t.push_back(g.demandType);
  return t;
}

std::vector<GeometryReport> geometryOf(const std::vector<Valuation>& agents, PriceDomain domain) {
  std::vector<GeometryReport> g;
  for (const auto& v : agents) g.push_back(analyzeGeometry(v, domain));
  return g;
}

PriceDomain domainOf(const std::vector<GeometryReport>& geometry) {
  return geometry.empty() ? PriceDomain::Unrestricted : geometry.front().domain;
}

void fillUnit(ConsistencyVerdict& verdict, const std::vector<Valuation>& agents, PriceDomain domain) {
  for (const auto& v : agents) {
    verdict.unit.push_back(isUnitConsistent(v, domain));
    if (!verdict.unit.back().consistent) verdict.unitConsistent = false;
  }
}

}  // namespace

std::vector<IntVector> relevantBundles(const std::vector<Valuation>& agents, PriceDomain domain) {
  return relevantBundles(geometryOf(agents, domain));
}

ConsistencyVerdict checkBundleConsistencyDirect(const std::vector<Valuation>& agents,
                                                const std::vector<GeometryReport>& geometry) {
  ConsistencyVerdict verdict;
  fillUnit(verdict, agents, domainOf(geometry));
  if (agents.empty()) return verdict;
  const std::size_t n = agents.front().numGoods();
  const auto relevant = relevantBundles(geometry);
  const auto types = typesOf(geometry);
  for (const auto& subset : allCombinations(relevant.size(), n)) {
    std::vector<IntVector> bundling;
    for (auto s : subset) bundling.push_back(relevant[s]);
    if (bareissDeterminant(IntMatrix::fromColumns(bundling, n)) == 0) continue;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = k + 1; l < n; ++l)
        if (auto w = checkBundlingPair(types, bundling, k, l)) {
          verdict.bundleConsistent = false;
          verdict.witness = std::move(w);
          return verdict;
        }
  }
  return verdict;
}

ConsistencyVerdict checkBundleConsistencyDirect(const std::vector<Valuation>& agents, PriceDomain domain) {
  return checkBundleConsistencyDirect(agents, geometryOf(agents, domain));
}

ConsistencyVerdict checkBundleConsistencyTU(const std::vector<Valuation>& agents,
                                            const std::vector<GeometryReport>& geometry) {
  ConsistencyVerdict verdict;
  fillUnit(verdict, agents, domainOf(geometry));
  for (std::size_t j = 0; j < agents.size(); ++j)
    if (!verdict.unit[j].consistent) {
      const auto& w = *verdict.unit[j].witness;
      const auto& good = agents[j].space().goods[w.good];
      throw UnitInconsistentInput("agent #" + std::to_string(j) + " is not unit-consistent: items (" + good + "," +
                                  std::to_string(w.serial) + ") and (" + good + "," + std::to_string(w.otherSerial) +
                                  ") are complements");
    }
  auto tu = isTotallyUnimodular(relevantBundles(geometry));
  verdict.bundleConsistent = tu.totallyUnimodular;
  verdict.tuWitness = std::move(tu.witness);
  return verdict;
}

ConsistencyVerdict checkBundleConsistencyTU(const std::vector<Valuation>& agents, PriceDomain domain) {
  return checkBundleConsistencyTU(agents, geometryOf(agents, domain));
}

namespace {

struct StrictCell {
  DemandCell cell;
  IntVector direction;  // oriented with a positive k component
};

std::optional<StrictCell> findStrictCell(const Valuation& v, std::size_t k, std::size_t l, int wantedSign) {
  for (auto& c : demandCells(v)) {
    if (c.dimension != 1) continue;
    IntVector d(c.bundles[0].size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = c.bundles[1][i] - c.bundles[0][i];
    d = primitiveNormalized(d);
    if (std::any_of(d.begin(), d.end(), [](auto x) { return x < -1 || x > 1; })) continue;
    const std::int64_t s = d[k] * d[l];
    if ((wantedSign > 0 && s <= 0) || (wantedSign < 0 && s >= 0)) continue;
    if (d[k] < 0)
      for (auto& x : d) x = -x;
    return StrictCell{std::move(c), std::move(d)};
  }
  return std::nullopt;
}

IntVector lowEndpoint(const StrictCell& s, std::size_t k) {
  return *std::min_element(s.cell.bundles.begin(), s.cell.bundles.end(),
                           [&](const auto& a, const auto& b) { return a[k] < b[k]; });
}

}  // namespace

Economy synthesizeInconsistencyEconomy(const Valuation& v1, const Valuation& v2, std::size_t k, std::size_t l) {
  if (!(v1.space() == v2.space())) throw InvalidArgument("valuations use different goods spaces");
  const GoodSpace& space = v1.space();
  if (k >= space.size() || l >= space.size() || k == l) throw InvalidArgument("need two distinct goods");

  auto c1 = findStrictCell(v1, k, l, +1);
  if (!c1) throw NoStrictWitness("first valuation has no unit-box complementarity direction on the pair");
  auto c2 = findStrictCell(v2, k, l, -1);
  if (!c2) throw NoStrictWitness("second valuation has no unit-box substitutability direction on the pair");

  const std::size_t n = space.size();
  const auto& p1 = c1->cell.supportingPrice;
  const auto& p2 = c2->cell.supportingPrice;
  RationalVector p(n), s1(n), s2(n), pHat(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = std::max({p1[i], p2[i], Rational(0)}) + 1;
    s1[i] = p[i] - p1[i];
    s2[i] = p[i] - p2[i];
    pHat[i] = (i == k || i == l) ? Rational(0) : p[i];
  }

  Economy e;
  e.space = space;
  e.agents.push_back(Agent{"1", linearShift(v1, s1), lowEndpoint(*c1, k), {}, {}, {}});
  e.agents.push_back(Agent{"2", linearShift(v2, s2), lowEndpoint(*c2, k), {}, {}, {}});

  Valuation third;
  if (space.maxUnits == 1) {
    third = linearValuation(space, pHat);
  } else {
    std::map<IntVector, Rational> entries;
    for (auto& x : GoodSpace(space.goods, 1).box()) entries.emplace(x, dot(pHat, x));
    third = tableValuation(space, std::move(entries));
  }
  IntVector w3(n, 0);
  for (std::size_t i = 0; i < n; ++i) w3[i] = c1->direction[i] + c2->direction[i] > 0 ? 1 : 0;
  e.agents.push_back(Agent{"3", third, w3, {}, {}, {}});
  e.validate();
  return e;
}

}  // namespace bundlecon
