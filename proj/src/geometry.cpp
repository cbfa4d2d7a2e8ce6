#include "bundlecon/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bundlecon {

namespace {

IntVector signNormalized(IntVector v) {
  auto first = std::find_if(v.begin(), v.end(), [](auto c) { return c != 0; });
  if (first != v.end() && *first < 0)
    for (auto& c : v) c = -c;
  return v;
}

bool inUnitBox(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](auto c) { return c >= -1 && c <= 1; });
}

IntVector difference(const IntVector& a, const IntVector& b) {
  IntVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

}  // namespace

std::vector<DemandCell> demandCells(const Valuation& v, PriceDomain domain, Execution exec) {
  std::vector<DemandCell> out;
  const LiftedPointSet pts = v.lifted();
  for (auto& c : faceLattice(pts, exec)) {
    if (domain == PriceDomain::Nonnegative &&
        std::any_of(c.supportingPrice.begin(), c.supportingPrice.end(), [](const Rational& q) { return q < 0; })) {
      auto p = priceRealizing(pts, c.members, domain);
      if (!p) continue;
      c.supportingPrice = std::move(*p);
    }
    DemandCell dc;
    for (auto i : c.members) dc.bundles.push_back(v.domain()[i]);
    dc.supportingPrice = std::move(c.supportingPrice);
    dc.dimension = c.dimension;
    out.push_back(std::move(dc));
  }
  return out;
}

std::vector<IntVector> demandTypeVectors(const std::vector<DemandCell>& cells) {
  std::set<IntVector> dirs;
  for (const auto& c : cells)
    if (c.dimension == 1) dirs.insert(primitiveNormalized(difference(c.bundles[1], c.bundles[0])));
  return {dirs.begin(), dirs.end()};
}

std::vector<IntVector> demandTypeVectors(const Valuation& v, PriceDomain domain, Execution exec) {
  return demandTypeVectors(demandCells(v, domain, exec));
}

bool verifyPriceEffect(const Valuation& v, const PriceEffect& e) {
  if (std::all_of(e.delta.begin(), e.delta.end(), [](auto c) { return c == 0; })) return false;
  for (std::size_t i = 0; i < e.price.size(); ++i)
    if (i != e.good && e.price[i] != e.newPrice[i]) return false;
  if (!(e.newPrice[e.good] < e.price[e.good])) return false;
  if (demandSet(v, e.price) != std::vector<IntVector>{e.before}) return false;
  auto after = demandSet(v, e.newPrice);
  return e.after == [&] {
    IntVector s = e.before;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += e.delta[i];
    return s;
  }() && std::binary_search(after.begin(), after.end(), e.after);
}

PriceEffectReport priceEffectSet(const Valuation& v, const std::vector<DemandCell>& cells, bool onlyUnitBox) {
  std::map<std::pair<IntVector, std::size_t>, PriceEffect> found;
  const auto& dom = v.domain();
  for (const auto& cell : cells) {
    if (cell.dimension != 1) continue;
    const IntVector d = primitiveNormalized(difference(cell.bundles[1], cell.bundles[0]));
    const RationalVector& pStar = cell.supportingPrice;

    std::vector<Rational> payoff(dom.size());
    for (std::size_t z = 0; z < dom.size(); ++z) payoff[z] = v.values()[z] - dot(pStar, dom[z]);
    const Rational top = v.value(cell.bundles.front()) - dot(pStar, cell.bundles.front());

    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == 0) continue;
      // members are collinear with d_i != 0, so x_i orders them strictly
      const IntVector& before = *std::min_element(cell.bundles.begin(), cell.bundles.end(),
                                                  [&](const auto& a, const auto& b) { return a[i] < b[i]; });
      const IntVector* after = nullptr;
      for (const auto& m : cell.bundles)
        if (m[i] > before[i] && (!after || m[i] < (*after)[i])) after = &m;

      std::optional<Rational> gap;
      std::int64_t spread = 1;
      for (std::size_t z = 0; z < dom.size(); ++z) {
        if (payoff[z] == top) continue;
        Rational g = top - payoff[z];
        if (!gap || g < *gap) gap = g;
        spread = std::max(spread, before[i] - dom[z][i]);
      }
      const Rational eps = gap ? Rational(*gap / (2 * spread)) : Rational(1);

      PriceEffect e;
      e.good = i;
      e.newPrice = pStar;
      e.price = pStar;
      e.price[i] += eps;
      e.before = before;
      e.after = *after;
      e.delta = difference(*after, before);
      if (onlyUnitBox && !inUnitBox(e.delta)) continue;
      if (!verifyPriceEffect(v, e)) throw InternalError("constructed price-effect witness failed verification");
      found.emplace(std::make_pair(e.delta, e.good), std::move(e));
    }
  }

  PriceEffectReport report;
  std::set<IntVector> covered;
  for (auto& [key, e] : found) {
    covered.insert(primitiveNormalized(e.delta));
    report.effects.push_back(std::move(e));
  }
  for (const auto& d : demandTypeVectors(cells))
    if (!covered.count(d)) report.edgeOnly.push_back(d);
  return report;
}

PriceEffectReport priceEffectSet(const Valuation& v, bool onlyUnitBox, PriceDomain domain, Execution exec) {
  return priceEffectSet(v, demandCells(v, domain, exec), onlyUnitBox);
}

std::vector<IntVector> effectDirections(const PriceEffectReport& report) {
  std::set<IntVector> dirs;
  for (const auto& e : report.effects) dirs.insert(signNormalized(e.delta));
  return {dirs.begin(), dirs.end()};
}

PseudoconcavityVerdict isPseudoconcave(const std::vector<DemandCell>& cells) {
  for (const auto& c : cells) {
    if (c.dimension == 0) continue;
    for (const auto& z : integerPointsInHull(c.bundles))
      if (!std::binary_search(c.bundles.begin(), c.bundles.end(), z))
        return PseudoconcavityVerdict{false, c.supportingPrice, z};
  }
  return {};
}

PseudoconcavityVerdict isPseudoconcave(const Valuation& v, PriceDomain domain, Execution exec) {
  return isPseudoconcave(demandCells(v, domain, exec));
}

bool isOfDemandType(const Valuation& v, const std::vector<IntVector>& D, PriceDomain domain, Execution exec) {
  std::set<IntVector> allowed;
  for (const auto& d : D) allowed.insert(primitiveNormalized(d));
  for (const auto& d : demandTypeVectors(v, domain, exec))
    if (!allowed.count(d)) return false;
  return true;
}

GeometryReport analyzeGeometry(const Valuation& v, PriceDomain domain, Execution exec) {
  GeometryReport r;
  r.domain = domain;
  r.cells = demandCells(v, domain, exec);
  r.demandType = demandTypeVectors(r.cells);
  r.unitEffects = priceEffectSet(v, r.cells, true);
  r.pseudoconcavity = isPseudoconcave(r.cells);
  return r;
}

}  // namespace bundlecon
