#include "bundlecon/demand.hpp"

#include <algorithm>
#include <set>

namespace bundlecon {

std::vector<IntVector> demandSet(const Valuation& v, const RationalVector& p) {
  if (p.size() != v.numGoods()) throw InvalidArgument("price vector has wrong length");
  const auto& dom = v.domain();
  const auto& vals = v.values();
  std::vector<IntVector> out;
  Rational best;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    Rational payoff = vals[i] - dot(p, dom[i]);
    if (out.empty() || payoff > best) {
      out.clear();
      best = payoff;
      out.push_back(dom[i]);
    } else if (payoff == best) {
      out.push_back(dom[i]);
    }
  }
  return out;
}

Bundling::Bundling(std::vector<IntVector> bundles) : bundles_(std::move(bundles)) {
  if (bundles_.empty()) throw InvalidArgument("empty bundling");
  const std::size_t n = bundles_.front().size();
  if (bundles_.size() != n) throw InvalidArgument("a bundling needs exactly one bundle per good");
  for (const auto& b : bundles_) {
    if (b.size() != n) throw InvalidArgument("bundle " + toString(b) + " has wrong length");
    for (auto c : b)
      if (c < -1 || c > 1) throw InvalidArgument("bundle " + toString(b) + " has a component outside {-1,0,1}");
  }
  g_ = IntMatrix::fromColumns(bundles_, n);
  det_ = bareissDeterminant(g_);
  if (det_ == 0) throw SingularBundling("bundles are linearly dependent");
  inverse_ = rationalInverse(RationalMatrix::fromColumns(bundles_, n));
}

RationalVector Bundling::coordinates(const IntVector& x) const { return inverse_.apply(x); }

RationalVector Bundling::goodsPrices(const RationalVector& bundlePrices) const {
  if (bundlePrices.size() != size()) throw InvalidArgument("bundle price vector has wrong length");
  return inverse_.transposed().apply(bundlePrices);
}

std::vector<RationalVector> bundledDemand(const Valuation& v, const Bundling& b, const RationalVector& bundlePrices) {
  if (b.size() != v.numGoods()) throw InvalidArgument("bundling and valuation disagree on the number of goods");
  std::vector<RationalVector> out;
  for (const auto& x : demandSet(v, b.goodsPrices(bundlePrices))) out.push_back(b.coordinates(x));
  return out;
}

IntVector ItemExpansion::pi(const IntVector& itemBundle) const {
  IntVector x(numGoods, 0);
  for (std::size_t k = 0; k < itemBundle.size(); ++k) x[itemOf(k).first] += itemBundle[k];
  return x;
}

IntVector ItemExpansion::tau(const IntVector& goodsBundle) const {
  IntVector out(numGoods * static_cast<std::size_t>(maxUnits), 0);
  for (std::size_t i = 0; i < numGoods; ++i)
    for (std::int64_t m = 1; m <= goodsBundle[i]; ++m) out[itemIndex(i, m)] = 1;
  return out;
}

ItemExpansion expandToItems(const Valuation& v) {
  ItemExpansion e;
  e.numGoods = v.numGoods();
  e.maxUnits = v.space().maxUnits;
  std::vector<std::string> names;
  for (const auto& g : v.space().goods)
    for (std::int64_t m = 1; m <= e.maxUnits; ++m)
      names.push_back(e.maxUnits == 1 ? g : g + "#" + std::to_string(m));
  GoodSpace itemSpace(std::move(names), 1);
  std::map<IntVector, Rational> entries;
  for (auto& xbar : itemSpace.box())
    if (auto idx = v.indexOf(e.pi(xbar))) entries.emplace(std::move(xbar), v.values()[*idx]);
  e.items = tableValuation(itemSpace, std::move(entries));
  return e;
}

DemandedQuantities demandedQuantities(const Valuation& v, const RationalVector& p, std::size_t good) {
  if (good >= v.numGoods()) throw InvalidArgument("good index out of range");
  std::set<std::int64_t> q;
  for (const auto& x : demandSet(v, p)) q.insert(x[good]);
  DemandedQuantities out;
  out.quantities.assign(q.begin(), q.end());
  out.consecutive = out.quantities.back() - out.quantities.front() + 1 == static_cast<std::int64_t>(out.quantities.size());
  return out;
}

}  // namespace bundlecon
