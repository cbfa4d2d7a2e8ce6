#include "bundlecon/preferences.hpp"

#include <algorithm>
#include <set>

namespace bundlecon {

GoodSpace::GoodSpace(std::vector<std::string> names, std::int64_t m) : goods(std::move(names)), maxUnits(m) {
  if (goods.empty()) throw InvalidArgument("at least one good is required");
  if (maxUnits < 1) throw InvalidArgument("M must be at least 1");
  std::set<std::string> seen;
  for (const auto& g : goods)
    if (!seen.insert(g).second) throw InvalidArgument("duplicate good '" + g + "'");
}

std::size_t GoodSpace::indexOf(const std::string& name) const {
  auto it = std::find(goods.begin(), goods.end(), name);
  if (it == goods.end()) throw InvalidArgument("unknown good '" + name + "'");
  return static_cast<std::size_t>(it - goods.begin());
}

bool GoodSpace::inBox(const IntVector& x) const {
  if (x.size() != goods.size()) return false;
  return std::all_of(x.begin(), x.end(), [&](std::int64_t c) { return c >= 0 && c <= maxUnits; });
}

std::vector<IntVector> GoodSpace::box() const {
  std::vector<IntVector> out;
  IntVector x(goods.size(), 0);
  while (true) {
    out.push_back(x);
    std::size_t c = goods.size();
    while (c > 0 && x[c - 1] == maxUnits) x[--c] = 0;
    if (c == 0) break;
    ++x[c - 1];
  }
  return out;
}

namespace {

void checkGoods(const GoodSpace& space, const std::vector<std::size_t>& goods) {
  if (goods.empty()) throw InvalidArgument("min term needs at least one good");
  for (auto g : goods)
    if (g >= space.size()) throw InvalidArgument("good index out of range");
}

void checkPrices(const GoodSpace& space, const RationalVector& p) {
  if (p.size() != space.size()) throw InvalidArgument("price vector has wrong length");
}

/// nullopt stands for the full box.
std::optional<std::set<IntVector>> domainOf(const GoodSpace& space, const ValuationSpec& s) {
  return std::visit(
      [&](const auto& n) -> std::optional<std::set<IntVector>> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, spec::Table>) {
          if (n.entries.empty()) throw InvalidArgument("table valuation has an empty domain");
          std::set<IntVector> d;
          for (const auto& [x, value] : n.entries) {
            if (!space.inBox(x)) throw InvalidArgument("table bundle " + toString(x) + " lies outside {0..M}^I");
            d.insert(x);
          }
          return d;
        } else if constexpr (std::is_same_v<T, spec::Linear>) {
          checkPrices(space, n.prices);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, spec::ScaledMin> || std::is_same_v<T, spec::ScaledMinOfSum>) {
          checkGoods(space, n.goods);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, spec::Sum>) {
          if (n.children.empty()) throw InvalidArgument("sum valuation needs children");
          std::optional<std::set<IntVector>> d;
          for (const auto& c : n.children) {
            auto cd = domainOf(space, c);
            if (!cd) continue;
            if (!d) {
              d = std::move(cd);
            } else {
              std::set<IntVector> meet;
              std::set_intersection(d->begin(), d->end(), cd->begin(), cd->end(), std::inserter(meet, meet.end()));
              d = std::move(meet);
            }
          }
          if (d && d->empty()) throw InvalidArgument("sum valuation has an empty domain");
          return d;
        } else {
          checkPrices(space, n.prices);
          for (const auto& q : n.prices)
            if (q < 0) throw NegativeShift("shift prices must be nonnegative");
          return domainOf(space, *n.child);
        }
      },
      s.node);
}

Rational evalNode(const ValuationSpec& s, const IntVector& x) {
  return std::visit(
      [&](const auto& n) -> Rational {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, spec::Table>) {
          return n.entries.at(x);
        } else if constexpr (std::is_same_v<T, spec::Linear>) {
          return dot(n.prices, x);
        } else if constexpr (std::is_same_v<T, spec::ScaledMin>) {
          std::int64_t m = x[n.goods.front()];
          for (auto g : n.goods) m = std::min(m, x[g]);
          if (n.cap) m = std::min(m, *n.cap);
          return n.scale * static_cast<long>(m);
        } else if constexpr (std::is_same_v<T, spec::ScaledMinOfSum>) {
          std::int64_t m = 0;
          for (auto g : n.goods) m += x[g];
          if (n.cap) m = std::min(m, *n.cap);
          return n.scale * static_cast<long>(m);
        } else if constexpr (std::is_same_v<T, spec::Sum>) {
          Rational total = 0;
          for (const auto& c : n.children) total += evalNode(c, x);
          return total;
        } else {
          return evalNode(*n.child, x) + dot(n.prices, x);
        }
      },
      s.node);
}

}  // namespace

Valuation::Valuation(GoodSpace space, ValuationSpec spec) {
  auto data = std::make_shared<Data>();
  data->space = std::move(space);
  data->spec = std::move(spec);
  auto restricted = domainOf(data->space, data->spec);
  data->domain = restricted ? std::vector<IntVector>(restricted->begin(), restricted->end()) : data->space.box();
  data->values.reserve(data->domain.size());
  for (std::size_t i = 0; i < data->domain.size(); ++i) {
    data->values.push_back(evalNode(data->spec, data->domain[i]));
    data->index.emplace(data->domain[i], i);
  }
  data_ = std::move(data);
}

std::optional<std::size_t> Valuation::indexOf(const IntVector& x) const {
  auto it = data_->index.find(x);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

Rational Valuation::value(const IntVector& x) const {
  auto i = indexOf(x);
  if (!i) throw OutOfDomain("bundle " + toString(x) + " is outside the valuation's domain");
  return data_->values[*i];
}

LiftedPointSet Valuation::lifted() const {
  std::vector<LiftedPoint> pts;
  pts.reserve(domain().size());
  for (std::size_t i = 0; i < domain().size(); ++i) pts.push_back({domain()[i], values()[i]});
  return LiftedPointSet(numGoods(), std::move(pts));
}

Rational evalValuation(const Valuation& v, const IntVector& x) { return v.value(x); }

Valuation linearShift(const Valuation& v, const RationalVector& p) {
  checkPrices(v.space(), p);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < 0) throw NegativeShift("shift price for '" + v.space().goods[i] + "' is negative");
  return Valuation(v.space(), ValuationSpec{spec::Shift{std::make_shared<const ValuationSpec>(v.spec()), p}});
}

Valuation tableValuation(const GoodSpace& space, std::map<IntVector, Rational> entries) {
  return Valuation(space, ValuationSpec{spec::Table{std::move(entries)}});
}

Valuation zeroValuation(const GoodSpace& space) {
  std::map<IntVector, Rational> entries;
  for (auto& x : space.box()) entries.emplace(std::move(x), Rational(0));
  return tableValuation(space, std::move(entries));
}

Valuation linearValuation(const GoodSpace& space, RationalVector prices) {
  return Valuation(space, ValuationSpec{spec::Linear{std::move(prices)}});
}

Valuation scaledMinValuation(const GoodSpace& space, Rational scale, std::vector<std::size_t> goods,
                             std::optional<std::int64_t> cap) {
  return Valuation(space, ValuationSpec{spec::ScaledMin{std::move(scale), std::move(goods), cap}});
}

Valuation scaledMinOfSumValuation(const GoodSpace& space, Rational scale, std::vector<std::size_t> goods,
                                  std::optional<std::int64_t> cap) {
  return Valuation(space, ValuationSpec{spec::ScaledMinOfSum{std::move(scale), std::move(goods), cap}});
}

void MoneyCurve::validate() const {
  if (points.size() < 2) throw InvalidArgument("a money-utility curve needs at least two breakpoints");
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].first <= points[i - 1].first || points[i].second <= points[i - 1].second)
      throw InvalidArgument("money-utility curve must be strictly increasing");
}

std::optional<Rational> MoneyCurve::inverse(const Rational& u) const {
  validate();
  if (u < points.front().second || u > points.back().second) return std::nullopt;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const auto& [m0, u0] = points[i - 1];
    const auto& [m1, u1] = points[i];
    if (u <= u1) return Rational(m0 + (u - u0) * (m1 - m0) / (u1 - u0));
  }
  return points.back().first;
}

UtilitySpec UtilitySpec::fromValuation(Valuation v) {
  UtilitySpec u;
  u.space = v.space();
  u.quasilinear = std::move(v);
  return u;
}

UtilitySpec UtilitySpec::fromCurves(GoodSpace space, std::map<IntVector, MoneyCurve> curves) {
  if (curves.empty()) throw InvalidArgument("no money-utility curves given");
  for (const auto& [x, c] : curves) {
    if (!space.inBox(x)) throw InvalidArgument("curve bundle " + toString(x) + " lies outside {0..M}^I");
    c.validate();
  }
  UtilitySpec u;
  u.space = std::move(space);
  u.curves = std::move(curves);
  return u;
}

Valuation hicksianValuation(const UtilitySpec& utility, const Rational& targetUtility) {
  std::map<IntVector, Rational> entries;
  if (utility.quasilinear) {
    const auto& v = *utility.quasilinear;
    for (std::size_t i = 0; i < v.domain().size(); ++i) entries.emplace(v.domain()[i], v.values()[i] - targetUtility);
  } else {
    for (const auto& [x, curve] : utility.curves) {
      auto money = curve.inverse(targetUtility);
      if (!money)
        throw UtilityOutOfRange("utility level " + toString(targetUtility) + " is outside the curve of bundle " +
                                toString(x));
      entries.emplace(x, -*money);
    }
  }
  return tableValuation(utility.space, std::move(entries));
}

void Economy::validate() const {
  if (agents.empty()) throw SchemaError("agents: at least one agent is required");
  std::set<std::string> ids;
  for (const auto& a : agents) {
    if (!ids.insert(a.id).second) throw SchemaError("agents: duplicate id '" + a.id + "'");
    if (!(a.valuation.space() == space)) throw SchemaError("agents[" + a.id + "]: valuation uses another goods space");
    if (a.endowment.size() != space.size()) throw SchemaError("agents[" + a.id + "].endowment: wrong length");
    if (!a.valuation.contains(a.endowment))
      throw SchemaError("agents[" + a.id + "].endowment: " + toString(a.endowment) + " is not a feasible bundle");
  }
}

IntVector Economy::totalSupply() const {
  IntVector w(space.size(), 0);
  for (const auto& a : agents)
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += a.endowment[i];
  return w;
}

std::size_t Economy::agentIndex(const std::string& id) const {
  for (std::size_t j = 0; j < agents.size(); ++j)
    if (agents[j].id == id) return j;
  throw InvalidArgument("unknown agent '" + id + "'");
}

std::vector<Valuation> Economy::valuations() const {
  std::vector<Valuation> out;
  for (const auto& a : agents) out.push_back(a.valuation);
  return out;
}

}  // namespace bundlecon
