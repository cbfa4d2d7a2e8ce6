#include "bundlecon/economy_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bundlecon/scenarios.hpp"

namespace bundlecon {

namespace {

using json = nlohmann::ordered_json;

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parseJson(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character
    std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto col = what.find("column"); col != std::string::npos)
      if (auto colon = what.find(": ", col); colon != std::string::npos) what = what.substr(colon + 2);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
  }
}

// Walks a JSON document keeping the field path for error messages.
class Reader {
 public:
  Reader(const json& node, std::string path, LoadOptions options, std::vector<std::string>* notes)
      : node_(node), path_(std::move(path)), options_(options), notes_(notes) {}

  const json& node() const { return node_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& message) const { throw SchemaError(path_ + ": " + message); }

  Reader field(const std::string& key) const {
    requireObject();
    auto it = node_.find(key);
    if (it == node_.end()) fail("missing field '" + key + "'");
    return child(*it, path_ + "." + key);
  }

  std::optional<Reader> optionalField(const std::string& key) const {
    requireObject();
    auto it = node_.find(key);
    if (it == node_.end()) return std::nullopt;
    return child(*it, path_ + "." + key);
  }

  bool has(const std::string& key) const { return node_.is_object() && node_.contains(key); }

  std::vector<Reader> elements() const {
    if (!node_.is_array()) fail("expected an array");
    std::vector<Reader> out;
    for (std::size_t i = 0; i < node_.size(); ++i) out.push_back(child(node_[i], path_ + "[" + std::to_string(i) + "]"));
    return out;
  }

  void allowOnly(std::initializer_list<const char*> keys) const {
    requireObject();
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (auto it = node_.begin(); it != node_.end(); ++it) {
      if (allowed.count(it.key())) continue;
      if (!options_.lenient) fail("unknown field '" + it.key() + "'");
      if (notes_) notes_->push_back("ignored unknown field " + path_ + "." + it.key());
    }
  }

  std::string string() const {
    if (!node_.is_string()) fail("expected a string");
    return node_.get<std::string>();
  }

  std::int64_t integer() const {
    if (!node_.is_number_integer()) fail("expected an integer");
    return node_.get<std::int64_t>();
  }

  Rational rational() const {
    if (node_.is_number_float()) fail("floating-point numbers are not accepted; write \"n/d\"");
    if (node_.is_number_integer()) return Rational(node_.get<std::int64_t>());
    if (!node_.is_string()) fail("expected a rational (integer or \"n/d\" string)");
    try {
      return parseRational(node_.get<std::string>());
    } catch (const InvalidArgument& e) {
      fail(e.what());
    }
  }

  /// Array in goods order, or an object keyed by good name (missing = 0).
  IntVector bundle(const GoodSpace& space) const {
    IntVector x(space.size(), 0);
    if (node_.is_array()) {
      auto el = elements();
      if (el.size() != space.size()) fail("expected " + std::to_string(space.size()) + " components");
      for (std::size_t i = 0; i < el.size(); ++i) x[i] = el[i].integer();
      return x;
    }
    if (!node_.is_object()) fail("expected a bundle (array or object keyed by good)");
    for (auto it = node_.begin(); it != node_.end(); ++it) {
      auto g = goodIndex(space, it.key());
      x[g] = child(*it, path_ + "." + it.key()).integer();
    }
    return x;
  }

  RationalVector prices(const GoodSpace& space) const {
    RationalVector p(space.size(), Rational(0));
    if (node_.is_array()) {
      auto el = elements();
      if (el.size() != space.size()) fail("expected " + std::to_string(space.size()) + " components");
      for (std::size_t i = 0; i < el.size(); ++i) p[i] = el[i].rational();
      return p;
    }
    if (!node_.is_object()) fail("expected prices (array or object keyed by good)");
    for (auto it = node_.begin(); it != node_.end(); ++it)
      p[goodIndex(space, it.key())] = child(*it, path_ + "." + it.key()).rational();
    return p;
  }

  std::size_t goodIndex(const GoodSpace& space, const std::string& name) const {
    for (std::size_t i = 0; i < space.size(); ++i)
      if (space.goods[i] == name) return i;
    fail("unknown good '" + name + "'");
  }

 private:
  Reader child(const json& n, std::string path) const { return Reader(n, std::move(path), options_, notes_); }
  void requireObject() const {
    if (!node_.is_object()) fail("expected an object");
  }

  const json& node_;
  std::string path_;
  LoadOptions options_;
  std::vector<std::string>* notes_;
};

std::vector<std::size_t> goodList(const Reader& r, const GoodSpace& space) {
  std::vector<std::size_t> out;
  for (const auto& g : r.elements()) out.push_back(r.goodIndex(space, g.string()));
  if (out.empty()) r.fail("at least one good is required");
  return out;
}

ValuationSpec readSpec(const Reader& r, const GoodSpace& space) {
  const std::string type = r.field("type").string();
  if (type == "table") {
    r.allowOnly({"type", "entries"});
    spec::Table t;
    for (const auto& e : r.field("entries").elements()) {
      e.allowOnly({"bundle", "value"});
      IntVector x = e.field("bundle").bundle(space);
      if (!t.entries.emplace(x, e.field("value").rational()).second) e.fail("duplicate bundle " + toString(x));
    }
    return {std::move(t)};
  }
  if (type == "linear") {
    r.allowOnly({"type", "prices"});
    return {spec::Linear{r.field("prices").prices(space)}};
  }
  if (type == "min" || type == "min_of_sum") {
    r.allowOnly({"type", "scale", "goods", "cap"});
    Rational scale = r.has("scale") ? r.field("scale").rational() : Rational(1);
    auto goods = goodList(r.field("goods"), space);
    std::optional<std::int64_t> cap;
    if (auto c = r.optionalField("cap")) cap = c->integer();
    if (type == "min") return {spec::ScaledMin{scale, goods, cap}};
    return {spec::ScaledMinOfSum{scale, goods, cap}};
  }
  if (type == "sum") {
    r.allowOnly({"type", "children"});
    spec::Sum s;
    for (const auto& c : r.field("children").elements()) s.children.push_back(readSpec(c, space));
    if (s.children.empty()) r.fail("sum needs at least one child");
    return {std::move(s)};
  }
  if (type == "shift") {
    r.allowOnly({"type", "child", "prices"});
    auto child = std::make_shared<const ValuationSpec>(readSpec(r.field("child"), space));
    return {spec::Shift{child, r.field("prices").prices(space)}};
  }
  if (type == "max_split") {
    r.allowOnly({"type", "scale", "left", "shared", "right", "cap", "upper"});
    auto good = [&](const char* key) { return r.goodIndex(space, r.field(key).string()); };
    IntVector upper(space.size(), space.maxUnits);
    if (auto u = r.optionalField("upper")) upper = u->bundle(space);
    Valuation v = scenarios::maxSplitValuation(space, r.field("scale").rational(), good("left"), good("shared"),
                                               good("right"), r.field("cap").integer(), upper);
    return v.spec();
  }
  r.field("type").fail("unknown valuation type '" + type + "'");
}

Valuation readValuation(const Reader& r, const GoodSpace& space) {
  ValuationSpec s = readSpec(r, space);
  try {
    return Valuation(space, std::move(s));
  } catch (const InvalidArgument& e) {
    r.fail(e.what());
  } catch (const NegativeShift& e) {
    r.fail(e.what());
  }
}

void readUtility(const Reader& r, const GoodSpace& space, Agent& agent, std::vector<std::string>& notes) {
  r.allowOnly({"level", "quasilinear", "curves"});
  const Rational level = r.field("level").rational();
  UtilitySpec u;
  if (r.has("quasilinear") == r.has("curves")) r.fail("exactly one of 'quasilinear' or 'curves' is required");
  if (auto q = r.optionalField("quasilinear")) {
    u = UtilitySpec::fromValuation(readValuation(*q, space));
  } else {
    std::map<IntVector, MoneyCurve> curves;
    for (const auto& c : r.field("curves").elements()) {
      c.allowOnly({"bundle", "points"});
      IntVector x = c.field("bundle").bundle(space);
      MoneyCurve curve;
      for (const auto& pt : c.field("points").elements()) {
        auto xy = pt.elements();
        if (xy.size() != 2) pt.fail("a breakpoint is [money, utility]");
        curve.points.emplace_back(xy[0].rational(), xy[1].rational());
      }
      if (!curves.emplace(x, std::move(curve)).second) c.fail("duplicate bundle " + toString(x));
    }
    try {
      u = UtilitySpec::fromCurves(space, std::move(curves));
    } catch (const InvalidArgument& e) {
      r.fail(e.what());
    }
  }
  try {
    agent.valuation = hicksianValuation(u, level);
  } catch (const UtilityOutOfRange& e) {
    r.fail(e.what());
  }
  agent.utilityLevel = level;
  agent.utility = std::move(u);
  notes.push_back("agent " + agent.id + ": fixed-utility-level analysis at u = " + toString(level));
}

json rationalJson(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(q.get_num().get_si());
  return json(toString(q));
}

json vectorJson(const IntVector& x) { return json(x); }

json pricesJson(const RationalVector& p) {
  json a = json::array();
  for (const auto& q : p) a.push_back(rationalJson(q));
  return a;
}

json goodNames(const GoodSpace& space, const std::vector<std::size_t>& goods) {
  json a = json::array();
  for (auto g : goods) a.push_back(space.goods[g]);
  return a;
}

json specJson(const ValuationSpec& s, const GoodSpace& space) {
  return std::visit(
      [&](const auto& n) -> json {
        using T = std::decay_t<decltype(n)>;
        json j;
        if constexpr (std::is_same_v<T, spec::Table>) {
          j["type"] = "table";
          j["entries"] = json::array();
          for (const auto& [x, val] : n.entries) j["entries"].push_back({{"bundle", vectorJson(x)}, {"value", rationalJson(val)}});
        } else if constexpr (std::is_same_v<T, spec::Linear>) {
          j["type"] = "linear";
          j["prices"] = pricesJson(n.prices);
        } else if constexpr (std::is_same_v<T, spec::ScaledMin> || std::is_same_v<T, spec::ScaledMinOfSum>) {
          j["type"] = std::is_same_v<T, spec::ScaledMin> ? "min" : "min_of_sum";
          j["scale"] = rationalJson(n.scale);
          j["goods"] = goodNames(space, n.goods);
          if (n.cap) j["cap"] = *n.cap;
        } else if constexpr (std::is_same_v<T, spec::Sum>) {
          j["type"] = "sum";
          j["children"] = json::array();
          for (const auto& c : n.children) j["children"].push_back(specJson(c, space));
        } else {
          j["type"] = "shift";
          j["child"] = specJson(*n.child, space);
          j["prices"] = pricesJson(n.prices);
        }
        return j;
      },
      s.node);
}

json economyJson(const Economy& e) {
  json j;
  j["goods"] = e.space.goods;
  j["M"] = e.space.maxUnits;
  j["agents"] = json::array();
  for (const auto& a : e.agents) {
    json ja;
    ja["id"] = a.id;
    if (a.utility && a.utilityLevel) {
      json u;
      u["level"] = rationalJson(*a.utilityLevel);
      if (a.utility->quasilinear) {
        u["quasilinear"] = specJson(a.utility->quasilinear->spec(), e.space);
      } else {
        u["curves"] = json::array();
        for (const auto& [x, c] : a.utility->curves) {
          json pts = json::array();
          for (const auto& [m, v] : c.points) pts.push_back({rationalJson(m), rationalJson(v)});
          u["curves"].push_back({{"bundle", vectorJson(x)}, {"points", pts}});
        }
      }
      ja["utility"] = u;
    } else {
      ja["valuation"] = specJson(a.valuation.spec(), e.space);
    }
    json w = json::object();
    for (std::size_t i = 0; i < e.space.size(); ++i) w[e.space.goods[i]] = a.endowment[i];
    ja["endowment"] = w;
    if (a.money) ja["money"] = rationalJson(*a.money);
    j["agents"].push_back(ja);
  }
  return j;
}

}  // namespace

Economy parseEconomy(std::string_view text, LoadOptions options) {
  const json doc = parseJson(text);
  Economy e;
  Reader root(doc, "economy", options, &e.notes);
  root.allowOnly({"goods", "M", "agents", "description"});

  std::vector<std::string> goods;
  for (const auto& g : root.field("goods").elements()) goods.push_back(g.string());
  const std::int64_t m = root.has("M") ? root.field("M").integer() : 1;
  try {
    e.space = GoodSpace(goods, m);
  } catch (const InvalidArgument& ex) {
    root.fail(ex.what());
  }

  for (const auto& ra : root.field("agents").elements()) {
    ra.allowOnly({"id", "valuation", "utility", "endowment", "money"});
    Agent a;
    const json& idNode = ra.field("id").node();
    a.id = idNode.is_number_integer() ? std::to_string(idNode.get<std::int64_t>()) : ra.field("id").string();
    if (ra.has("valuation") == ra.has("utility")) ra.fail("exactly one of 'valuation' or 'utility' is required");
    if (auto v = ra.optionalField("valuation"))
      a.valuation = readValuation(*v, e.space);
    else
      readUtility(ra.field("utility"), e.space, a, e.notes);
    a.endowment = IntVector(e.space.size(), 0);
    if (auto w = ra.optionalField("endowment")) {
      a.endowment = w->bundle(e.space);
      if (!e.space.inBox(a.endowment))
        w->fail(toString(a.endowment) + " exceeds the unit bound M = " + std::to_string(e.space.maxUnits));
    }
    if (auto money = ra.optionalField("money")) {
      a.money = money->rational();
      e.notes.push_back("agent " + a.id + ": money endowment " + toString(*a.money) +
                        " recorded; quasilinear demand does not depend on it");
    }
    e.agents.push_back(std::move(a));
  }
  e.validate();
  return e;
}

Economy loadEconomy(const std::filesystem::path& path, LoadOptions options) {
  return parseEconomy(readFile(path), options);
}

std::string serializeEconomy(const Economy& e) { return economyJson(e).dump(2) + "\n"; }

void saveEconomy(const Economy& e, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument(path.string() + ": cannot write file");
  out << serializeEconomy(e);
}

std::string serializeValuation(const Valuation& v) { return specJson(v.spec(), v.space()).dump(); }

std::vector<IntVector> parseVectors(std::string_view text, LoadOptions options) {
  const json doc = parseJson(text);
  Reader root(doc, "vectors-file", options, nullptr);
  root.allowOnly({"goods", "vectors", "description"});
  std::optional<std::size_t> width;
  if (auto g = root.optionalField("goods")) width = g->elements().size();
  std::vector<IntVector> out;
  for (const auto& rv : root.field("vectors").elements()) {
    IntVector x;
    for (const auto& c : rv.elements()) x.push_back(c.integer());
    if (!width) width = x.size();
    if (x.size() != *width) rv.fail("expected " + std::to_string(*width) + " components");
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<IntVector> loadVectors(const std::filesystem::path& path, LoadOptions options) {
  return parseVectors(readFile(path), options);
}

}  // namespace bundlecon
