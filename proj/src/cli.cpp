#include "bundlecon/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bundlecon/consistency.hpp"
#include "bundlecon/demand.hpp"
#include "bundlecon/economy_io.hpp"
#include "bundlecon/equilibrium.hpp"
#include "bundlecon/error.hpp"
#include "bundlecon/reference_scenarios.hpp"

namespace bundlecon {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kFixedUtility = "fixed-utility-level analysis";

class Digest {
 public:
  void add(std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= 1099511628211ull;
    }
    hash_ ^= 0xff;  // separator
    hash_ *= 1099511628211ull;
  }
  std::string hex() const {
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << hash_;
    return ss.str();
  }

 private:
  std::uint64_t hash_ = 14695981039346656037ull;
};

json jr(const Rational& q) { return toString(q); }

json jv(const RationalVector& p) {
  json a = json::array();
  for (const auto& q : p) a.push_back(jr(q));
  return a;
}

json ji(const IntVector& x) { return json(x); }

json jis(const std::vector<IntVector>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(ji(x));
  return a;
}

std::string setText(const std::vector<IntVector>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + toString(xs[i]);
  return s + "}";
}

std::string setText(const std::vector<RationalVector>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + toString(xs[i]);
  return s + "}";
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  return out;
}

RationalVector parsePriceList(const std::string& csv, std::size_t expected, const char* what) {
  RationalVector p;
  for (const auto& t : split(csv, ',')) p.push_back(parseRational(t));
  if (p.size() != expected)
    throw InvalidArgument(std::string(what) + " has " + std::to_string(p.size()) + " components, expected " +
                          std::to_string(expected));
  return p;
}

IntVector parseIntList(const std::string& csv) {
  IntVector x;
  for (const auto& t : split(csv, ',')) {
    Rational q = parseRational(t);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw InvalidArgument("'" + t + "' is not an integer");
    x.push_back(q.get_num().get_si());
  }
  return x;
}

std::vector<IntVector> parseBundling(const std::string& text) {
  std::vector<IntVector> out;
  for (const auto& v : split(text, ';'))
    if (!v.empty()) out.push_back(parseIntList(v));
  return out;
}

std::string readText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string format = "text";
  bool lenient = false;
  std::string prices = "all";
  std::string file;
  std::string agent;
  std::string price;
  std::string bundling;
  std::string method = "both";
  std::string pair;
  std::string goods;
  std::string output;
  bool unitBox = false;
  std::uint64_t seed = 1;
  bool seedGiven = false;
};

PriceDomain priceDomain(const Options& o) {
  return o.prices == "nonnegative" ? PriceDomain::Nonnegative : PriceDomain::Unrestricted;
}

const char* domainName(PriceDomain d) { return d == PriceDomain::Nonnegative ? "nonnegative" : "all"; }

struct Context {
  Options opt;
  Digest digest;
  json result = json::object();
  std::ostringstream text;
  int exitCode = 0;

  Economy load(const std::string& path) {
    std::string body = readText(path);
    digest.add(body);
    Economy e = parseEconomy(body, LoadOptions{opt.lenient});
    const bool fixedUtility =
        std::any_of(e.agents.begin(), e.agents.end(), [](const Agent& a) { return a.utilityLevel.has_value(); });
    if (fixedUtility) {
      result["analysis"] = kFixedUtility;
      text << "[" << kFixedUtility << "]\n";
    }
    if (!e.notes.empty()) {
      result["notes"] = e.notes;
      for (const auto& n : e.notes) text << "note: " << n << "\n";
    }
    return e;
  }

  std::vector<std::size_t> selectedAgents(const Economy& e) const {
    if (opt.agent.empty()) {
      std::vector<std::size_t> all(e.agents.size());
      for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
      return all;
    }
    return {e.agentIndex(opt.agent)};
  }
};

void cmdDemand(Context& c) {
  Economy e = c.load(c.opt.file);
  const std::size_t j = e.agentIndex(c.opt.agent);
  const RationalVector p = parsePriceList(c.opt.price, e.space.size(), "--price");
  auto d = demandSet(e.agents[j].valuation, p);
  c.result["agent"] = e.agents[j].id;
  c.result["price"] = jv(p);
  c.result["demand"] = jis(d);
  c.text << "demand of agent " << e.agents[j].id << " at " << toString(p) << ": " << setText(d) << "\n";
}

void cmdBundledDemand(Context& c) {
  Economy e = c.load(c.opt.file);
  Bundling b(parseBundling(c.opt.bundling));
  if (b.size() != e.space.size()) throw InvalidArgument("--bundling must list one vector per good");
  const RationalVector pt = parsePriceList(c.opt.price, b.size(), "--price");
  c.result["bundling"] = jis(b.bundles());
  c.result["bundlePrices"] = jv(pt);
  c.result["goodsPrices"] = jv(b.goodsPrices(pt));
  c.text << "bundling " << setText(b.bundles()) << ", bundle prices " << toString(pt) << ", goods prices "
         << toString(b.goodsPrices(pt)) << "\n";
  json agents = json::array();
  for (auto j : c.selectedAgents(e)) {
    auto d = bundledDemand(e.agents[j].valuation, b, pt);
    json a;
    a["agent"] = e.agents[j].id;
    json ds = json::array();
    for (const auto& q : d) ds.push_back(jv(q));
    a["demand"] = ds;
    agents.push_back(a);
    c.text << "  agent " << e.agents[j].id << ": " << setText(d) << "\n";
  }
  c.result["agents"] = agents;
}

json effectJson(const PriceEffect& pe) {
  json j;
  j["delta"] = ji(pe.delta);
  j["good"] = pe.good;
  j["price"] = jv(pe.price);
  j["newPrice"] = jv(pe.newPrice);
  j["before"] = ji(pe.before);
  j["after"] = ji(pe.after);
  return j;
}

void cmdPriceEffects(Context& c) {
  Economy e = c.load(c.opt.file);
  const PriceDomain domain = priceDomain(c.opt);
  c.result["prices"] = domainName(domain);
  c.result["unitBox"] = c.opt.unitBox;
  json agents = json::array();
  for (auto j : c.selectedAgents(e)) {
    const Valuation& v = e.agents[j].valuation;
    auto cells = demandCells(v, domain);
    auto report = priceEffectSet(v, cells, c.opt.unitBox);
    auto columns = effectDirections(report);  // lexicographic
    json a;
    a["agent"] = e.agents[j].id;
    a["demandType"] = jis(demandTypeVectors(cells));
    a["columns"] = jis(columns);
    json effects = json::array();
    for (const auto& pe : report.effects) effects.push_back(effectJson(pe));
    a["effects"] = effects;
    a["edgeOnly"] = jis(report.edgeOnly);
    agents.push_back(a);

    c.text << "agent " << e.agents[j].id << ": " << columns.size() << " effect direction(s)\n";
    for (std::size_t i = 0; i < e.space.size(); ++i) {
      c.text << "  " << std::setw(10) << std::left << e.space.goods[i] << std::right;
      for (const auto& col : columns) c.text << std::setw(4) << col[i];
      c.text << "\n";
    }
    if (!report.edgeOnly.empty()) c.text << "  edge-only directions: " << setText(report.edgeOnly) << "\n";
  }
  c.result["agents"] = agents;
}

json typedJson(const Economy& e, const TypedDirection& t) {
  return json{{"agent", e.agents[t.agent].id}, {"direction", ji(t.direction)}};
}

json bundleWitnessJson(const Economy& e, const BundleWitness& w) {
  json j;
  j["bundling"] = jis(w.bundling);
  j["pair"] = json::array({w.first, w.second});
  j["positive"] = typedJson(e, w.positive);
  j["negative"] = typedJson(e, w.negative);
  return j;
}

void describeVerdict(Context& c, const Economy& e, const char* label, const ConsistencyVerdict& v) {
  c.text << label << ": " << (v.bundleConsistent ? "bundle-consistent" : "bundle-inconsistent") << "\n";
  if (v.witness) {
    const auto& w = *v.witness;
    c.text << "  bundling " << setText(w.bundling) << "\n  bundles " << toString(w.bundling[w.first]) << " and "
           << toString(w.bundling[w.second]) << ": complements for agent " << e.agents[w.positive.agent].id
           << " along " << toString(w.positive.direction) << ", substitutes for agent "
           << e.agents[w.negative.agent].id << " along " << toString(w.negative.direction) << "\n";
  }
  if (v.tuWitness) {
    c.text << "  singular minor rows " << toString(IntVector(v.tuWitness->rows.begin(), v.tuWitness->rows.end()))
           << " columns " << toString(IntVector(v.tuWitness->columns.begin(), v.tuWitness->columns.end()))
           << " determinant " << v.tuWitness->determinant.get_str() << "\n";
  }
}

json tuWitnessJson(const TuWitness& w) {
  json j;
  j["rows"] = w.rows;
  j["columns"] = w.columns;
  j["determinant"] = w.determinant.get_str();
  return j;
}

void cmdCheckConsistency(Context& c) {
  Economy e = c.load(c.opt.file);
  const PriceDomain domain = priceDomain(c.opt);
  if (c.opt.method != "direct" && c.opt.method != "tu" && c.opt.method != "both")
    throw UsageError("--method must be direct, tu or both");
  const auto vals = e.valuations();
  std::vector<GeometryReport> geometry;
  for (const auto& v : vals) geometry.push_back(analyzeGeometry(v, domain));

  c.result["prices"] = domainName(domain);
  json unit = json::array();
  bool allUnit = true;
  for (std::size_t j = 0; j < vals.size(); ++j) {
    auto u = isUnitConsistent(vals[j], domain);
    json ju{{"agent", e.agents[j].id}, {"consistent", u.consistent}};
    if (u.witness)
      ju["witness"] = {{"good", e.space.goods[u.witness->good]},
                       {"serial", u.witness->serial},
                       {"otherSerial", u.witness->otherSerial},
                       {"itemDirection", ji(u.witness->itemDirection)}};
    allUnit = allUnit && u.consistent;
    unit.push_back(ju);
    c.text << "agent " << e.agents[j].id << ": " << (u.consistent ? "unit-consistent" : "unit-inconsistent") << "\n";
  }
  c.result["unit"] = unit;
  c.result["unitConsistent"] = allUnit;

  std::vector<std::vector<IntVector>> types;
  for (const auto& g : geometry) types.push_back(g.demandType);
  json pairs = json::array();
  for (std::size_t i = 0; i < e.space.size(); ++i)
    for (std::size_t k = i + 1; k < e.space.size(); ++k) {
      auto pc = classifyGoodPair(types, i, k);
      pairs.push_back({{"goods", {e.space.goods[i], e.space.goods[k]}}, {"kind", toString(pc.kind)}});
      c.text << "pair " << e.space.goods[i] << "/" << e.space.goods[k] << ": " << toString(pc.kind) << "\n";
    }
  c.result["pairs"] = pairs;

  auto relevant = relevantBundles(geometry);
  c.result["relevantBundles"] = jis(relevant);
  c.text << "relevant bundles: " << setText(relevant) << "\n";

  std::optional<bool> verdict;
  if (c.opt.method != "tu") {
    auto v = checkBundleConsistencyDirect(vals, geometry);
    json d{{"consistent", v.bundleConsistent}};
    if (v.witness) d["witness"] = bundleWitnessJson(e, *v.witness);
    c.result["direct"] = d;
    describeVerdict(c, e, "direct check", v);
    verdict = v.bundleConsistent;
  }
  if (c.opt.method != "direct") {
    try {
      auto v = checkBundleConsistencyTU(vals, geometry);
      json t{{"consistent", v.bundleConsistent}};
      if (v.tuWitness) t["witness"] = tuWitnessJson(*v.tuWitness);
      c.result["tu"] = t;
      describeVerdict(c, e, "total unimodularity check", v);
      if (verdict && *verdict != v.bundleConsistent)
        throw InternalError("direct and total-unimodularity checks disagree");
      verdict = v.bundleConsistent;
    } catch (const UnitInconsistentInput& ex) {
      if (c.opt.method == "tu") throw;
      c.result["tu"] = {{"error", ex.kind()}, {"message", ex.what()}};
      c.text << "total unimodularity check skipped: " << ex.what() << "\n";
    }
  }
  c.result["bundleConsistent"] = verdict.value_or(false);
}

void cmdTuCheck(Context& c) {
  std::string body = readText(c.opt.file);
  c.digest.add(body);
  std::vector<IntVector> vectors;
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error&) {
    doc = json();  // reported with line and column below
  }
  if (doc.is_object() && doc.contains("agents")) {
    Economy e = parseEconomy(body, LoadOptions{c.opt.lenient});
    std::vector<GeometryReport> g;
    for (const auto& v : e.valuations()) g.push_back(analyzeGeometry(v, priceDomain(c.opt)));
    vectors = relevantBundles(g);
    c.result["source"] = "relevant bundles";
    c.result["prices"] = domainName(priceDomain(c.opt));
  } else {
    vectors = parseVectors(body, LoadOptions{c.opt.lenient});
    c.result["source"] = "vectors";
  }
  auto verdict = isTotallyUnimodular(vectors);
  c.result["vectors"] = jis(vectors);
  c.result["totallyUnimodular"] = verdict.totallyUnimodular;
  if (verdict.witness) c.result["witness"] = tuWitnessJson(*verdict.witness);
  c.text << (verdict.totallyUnimodular ? "true" : "false") << "\n";
  if (verdict.witness)
    c.text << "  minor rows " << toString(IntVector(verdict.witness->rows.begin(), verdict.witness->rows.end()))
           << " columns " << toString(IntVector(verdict.witness->columns.begin(), verdict.witness->columns.end()))
           << " determinant " << verdict.witness->determinant.get_str() << "\n";
}

json equilibriumJson(Context& c, const Economy& e) {
  auto r = findEquilibrium(e);
  json j;
  j["supply"] = ji(e.totalSupply());
  j["exists"] = r.exists;
  j["welfare"] = jr(r.ipValue);
  j["lyapunovMinimum"] = jr(r.lpValue);
  if (r.exists) {
    auto check = verifyEquilibrium(e, r.price, r.allocation);
    if (!check.ok) throw InternalError("extracted equilibrium failed verification");
    j["price"] = jv(r.price);
    json alloc = json::object();
    for (std::size_t a = 0; a < e.agents.size(); ++a) alloc[e.agents[a].id] = ji(r.allocation[a]);
    j["allocation"] = alloc;
    j["verified"] = true;
    c.text << "competitive equilibrium at price " << toString(r.price) << "\n";
    for (std::size_t a = 0; a < e.agents.size(); ++a)
      c.text << "  agent " << e.agents[a].id << " gets " << toString(r.allocation[a]) << "\n";
  } else {
    auto lp = lyapunovMinimum(e);
    j["gap"] = jr(r.lpValue - r.ipValue);
    j["lyapunovPrice"] = jv(lp.price);
    c.text << "no competitive equilibrium: max welfare " << toString(r.ipValue) << " < Lyapunov minimum "
           << toString(r.lpValue) << " (gap " << toString(r.lpValue - r.ipValue) << ", attained at price "
           << toString(lp.price) << ")\n";
  }
  return j;
}

void cmdEquilibrium(Context& c) {
  Economy e = c.load(c.opt.file);
  json r = equilibriumJson(c, e);
  for (auto& [k, v] : r.items()) c.result[k] = v;
}

// Random two-good table valuations with values in {0..4}, drawn until one
// has a complementary and another a substitutable direction.
std::pair<Valuation, Valuation> randomPair(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> value(0, 4);
  GoodSpace s({"k", "l"}, 1);
  auto draw = [&] {
    std::map<IntVector, Rational> t;
    for (const auto& x : s.box()) t.emplace(x, Rational(value(rng)));
    return tableValuation(s, std::move(t));
  };
  auto has = [](const Valuation& v, int sign) {
    for (const auto& d : demandTypeVectors(v))
      if (d[0] * d[1] * sign > 0) return true;
    return false;
  };
  std::optional<Valuation> comp, subs;
  for (int tries = 0; tries < 10000 && !(comp && subs); ++tries) {
    Valuation v = draw();
    if (!comp && has(v, 1))
      comp = v;
    else if (!subs && has(v, -1))
      subs = v;
  }
  if (!comp || !subs) throw InternalError("random search found no strict pair");
  return {*comp, *subs};
}

void cmdSynthesize(Context& c) {
  Valuation v1, v2;
  std::size_t k = 0, l = 1;
  if (!c.opt.file.empty()) {
    Economy e = c.load(c.opt.file);
    auto ids = split(c.opt.pair, ',');
    if (ids.size() != 2) throw UsageError("--pair needs two agent ids, e.g. --pair 1,2");
    v1 = e.agents[e.agentIndex(ids[0])].valuation;
    v2 = e.agents[e.agentIndex(ids[1])].valuation;
    if (!c.opt.goods.empty()) {
      auto g = split(c.opt.goods, ',');
      if (g.size() != 2) throw UsageError("--goods needs two good names");
      k = e.space.indexOf(g[0]);
      l = e.space.indexOf(g[1]);
    } else {
      // first pair of goods with the needed strict witnesses
      bool found = false;
      for (std::size_t i = 0; i < e.space.size() && !found; ++i)
        for (std::size_t m = i + 1; m < e.space.size() && !found; ++m) {
          try {
            synthesizeInconsistencyEconomy(v1, v2, i, m);
            k = i;
            l = m;
            found = true;
          } catch (const NoStrictWitness&) {
          }
        }
      if (!found) throw NoStrictWitness("no pair of goods is complementary for the first and substitutable for the second");
    }
  } else {
    c.digest.add(std::to_string(c.opt.seed));
    std::tie(v1, v2) = randomPair(c.opt.seed);
    c.result["seed"] = c.opt.seed;
    c.result["first"] = json::parse(serializeValuation(v1));
    c.result["second"] = json::parse(serializeValuation(v2));
  }
  Economy syn = synthesizeInconsistencyEconomy(v1, v2, k, l);
  c.result["goods"] = {v1.space().goods[k], v1.space().goods[l]};
  c.result["economy"] = json::parse(serializeEconomy(syn));
  c.text << "synthesized economy on goods " << v1.space().goods[k] << ", " << v1.space().goods[l] << "\n";
  for (const auto& a : syn.agents) c.text << "  agent " << a.id << " endowed " << toString(a.endowment) << "\n";
  c.result["equilibrium"] = equilibriumJson(c, syn);
  if (!c.opt.output.empty()) {
    saveEconomy(syn, c.opt.output);
    c.text << "written to " << c.opt.output << "\n";
  }
}

void cmdPaperExamples(Context& c) {
  auto outcomes = runReferenceScenarios();
  json rows = json::array();
  bool all = true;
  for (const auto& o : outcomes) {
    rows.push_back({{"name", o.name}, {"passed", o.passed}, {"expected", o.expected}, {"actual", o.actual}});
    all = all && o.passed;
    c.text << (o.passed ? "PASS " : "FAIL ") << o.name << "\n";
    if (!o.passed) c.text << "     expected: " << o.expected << "\n     actual:   " << o.actual << "\n";
  }
  c.result["scenarios"] = rows;
  c.result["passed"] = all;
  c.text << (all ? "all scenarios pass\n" : "scenario mismatch\n");
  if (!all) c.exitCode = 1;
}

}  // namespace

CommandReport runCommand(const std::vector<std::string>& args) {
  Context c;
  CLI::App app{"Exact analysis of exchange economies with indivisible goods", "bundlecon"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", c.opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--lenient", c.opt.lenient, "Ignore unknown fields in input files");
  app.add_option("--prices", c.opt.prices, "Price domain: all (p in R^I) or nonnegative (p >= 0)")
      ->check(CLI::IsMember({"all", "nonnegative"}));

  auto* demand = app.add_subcommand("demand", "Demand set of one agent at a price");
  auto* bundled = app.add_subcommand("bundled-demand", "Demand in the coordinates of a bundling");
  auto* effects = app.add_subcommand("price-effects", "Price-effect directions with verified witnesses");
  auto* consistency = app.add_subcommand("check-consistency", "Unit and bundle consistency verdicts");
  auto* tu = app.add_subcommand("tu-check", "Total unimodularity of a vector file or of relevant bundles");
  auto* eq = app.add_subcommand("equilibrium", "Competitive equilibrium or a nonexistence certificate");
  auto* syn = app.add_subcommand("synthesize-counterexample", "Three-agent economy without equilibrium");
  auto* paper = app.add_subcommand("paper-examples", "Run the embedded scenario regression table");

  for (auto* s : {demand, bundled, effects, consistency, tu, eq}) s->add_option("file", c.opt.file, "Input file")->required();
  syn->add_option("file", c.opt.file, "Economy file supplying the two valuations");
  demand->add_option("--agent", c.opt.agent, "Agent id")->required();
  demand->add_option("--price", c.opt.price, "Prices, comma separated rationals")->required();
  bundled->add_option("--agent", c.opt.agent, "Agent id (default: all)");
  bundled->add_option("--price", c.opt.price, "Bundle prices, comma separated")->required();
  bundled->add_option("--bundling", c.opt.bundling, "Bundles, e.g. \"1,0,0;1,1,0;0,0,1\"")->required();
  effects->add_option("--agent", c.opt.agent, "Agent id (default: all)");
  effects->add_flag("--unit-box", c.opt.unitBox, "Keep only effects in {-1,0,1}^I");
  consistency->add_option("--method", c.opt.method, "direct, tu or both");
  syn->add_option("--pair", c.opt.pair, "Agent ids of the complementary and the substitutable valuation");
  syn->add_option("--goods", c.opt.goods, "The two goods, comma separated");
  syn->add_option("--seed", c.opt.seed, "Seed for drawing random valuations when no file is given");
  syn->add_option("--output", c.opt.output, "Write the synthesized economy to this file");

  CommandReport report;
  for (const auto& a : args) c.digest.add(a);
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (const CLI::CallForHelp&) {
      report.command = "help";
      report.text = app.help();
      report.json = json{{"command", "help"}, {"help", report.text}}.dump(2);
      report.inputsDigest = c.digest.hex();
      return report;
    } catch (const CLI::ParseError& e) {
      report.jsonFormat = c.opt.format == "json";
      throw UsageError(std::string(e.what()) + "\n\n" + app.help());
    }
    report.jsonFormat = c.opt.format == "json";
    auto* chosen = app.get_subcommands().front();
    report.command = chosen->get_name();

    if (chosen == demand) cmdDemand(c);
    else if (chosen == bundled) cmdBundledDemand(c);
    else if (chosen == effects) cmdPriceEffects(c);
    else if (chosen == consistency) cmdCheckConsistency(c);
    else if (chosen == tu) cmdTuCheck(c);
    else if (chosen == eq) cmdEquilibrium(c);
    else if (chosen == syn) cmdSynthesize(c);
    else if (chosen == paper) cmdPaperExamples(c);
    report.exitCode = c.exitCode;
  } catch (const Error& e) {
    c.result = json{{"error", e.kind()}, {"message", e.what()}};
    c.text.str("");
    c.text << "error (" << e.kind() << "): " << e.what() << "\n";
    report.exitCode = 2;
  } catch (const std::exception& e) {
    c.result = json{{"error", "InternalError"}, {"message", e.what()}};
    c.text.str("");
    c.text << "internal error: " << e.what() << "\n";
    report.exitCode = 1;
  }
  report.inputsDigest = c.digest.hex();
  json out;
  out["command"] = report.command;
  out["inputsDigest"] = report.inputsDigest;
  out["exitCode"] = report.exitCode;
  out["result"] = c.result;
  report.json = out.dump(2) + "\n";
  report.text = c.text.str();
  return report;
}

}  // namespace bundlecon
