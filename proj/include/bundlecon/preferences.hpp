#pragma once

// Valuations over finite bundle domains, the linear-shift transform, the
// Hicksian adapter for money-utility curves, and the Economy type.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bundlecon/numeric.hpp"
#include "bundlecon/polyhedra.hpp"

namespace bundlecon {

/// Goods and the per-good unit bound M; bundles live in {0..M}^I.
struct GoodSpace {
  std::vector<std::string> goods;
  std::int64_t maxUnits = 1;

  GoodSpace() = default;
  GoodSpace(std::vector<std::string> names, std::int64_t m);

  std::size_t size() const { return goods.size(); }
  /// Throws InvalidArgument for unknown names.
  std::size_t indexOf(const std::string& name) const;
  bool inBox(const IntVector& x) const;
  /// Every bundle of {0..M}^I in lexicographic order.
  std::vector<IntVector> box() const;

  bool operator==(const GoodSpace&) const = default;
};

struct ValuationSpec;

namespace spec {

/// Explicit values; the keys are the domain.
struct Table {
  std::map<IntVector, Rational> entries;
};

/// p . x
struct Linear {
  RationalVector prices;
};

/// scale * min(x_g for g in goods, cap)
struct ScaledMin {
  Rational scale;
  std::vector<std::size_t> goods;
  std::optional<std::int64_t> cap;
};

/// scale * min(sum of x_g for g in goods, cap)
struct ScaledMinOfSum {
  Rational scale;
  std::vector<std::size_t> goods;
  std::optional<std::int64_t> cap;
};

struct Sum {
  std::vector<ValuationSpec> children;
};

/// child(x) + p . x with p >= 0
struct Shift {
  std::shared_ptr<const ValuationSpec> child;
  RationalVector prices;
};

}  // namespace spec

struct ValuationSpec {
  std::variant<spec::Table, spec::Linear, spec::ScaledMin, spec::ScaledMinOfSum, spec::Sum, spec::Shift> node;
};

/// A valuation spec materialized over its domain. Cheap to copy.
class Valuation {
 public:
  Valuation() = default;
  /// Validates the spec against the space and tabulates it. The domain is
  /// the full box unless a Table restricts it (Sum intersects domains).
  Valuation(GoodSpace space, ValuationSpec spec);

  const GoodSpace& space() const { return data_->space; }
  const ValuationSpec& spec() const { return data_->spec; }
  std::size_t numGoods() const { return data_->space.size(); }

  /// Sorted lexicographically; values() is parallel to it.
  const std::vector<IntVector>& domain() const { return data_->domain; }
  const std::vector<Rational>& values() const { return data_->values; }

  std::optional<std::size_t> indexOf(const IntVector& x) const;
  bool contains(const IntVector& x) const { return indexOf(x).has_value(); }

  /// Throws OutOfDomain.
  Rational value(const IntVector& x) const;

  LiftedPointSet lifted() const;

 private:
  struct Data {
    GoodSpace space;
    ValuationSpec spec;
    std::vector<IntVector> domain;
    std::vector<Rational> values;
    std::map<IntVector, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

Rational evalValuation(const Valuation& v, const IntVector& x);

/// V'(x) = V(x) + p . x. Throws NegativeShift if some p_i < 0.
Valuation linearShift(const Valuation& v, const RationalVector& p);

// builders
Valuation tableValuation(const GoodSpace& space, std::map<IntVector, Rational> entries);
Valuation zeroValuation(const GoodSpace& space);
Valuation linearValuation(const GoodSpace& space, RationalVector prices);
Valuation scaledMinValuation(const GoodSpace& space, Rational scale, std::vector<std::size_t> goods,
                             std::optional<std::int64_t> cap = std::nullopt);
Valuation scaledMinOfSumValuation(const GoodSpace& space, Rational scale, std::vector<std::size_t> goods,
                                  std::optional<std::int64_t> cap = std::nullopt);

/// Strictly increasing piecewise-linear map from money to utility, given by
/// breakpoints (money, utility). Its range is [first utility, last utility].
struct MoneyCurve {
  std::vector<std::pair<Rational, Rational>> points;

  /// Throws InvalidArgument unless both coordinates strictly increase.
  void validate() const;
  /// Money needed to reach utility u, or nullopt outside the range.
  std::optional<Rational> inverse(const Rational& u) const;
};

/// Money-utility per bundle: either quasilinear (u = x0 + V(x)) or one
/// tabulated curve u = f_x(x0) per bundle.
struct UtilitySpec {
  GoodSpace space;
  std::optional<Valuation> quasilinear;
  std::map<IntVector, MoneyCurve> curves;

  static UtilitySpec fromValuation(Valuation v);
  static UtilitySpec fromCurves(GoodSpace space, std::map<IntVector, MoneyCurve> curves);
};

/// Table valuation with entry -f_x^{-1}(u) per bundle. Throws
/// UtilityOutOfRange naming the first bundle whose curve misses u.
Valuation hicksianValuation(const UtilitySpec& utility, const Rational& targetUtility);

struct Agent {
  std::string id;
  Valuation valuation;
  IntVector endowment;
  /// Accepted from input and reported; demand never depends on it.
  std::optional<Rational> money;
  /// Set for agents given by money-utility curves: the analysis runs on the
  /// Hicksian valuation at this utility level.
  std::optional<Rational> utilityLevel;
  std::optional<UtilitySpec> utility;
};

struct Economy {
  GoodSpace space;
  std::vector<Agent> agents;
  /// Diagnostics attached at load time (ignored fields, money endowments).
  std::vector<std::string> notes;

  /// Throws SchemaError on empty agent lists, foreign goods spaces or
  /// endowments outside the agent's domain.
  void validate() const;
  IntVector totalSupply() const;
  std::size_t agentIndex(const std::string& id) const;
  std::vector<Valuation> valuations() const;
};

}  // namespace bundlecon
