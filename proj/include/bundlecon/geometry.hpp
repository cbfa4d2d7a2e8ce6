#pragma once

// Geometric fingerprint of a valuation: subdivision cells, demand-type
// vectors, compensated price effects with witnesses, pseudoconcavity.

#include <optional>
#include <vector>

#include "bundlecon/demand.hpp"
#include "bundlecon/polyhedra.hpp"

namespace bundlecon {

/// Cells of the regular subdivision induced by v, with bundles in place of
/// point indices.
struct DemandCell {
  std::vector<IntVector> bundles;  // sorted
  RationalVector supportingPrice;
  std::size_t dimension = 0;
};

/// With PriceDomain::Nonnegative only cells realized at some p >= 0 are kept,
/// each supported at a nonnegative price.
std::vector<DemandCell> demandCells(const Valuation& v, PriceDomain domain = PriceDomain::Unrestricted,
                                    Execution exec = Execution::Parallel);

/// Primitive, sign-normalized directions of all one-dimensional cells, sorted.
std::vector<IntVector> demandTypeVectors(const Valuation& v, PriceDomain domain = PriceDomain::Unrestricted,
                                         Execution exec = Execution::Parallel);
std::vector<IntVector> demandTypeVectors(const std::vector<DemandCell>& cells);

/// Demand is exactly {before} at `price`; lowering the price of `good` to
/// newPrice[good] makes `after` = before + delta demanded.
struct PriceEffect {
  IntVector delta;
  std::size_t good = 0;
  RationalVector price;
  RationalVector newPrice;
  IntVector before;
  IntVector after;
};

struct PriceEffectReport {
  /// Sorted by (delta, good).
  std::vector<PriceEffect> effects;
  /// Demand-type directions with no emitted effect, sorted.
  std::vector<IntVector> edgeOnly;
};

/// For each one-dimensional cell and each good moving along it, constructs
/// the effect of a fall in that good's price from just above the cell's
/// supporting price. Each witness is re-verified with two demand queries.
/// With onlyUnitBox, effects outside {-1,0,1}^I are dropped.
PriceEffectReport priceEffectSet(const Valuation& v, bool onlyUnitBox, PriceDomain domain = PriceDomain::Unrestricted,
                                 Execution exec = Execution::Parallel);
PriceEffectReport priceEffectSet(const Valuation& v, const std::vector<DemandCell>& cells, bool onlyUnitBox);

/// Sign-normalized effect directions, sorted and deduplicated.
std::vector<IntVector> effectDirections(const PriceEffectReport& report);

/// Re-checks a witness with two demand queries.
bool verifyPriceEffect(const Valuation& v, const PriceEffect& e);

struct PseudoconcavityVerdict {
  bool pseudoconcave = true;
  std::optional<RationalVector> price;
  std::optional<IntVector> missingPoint;
};

PseudoconcavityVerdict isPseudoconcave(const Valuation& v, PriceDomain domain = PriceDomain::Unrestricted,
                                       Execution exec = Execution::Parallel);
PseudoconcavityVerdict isPseudoconcave(const std::vector<DemandCell>& cells);

/// demandTypeVectors(v) is contained in D up to sign.
bool isOfDemandType(const Valuation& v, const std::vector<IntVector>& D, PriceDomain domain = PriceDomain::Unrestricted,
                    Execution exec = Execution::Parallel);

struct GeometryReport {
  PriceDomain domain = PriceDomain::Unrestricted;
  std::vector<DemandCell> cells;
  std::vector<IntVector> demandType;
  PriceEffectReport unitEffects;
  PseudoconcavityVerdict pseudoconcavity;
};

GeometryReport analyzeGeometry(const Valuation& v, PriceDomain domain = PriceDomain::Unrestricted,
                               Execution exec = Execution::Parallel);

}  // namespace bundlecon
