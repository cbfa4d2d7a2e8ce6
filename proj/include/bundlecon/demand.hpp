#pragma once

// Quasilinear demand by exhaustive scan, bundled demand under a change of
// basis, and the item expansion used for multiunit analysis.

#include <utility>
#include <vector>

#include "bundlecon/preferences.hpp"

namespace bundlecon {

/// argmax over the domain of V(x) - p . x, sorted. Never empty.
std::vector<IntVector> demandSet(const Valuation& v, const RationalVector& p);

/// A basis of {-1,0,1}^I vectors and its change-of-basis matrices.
class Bundling {
 public:
  /// Throws InvalidArgument on bad entries or wrong counts and
  /// SingularBundling when the vectors are dependent.
  explicit Bundling(std::vector<IntVector> bundles);

  const std::vector<IntVector>& bundles() const { return bundles_; }
  const IntMatrix& matrix() const { return g_; }
  const Integer& determinant() const { return det_; }
  const RationalMatrix& inverse() const { return inverse_; }
  std::size_t size() const { return bundles_.size(); }

  /// Coordinates q with G q = x.
  RationalVector coordinates(const IntVector& x) const;
  /// Goods prices G^{-T} pTilde that make bundle prices pTilde.
  RationalVector goodsPrices(const RationalVector& bundlePrices) const;

 private:
  std::vector<IntVector> bundles_;
  IntMatrix g_;
  Integer det_;
  RationalMatrix inverse_;
};

/// G^{-1} . demandSet(v, G^{-T} pTilde), in the order of the goods bundles.
std::vector<RationalVector> bundledDemand(const Valuation& v, const Bundling& b, const RationalVector& bundlePrices);

/// Items (i, m), m = 1..M, as 0/1 coordinates; item index i*M + (m-1).
struct ItemExpansion {
  Valuation items;
  std::size_t numGoods = 0;
  std::int64_t maxUnits = 1;

  std::size_t itemIndex(std::size_t good, std::int64_t serial) const {
    return good * static_cast<std::size_t>(maxUnits) + static_cast<std::size_t>(serial - 1);
  }
  std::pair<std::size_t, std::int64_t> itemOf(std::size_t index) const {
    return {index / static_cast<std::size_t>(maxUnits), static_cast<std::int64_t>(index % maxUnits) + 1};
  }
  /// Units per good.
  IntVector pi(const IntVector& itemBundle) const;
  /// Lowest-serial items for each good's quantity.
  IntVector tau(const IntVector& goodsBundle) const;
};

/// V(pi(x)) on every 0/1 item bundle whose pi lies in the domain.
ItemExpansion expandToItems(const Valuation& v);

struct DemandedQuantities {
  std::vector<std::int64_t> quantities;  // ascending, distinct
  bool consecutive = true;
};

DemandedQuantities demandedQuantities(const Valuation& v, const RationalVector& p, std::size_t good);

}  // namespace bundlecon
