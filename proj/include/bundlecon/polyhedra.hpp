#pragma once

// Regular subdivisions of lifted point sets, integer points in polytopes,
// and the LP-based edge test.

#include <optional>
#include <vector>

#include "bundlecon/lp.hpp"
#include "bundlecon/numeric.hpp"

namespace bundlecon {

struct LiftedPoint {
  IntVector x;
  Rational lift;
};

/// The configuration {(x, V(x))}. Points are distinct in x.
struct LiftedPointSet {
  std::size_t dimension = 0;
  std::vector<LiftedPoint> points;

  LiftedPointSet() = default;
  LiftedPointSet(std::size_t dim, std::vector<LiftedPoint> pts);
};

/// A cell of the regular subdivision: exactly the maximizers of
/// lift(x) - p . x at p = supportingPrice.
struct Cell {
  std::vector<std::size_t> members;  // ascending point indices
  RationalVector supportingPrice;
  std::size_t dimension = 0;
};

/// Maximal cells (facets of the upper hull), sorted by member set. Each
/// facet's price is unique on the affine hull of the x-coordinates and set
/// to zero on coordinates that the affine hull leaves free.
std::vector<Cell> upperHullFacets(const LiftedPointSet& pts, Execution exec = Execution::Parallel);

/// Every cell of the subdivision, every dimension, sorted by (dimension,
/// members). Non-maximal cells are supported at the average of the prices of
/// the maximal cells containing them when that average supports the cell
/// exactly, and otherwise at a perturbation of one maximal cell's price
/// along the cell's exposing functional.
std::vector<Cell> faceLattice(const LiftedPointSet& pts, Execution exec = Execution::Parallel);

/// Indices maximizing lift(x) - p . x.
std::vector<std::size_t> maximizers(const LiftedPointSet& pts, const RationalVector& p);

/// Affine dimension of a set of integer points (-1 for the empty set).
int affineDimension(const std::vector<IntVector>& pts);

/// Whether z lies in conv(vertices), decided by an exact LP.
bool inConvexHull(const std::vector<IntVector>& vertices, const IntVector& z);

/// All integer points of conv(vertices), sorted.
std::vector<IntVector> integerPointsInHull(const std::vector<IntVector>& vertices);

/// Prices considered when asking which cells are realized. Nonnegative
/// restricts to p >= 0 (the free-disposal reading for monotone valuations).
enum class PriceDomain { Unrestricted, Nonnegative };

/// A price in the domain at which exactly `members` maximize
/// lift(x) - p . x, found by LP; nullopt when none exists.
std::optional<RationalVector> priceRealizing(const LiftedPointSet& pts, const std::vector<std::size_t>& members,
                                             PriceDomain domain);

/// Decides by LP whether some price makes points a and b maximizers with
/// every maximizer on the line through them. Returns that one-dimensional
/// cell when it exists.
std::optional<Cell> oneDimensionalCellThrough(const LiftedPointSet& pts, std::size_t a, std::size_t b,
                                              PriceDomain domain = PriceDomain::Unrestricted);

}  // namespace bundlecon
