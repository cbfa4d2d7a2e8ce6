#pragma once

// Data-parallel inner loops. Each kernel has a serial reference path and an
// OpenMP path selected by Execution; both return identical results.

#include <vector>

#include "bundlecon/numeric.hpp"

namespace bundlecon::kernels {

/// A supporting hyperplane n . y <= h of a full-dimensional point set,
/// touching it exactly at `members` (ascending point indices).
struct Facet {
  std::vector<std::size_t> members;
  std::vector<Integer> normal;  // primitive, oriented outward

  bool operator<(const Facet& o) const { return members < o.members; }
};

/// Facets of conv(points) for points spanning R^D (D = point length >= 1),
/// by enumeration of all D-subsets. When `upperOnly`, only facets whose
/// outward normal has a positive last coordinate are kept. When every point
/// lies on one hyperplane, that hyperplane is returned once, oriented with a
/// positive last coordinate. Output is sorted by member set.
std::vector<Facet> enumerateFacets(const std::vector<std::vector<Integer>>& points, bool upperOnly,
                                   Execution exec = Execution::Parallel);

}  // namespace bundlecon::kernels
