#pragma once

// Built-in economies used by the regression suite and the data/ files.

#include <vector>

#include "bundlecon/preferences.hpp"

namespace bundlecon::scenarios {

/// scale * max over 0 <= y <= x_shared of
///   [min(x_left, y, cap) + min(x_shared - y, x_right, cap)]
/// tabulated on the box bounded componentwise by `upper`.
Valuation maxSplitValuation(const GoodSpace& space, Rational scale, std::size_t left, std::size_t shared,
                            std::size_t right, std::int64_t cap, const IntVector& upper);

/// Three agents each wanting a different pair of three goods.
Economy threeCycle();
/// threeCycle with the third agent wanting all three goods together.
Economy consecutive();
/// Four goods, six agents: additive, four adjacent pairs, and all four.
Economy dkl();
/// The nine price-effect directions of dkl(), in presentation order.
std::vector<IntVector> dklColumns();
/// Five goods: four substitute pairs along a path plus complements at the ends.
Economy hiddenComplement();
/// One agent with the max-split multiunit valuation on apple, banana (M=2), coconut.
Economy multiunitSplit();

/// Single good, M = 2, V = (0, 0, 3), endowment 1.
Economy nonConsecutiveSingleGood();

}  // namespace bundlecon::scenarios
