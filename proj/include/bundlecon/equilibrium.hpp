#pragma once

// Welfare optimum by enumeration, the Lyapunov LP, equilibrium extraction
// and verification.

#include <optional>
#include <string>
#include <vector>

#include "bundlecon/preferences.hpp"

namespace bundlecon {

/// One bundle per agent, in agent order.
using Allocation = std::vector<IntVector>;

struct WelfareResult {
  Rational value;
  Integer count;                       // number of optimal allocations
  std::vector<Allocation> maximizers;  // first 64 in lexicographic order
};

inline constexpr std::size_t kMaxReportedAllocations = 64;

/// max sum_j V^j(x^j) over allocations with sum_j x^j = W. Throws
/// InfeasibleSupply if no such allocation exists.
WelfareResult welfareOptimum(const Economy& e, Execution exec = Execution::Parallel);

struct LyapunovResult {
  Rational value;
  RationalVector price;
};

/// min over p of sum_j max_x (V^j(x) - p.x) + p.W, solved exactly as an LP in
/// (p, u) with u_j >= V^j(x) - p.x.
LyapunovResult lyapunovMinimum(const Economy& e);

struct EquilibriumResult {
  bool exists = false;
  RationalVector price;   // when exists
  Allocation allocation;  // when exists
  Rational ipValue;
  Rational lpValue;
};

/// Equilibrium at the Lyapunov-minimizing price when the welfare IP and LP
/// values agree; otherwise a nonexistence certificate (ip < lp).
EquilibriumResult findEquilibrium(const Economy& e, Execution exec = Execution::Parallel);

struct Violation {
  enum class Kind { NotFeasible, NotDemanded, NotClearing };
  Kind kind = Kind::NotDemanded;
  std::size_t agent = 0;      // NotFeasible, NotDemanded
  IntVector better;           // NotDemanded: a strictly better bundle
  IntVector excess;           // NotClearing: sum x - sum w
  std::string describe(const Economy& e) const;
};

struct EquilibriumCheck {
  bool ok = true;
  std::vector<Violation> violations;
};

EquilibriumCheck verifyEquilibrium(const Economy& e, const RationalVector& p, const Allocation& a);

}  // namespace bundlecon
