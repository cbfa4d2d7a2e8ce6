#pragma once

#include <string>
#include <vector>

#include "bundlecon/numeric.hpp"

namespace bundlecon {

enum class Relation { LessEqual, Equal, GreaterEqual };

/// A linear program over rational data. Variables are nonnegative unless
/// flagged free.
struct LinearProgram {
  enum class Sense { Maximize, Minimize };

  struct Constraint {
    RationalVector coefficients;
    Relation relation = Relation::LessEqual;
    Rational rhs;
  };

  Sense sense = Sense::Maximize;
  RationalVector objective;
  std::vector<bool> freeVariable;
  std::vector<Constraint> constraints;

  explicit LinearProgram(std::size_t numVariables = 0, Sense s = Sense::Maximize)
      : sense(s), objective(numVariables, Rational(0)), freeVariable(numVariables, false) {}

  std::size_t numVariables() const { return objective.size(); }

  void addConstraint(RationalVector coefficients, Relation relation, Rational rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string toString(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RationalVector assignment;
  /// One multiplier per constraint; certifies optimality (b . y == value).
  RationalVector duals;
};

/// Two-phase dense simplex over exact rationals with Bland's rule. The dual
/// certificate of an Optimal result is verified before returning.
LpResult solveLP(const LinearProgram& lp);

}  // namespace bundlecon
