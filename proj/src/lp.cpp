#include "bundlecon/lp.hpp"

#include <algorithm>

namespace bundlecon {

void LinearProgram::addConstraint(RationalVector coefficients, Relation relation, Rational rhs) {
  if (coefficients.size() != numVariables()) throw InvalidArgument("constraint width mismatch");
  constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
}

std::string toString(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

namespace {

class Tableau {
 public:
  std::vector<RationalVector> rows;  // each row: columns..., rhs
  std::vector<std::size_t> basis;
  RationalVector reduced;  // c_j - c_B B^-1 A_j
  std::size_t numCols = 0;

  Rational& rhs(std::size_t r) { return rows[r][numCols]; }

  void setObjective(const RationalVector& cost) {
    reduced = cost;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational& cb = cost[basis[r]];
      if (cb == 0) continue;
      for (std::size_t c = 0; c < numCols; ++c)
        if (rows[r][c] != 0) reduced[c] -= cb * rows[r][c];
    }
  }

  Rational objectiveValue(const RationalVector& cost) const {
    Rational v = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) v += cost[basis[r]] * rows[r][numCols];
    return v;
  }

  void pivot(std::size_t pr, std::size_t pc) {
    RationalVector& prow = rows[pr];
    const Rational inv = 1 / prow[pc];
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c <= numCols; ++c)
      if (prow[c] != 0) {
        prow[c] *= inv;
        nz.push_back(c);
      }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pr || rows[r][pc] == 0) continue;
      const Rational f = rows[r][pc];
      for (auto c : nz) rows[r][c] -= f * prow[c];
    }
    if (reduced[pc] != 0) {
      const Rational f = reduced[pc];
      for (auto c : nz)
        if (c < numCols) reduced[c] -= f * prow[c];
    }
    basis[pr] = pc;
  }

  /// Bland's rule. Returns false when unbounded.
  bool optimize(const std::vector<bool>& barred) {
    while (true) {
      std::size_t enter = numCols;
      for (std::size_t c = 0; c < numCols; ++c)
        if (!barred[c] && reduced[c] > 0) {
          enter = c;
          break;
        }
      if (enter == numCols) return true;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][enter] <= 0) continue;
        Rational ratio = rows[r][numCols] / rows[r][enter];
        if (leave == rows.size() || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }
};

void verifyDualCertificate(const LinearProgram& lp, const RationalVector& cost, const Rational& value,
                           const RationalVector& y) {
  // cost is the maximization objective; lp supplies constraint data
  Rational by = 0;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& con = lp.constraints[i];
    by += con.rhs * y[i];
    if ((con.relation == Relation::LessEqual && y[i] < 0) || (con.relation == Relation::GreaterEqual && y[i] > 0))
      throw InternalError("simplex dual certificate has a wrong-signed multiplier");
  }
  for (std::size_t j = 0; j < lp.numVariables(); ++j) {
    Rational aty = 0;
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) aty += lp.constraints[i].coefficients[j] * y[i];
    if (lp.freeVariable[j] ? aty != cost[j] : aty < cost[j])
      throw InternalError("simplex dual certificate is infeasible");
  }
  if (by != value) throw InternalError("simplex dual objective differs from primal objective");
}

}  // namespace

LpResult solveLP(const LinearProgram& lp) {
  const std::size_t n = lp.numVariables();
  const std::size_t m = lp.constraints.size();
  if (lp.freeVariable.size() != n) throw InvalidArgument("free-variable flags do not match variable count");

  // internal form: maximize cost . x
  RationalVector cost = lp.objective;
  if (lp.sense == LinearProgram::Sense::Minimize)
    for (auto& c : cost) c = -c;

  // column layout: structural (free vars split), then one aux per row, then artificials
  std::vector<std::size_t> posCol(n), negCol(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    posCol[j] = cols++;
    if (lp.freeVariable[j]) negCol[j] = cols++;
  }

  std::vector<int> flip(m, 1);
  std::vector<Relation> rel(m);
  for (std::size_t i = 0; i < m; ++i) {
    rel[i] = lp.constraints[i].relation;
    if (lp.constraints[i].rhs < 0) {
      flip[i] = -1;
      if (rel[i] == Relation::LessEqual) rel[i] = Relation::GreaterEqual;
      else if (rel[i] == Relation::GreaterEqual) rel[i] = Relation::LessEqual;
    }
  }
  std::vector<std::size_t> auxCol(m, SIZE_MAX), identityCol(m);
  for (std::size_t i = 0; i < m; ++i)
    if (rel[i] != Relation::Equal) auxCol[i] = cols++;
  const std::size_t firstArtificial = cols;
  for (std::size_t i = 0; i < m; ++i) identityCol[i] = rel[i] == Relation::LessEqual ? auxCol[i] : cols++;
  const std::size_t total = cols;

  Tableau t;
  t.numCols = total;
  t.rows.assign(m, RationalVector(total + 1, Rational(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& con = lp.constraints[i];
    const Rational s = flip[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (con.coefficients[j] == 0) continue;
      t.rows[i][posCol[j]] = s * con.coefficients[j];
      if (negCol[j] != SIZE_MAX) t.rows[i][negCol[j]] = -s * con.coefficients[j];
    }
    if (auxCol[i] != SIZE_MAX) t.rows[i][auxCol[i]] = rel[i] == Relation::LessEqual ? 1 : -1;
    t.rows[i][identityCol[i]] = 1;
    t.rows[i][total] = s * con.rhs;
    t.basis[i] = identityCol[i];
  }

  std::vector<bool> barred(total, false);
  LpResult result;

  // phase 1
  RationalVector phase1(total, Rational(0));
  for (std::size_t c = firstArtificial; c < total; ++c) phase1[c] = -1;
  t.setObjective(phase1);
  t.optimize(barred);
  if (t.objectiveValue(phase1) < 0) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (t.basis[r] < firstArtificial) continue;
    for (std::size_t c = 0; c < firstArtificial; ++c)
      if (t.rows[r][c] != 0) {
        t.pivot(r, c);
        break;
      }
  }

  // phase 2
  for (std::size_t c = firstArtificial; c < total; ++c) barred[c] = true;
  RationalVector phase2(total, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    phase2[posCol[j]] = cost[j];
    if (negCol[j] != SIZE_MAX) phase2[negCol[j]] = -cost[j];
  }
  t.setObjective(phase2);
  if (!t.optimize(barred)) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  RationalVector colValue(total, Rational(0));
  for (std::size_t r = 0; r < m; ++r) colValue[t.basis[r]] = t.rows[r][total];
  result.assignment.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    result.assignment[j] = colValue[posCol[j]];
    if (negCol[j] != SIZE_MAX) result.assignment[j] -= colValue[negCol[j]];
  }
  Rational internalValue = t.objectiveValue(phase2);

  RationalVector y(m);
  for (std::size_t i = 0; i < m; ++i) y[i] = -t.reduced[identityCol[i]] * flip[i];
  verifyDualCertificate(lp, cost, internalValue, y);

  result.status = LpStatus::Optimal;
  if (lp.sense == LinearProgram::Sense::Minimize) {
    result.value = -internalValue;
    for (auto& v : y) v = -v;
  } else {
    result.value = internalValue;
  }
  result.duals = std::move(y);
  return result;
}

}  // namespace bundlecon
