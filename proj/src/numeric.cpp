#include "bundlecon/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

#include "bundlecon/combinatorics.hpp"

namespace bundlecon {

Rational makeRational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool allDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parseInteger(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!allDigits(s)) throw InvalidArgument("not a rational number: '" + std::string(whole) + "'");
  Integer v(std::string(s), 10);
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational parseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parseInteger(text.substr(0, slash), text);
    std::string_view den = text.substr(slash + 1);
    if (!allDigits(den)) throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
    return makeRational(num, Integer(std::string(den), 10));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view intPart = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = !intPart.empty() && intPart[0] == '-';
    if (!intPart.empty() && (intPart[0] == '-' || intPart[0] == '+')) intPart.remove_prefix(1);
    if ((intPart.empty() && frac.empty()) || (!intPart.empty() && !allDigits(intPart)) ||
        (!frac.empty() && !allDigits(frac)))
      throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer whole = intPart.empty() ? Integer(0) : Integer(std::string(intPart), 10);
    Integer fracv = frac.empty() ? Integer(0) : Integer(std::string(frac), 10);
    Integer num = whole * scale + fracv;
    return makeRational(neg ? Integer(-num) : num, scale);
  }
  return makeRational(parseInteger(text, text));
}

std::string toString(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string toString(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string toString(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + toString(v[i]);
  return s + ")";
}

Rational dot(const RationalVector& p, const IntVector& x) {
  if (p.size() != x.size()) throw InvalidArgument("price/bundle dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) s += p[i] * Rational(static_cast<long>(x[i]));
  return s;
}

RationalVector toRational(const IntVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (auto c : v) out.emplace_back(static_cast<long>(c));
  return out;
}

std::int64_t contentOf(const IntVector& v) {
  std::int64_t g = 0;
  for (auto c : v) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

IntVector primitiveNormalized(const IntVector& v) {
  std::int64_t g = contentOf(v);
  if (g == 0) return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  auto first = std::find_if(out.begin(), out.end(), [](auto c) { return c != 0; });
  if (*first < 0)
    for (auto& c : out) c = -c;
  return out;
}

IntVector unitVector(std::size_t dim, std::size_t index) {
  IntVector e(dim, 0);
  e.at(index) = 1;
  return e;
}

Integer bareissDeterminant(const IntMatrix& input) {
  if (!input.square()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? Integer(m(n - 1, n - 1)) : Integer(-m(n - 1, n - 1));
}

RationalMatrix rationalInverse(const RationalMatrix& input) {
  if (!input.square()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = input.rows();
  RationalMatrix a = input;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular");
    if (pivot != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    Rational scale = 1 / a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

std::vector<std::size_t> pivotColumns(const std::vector<IntVector>& rows, std::size_t dim) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    if (r.size() != dim) throw InvalidArgument("row length mismatch");
    m.push_back(toRational(r));
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < dim && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < dim; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rankOf(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  return pivotColumns(rows, rows.front().size()).size();
}

namespace {

Integer subDeterminant(const IntMatrix& full, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
  IntMatrix sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = full(rows[i], cols[j]);
  return bareissDeterminant(sub);
}

bool violates(const Integer& det) { return det > 1 || det < -1; }

}  // namespace

TuVerdict isTotallyUnimodular(const std::vector<IntVector>& vectors, Execution exec) {
  TuVerdict verdict;
  if (vectors.empty()) return verdict;
  const std::size_t dim = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != dim) throw InvalidArgument("vectors must share one index set");
  const IntMatrix full = IntMatrix::fromColumns(vectors, dim);
  const std::size_t maxK = std::min(dim, vectors.size());

  for (std::size_t k = 1; k <= maxK; ++k) {
    const auto rowSets = allCombinations(dim, k);
    const auto colSets = allCombinations(vectors.size(), k);
    const long long total = static_cast<long long>(rowSets.size() * colSets.size());
    const long long nCols = static_cast<long long>(colSets.size());
    long long first = total;

    if (exec == Execution::Serial) {
      for (long long idx = 0; idx < total; ++idx) {
        if (violates(subDeterminant(full, rowSets[idx / nCols], colSets[idx % nCols]))) {
          first = idx;
          break;
        }
      }
    } else {
      // collect-then-min keeps the witness independent of the schedule
#pragma omp parallel for schedule(dynamic, 64) reduction(min : first)
      for (long long idx = 0; idx < total; ++idx) {
        if (idx >= first) continue;
        if (violates(subDeterminant(full, rowSets[idx / nCols], colSets[idx % nCols])))
          first = std::min(first, idx);
      }
    }

    if (first < total) {
      TuWitness w;
      w.rows = rowSets[first / nCols];
      w.columns = colSets[first % nCols];
      w.determinant = subDeterminant(full, w.rows, w.columns);
      verdict.totallyUnimodular = false;
      verdict.witness = std::move(w);
      return verdict;
    }
  }
  return verdict;
}

}  // namespace bundlecon
