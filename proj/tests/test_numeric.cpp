#include <doctest.h>

#include <algorithm>
#include <random>

#include "bundlecon/combinatorics.hpp"
#include "bundlecon/numeric.hpp"

using namespace bundlecon;

namespace {

// Laplace expansion along the first row.
Integer cofactorDeterminant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    Integer term = m(0, c) * cofactorDeterminant(minor);
    det += (c % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

// Brute force: every square submatrix by cofactor expansion.
bool bruteTU(const std::vector<IntVector>& cols) {
  if (cols.empty()) return true;
  const std::size_t rows = cols[0].size();
  const IntMatrix m = IntMatrix::fromColumns(cols, rows);
  for (std::size_t k = 1; k <= std::min(rows, cols.size()); ++k)
    for (const auto& rs : allCombinations(rows, k))
      for (const auto& cs : allCombinations(cols.size(), k)) {
        IntMatrix sub(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rs[a], cs[b]);
        Integer d = cofactorDeterminant(sub);
        if (d != 0 && d != 1 && d != -1) return false;
      }
  return true;
}

std::vector<IntVector> randomTernary(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int zeroBias) {
  std::uniform_int_distribution<int> u(-1, 1 + zeroBias);
  std::vector<IntVector> out(cols, IntVector(rows));
  for (auto& c : out)
    for (auto& e : c) {
      int v = u(rng);
      e = v > 1 ? 0 : v;
    }
  return out;
}

}  // namespace

TEST_CASE("rationals parse exactly and print canonically") {
  CHECK(parseRational("0.5") == Rational(1, 2));
  CHECK(parseRational("-1.25") == Rational(-5, 4));
  CHECK(parseRational("6/4") == Rational(3, 2));
  CHECK(parseRational(" -7 ") == Rational(-7));
  CHECK(toString(Rational(9, 2)) == "9/2");
  CHECK(toString(Rational(-3)) == "-3");
  CHECK_THROWS_AS(parseRational("1e3"), InvalidArgument);
  CHECK_THROWS_AS(parseRational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parseRational(""), InvalidArgument);
}

TEST_CASE("primitive normalization") {
  CHECK(primitiveNormalized({-2, 0, 4}) == IntVector{1, 0, -2});
  CHECK(primitiveNormalized({0, 3, -3}) == IntVector{0, 1, -1});
  CHECK(primitiveNormalized({0, 0}) == IntVector{0, 0});
  CHECK(contentOf({6, -9, 0}) == 3);
}

TEST_CASE("Bareiss determinant matches cofactor expansion up to 5x5") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> u(-9, 9);
  for (std::size_t n = 0; n <= 5; ++n)
    for (int trial = 0; trial < 60; ++trial) {
      IntMatrix m(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = u(rng);
      if (trial % 5 == 0 && n >= 2)  // force singular
        for (std::size_t c = 0; c < n; ++c) m(n - 1, c) = m(0, c) * 2;
      CHECK(bareissDeterminant(m) == cofactorDeterminant(m));
    }
}

TEST_CASE("rational inverse is a two-sided inverse") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> u(-5, 5);
  int tested = 0;
  while (tested < 40) {
    RationalMatrix m(4, 4);
    IntMatrix im(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = im(r, c) = u(rng);
    if (bareissDeterminant(im) == 0) {
      CHECK_THROWS_AS(rationalInverse(m), SingularMatrix);
      continue;
    }
    auto inv = rationalInverse(m);
    CHECK(m * inv == RationalMatrix::identity(4));
    CHECK(inv * m == RationalMatrix::identity(4));
    ++tested;
  }
}

TEST_CASE("rank and pivot columns") {
  CHECK(rankOf({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}}) == 2);
  CHECK(rankOf({}) == 0);
  CHECK(pivotColumns({{0, 1, 1}, {0, 2, 3}}, 3) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("known unimodular and non-unimodular matrices") {
  // interval matrix (consecutive ones) is totally unimodular
  CHECK(isTotallyUnimodular({{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 1, 1, 0}, {0, 0, 1, 1}}).totallyUnimodular);
  // incidence matrix of an odd cycle has determinant 2
  auto v = isTotallyUnimodular({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK_FALSE(v.totallyUnimodular);
  REQUIRE(v.witness);
  CHECK(abs(v.witness->determinant) == 2);
  // an entry outside {-1,0,1} is a 1x1 witness
  auto w = isTotallyUnimodular({{2, 0}, {0, 1}});
  REQUIRE(w.witness);
  CHECK(w.witness->rows.size() == 1);
  CHECK(isTotallyUnimodular({}).totallyUnimodular);
}

TEST_CASE("TU test agrees with brute force, serial and parallel") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t rows = 2 + trial % 3, cols = 2 + (trial / 3) % 4;
    auto m = randomTernary(rng, rows, cols, trial % 3);
    const bool expected = bruteTU(m);
    auto ser = isTotallyUnimodular(m, Execution::Serial);
    auto par = isTotallyUnimodular(m, Execution::Parallel);
    CHECK(ser.totallyUnimodular == expected);
    CHECK(par.totallyUnimodular == expected);
    REQUIRE(ser.witness.has_value() == par.witness.has_value());
    if (ser.witness) {
      CHECK(ser.witness->rows == par.witness->rows);
      CHECK(ser.witness->columns == par.witness->columns);
      CHECK(ser.witness->determinant == par.witness->determinant);
      // the witness is a genuine violating minor
      const auto& w = *ser.witness;
      IntMatrix sub(w.rows.size(), w.columns.size());
      for (std::size_t a = 0; a < w.rows.size(); ++a)
        for (std::size_t b = 0; b < w.columns.size(); ++b) sub(a, b) = m[w.columns[b]][w.rows[a]];
      CHECK(cofactorDeterminant(sub) == w.determinant);
      CHECK(abs(w.determinant) > 1);
    }
  }
}

TEST_CASE("TU is invariant under column operations that preserve it") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 80; ++trial) {
    auto m = randomTernary(rng, 3, 4, 1);
    const bool base = isTotallyUnimodular(m).totallyUnimodular;
    auto perm = m;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(isTotallyUnimodular(perm).totallyUnimodular == base);
    auto neg = m;
    for (auto& e : neg[0]) e = -e;
    CHECK(isTotallyUnimodular(neg).totallyUnimodular == base);
    auto dup = m;
    dup.push_back(m[1]);
    CHECK(isTotallyUnimodular(dup).totallyUnimodular == base);
    auto withUnit = m;
    withUnit.push_back(unitVector(3, 2));
    CHECK(isTotallyUnimodular(withUnit).totallyUnimodular == base);
    // transpose: the rows of m as columns
    std::vector<IntVector> t(3, IntVector(m.size()));
    for (std::size_t c = 0; c < m.size(); ++c)
      for (std::size_t r = 0; r < 3; ++r) t[r][c] = m[c][r];
    CHECK(isTotallyUnimodular(t).totallyUnimodular == base);
  }
}
