#pragma once

// Exact scalars, small integer vectors and dense matrices.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bundlecon/error.hpp"

namespace bundlecon {

using Integer = mpz_class;
using Rational = mpq_class;

/// Bundle, direction or demand-type vector. Components index goods (or
/// items, or bundles of a bundling); the index set is the vector length.
using IntVector = std::vector<std::int64_t>;

using RationalVector = std::vector<Rational>;

/// Builds n/d in lowest terms. Throws InvalidArgument when d == 0.
Rational makeRational(const Integer& num, const Integer& den = 1);

/// Parses "7", "-3/4" or an exact decimal such as "0.5" or "-1.25".
/// Binary floating point is never involved.
Rational parseRational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string toString(const Rational& value);
std::string toString(const IntVector& v);
std::string toString(const RationalVector& v);

/// Dot product of a price vector with a bundle.
Rational dot(const RationalVector& p, const IntVector& x);

RationalVector toRational(const IntVector& v);

/// Componentwise gcd; 0 for the zero vector.
std::int64_t contentOf(const IntVector& v);

/// Divides by the content and flips the sign so that the first nonzero
/// component is positive. The zero vector is returned unchanged.
IntVector primitiveNormalized(const IntVector& v);

IntVector unitVector(std::size_t dim, std::size_t index);

/// Dense row-major matrix with immutable dimensions.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Matrix whose j-th column is columns[j]; all columns share one length.
  template <typename V>
  static Matrix fromColumns(const std::vector<V>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw InvalidArgument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = T(columns[j][i]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw InvalidArgument("matrix product dimension mismatch");
    Matrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        if ((*this)(r, k) == 0) continue;
        for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += (*this)(r, k) * other(k, c);
      }
    return out;
  }

  template <typename V>
  std::vector<T> apply(const V& x) const {
    if (x.size() != cols_) throw InvalidArgument("matrix-vector dimension mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * T(x[c]);
    return out;
  }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Fraction-free (Bareiss) elimination with row pivoting. The empty matrix
/// has determinant 1.
Integer bareissDeterminant(const IntMatrix& m);

/// Exact Gauss-Jordan inverse. Throws SingularMatrix.
RationalMatrix rationalInverse(const RationalMatrix& m);

/// Rank of the matrix whose rows are the given vectors.
std::size_t rankOf(const std::vector<IntVector>& rows);

/// Pivot column indices of a row-echelon form of the given rows, ascending.
std::vector<std::size_t> pivotColumns(const std::vector<IntVector>& rows, std::size_t dim);

struct TuWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> columns;
  Integer determinant;
};

struct TuVerdict {
  bool totallyUnimodular = true;
  std::optional<TuWitness> witness;
};

enum class Execution { Serial, Parallel };

/// Decides total unimodularity of the matrix whose columns are `vectors` by
/// exhaustive square-submatrix enumeration. On failure the witness is the
/// lexicographically least violating (rows, columns) pair of minimal size.
TuVerdict isTotallyUnimodular(const std::vector<IntVector>& vectors,
                              Execution exec = Execution::Parallel);

}  // namespace bundlecon
