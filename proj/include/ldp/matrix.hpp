#pragma once

#include "ldp/error.hpp"
#include "ldp/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace ldp {

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const Matrix& other) const = default;

  std::vector<T> operator*(const std::vector<T>& v) const {
    std::vector<T> out(rows_, T(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  Matrix operator*(const Matrix& other) const {
    Matrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        if ((*this)(r, k) == 0) continue;
        for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += (*this)(r, k) * other(k, c);
      }
    return out;
  }

  /// Principal submatrix on the given index set, in the given order.
  Matrix principal(const std::vector<std::size_t>& idx) const {
    Matrix out(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(idx[i], idx[j]);
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

/// Leading principal minors det(M[0..k, 0..k]) for k = 1..n, by fraction-free
/// Bareiss elimination without pivoting. Stops (returning a shorter list ending
/// in 0) at the first vanishing minor.
std::vector<Integer> leading_principal_minors(const IntMatrix& m);

/// Exact determinant by Bareiss elimination with row pivoting.
Integer determinant(const IntMatrix& m);

/// Solves m * x = rhs for square nonsingular m; throws InvalidArgument if singular.
std::vector<Rational> solve(const RatMatrix& m, const std::vector<Rational>& rhs);

RatMatrix inverse(const RatMatrix& m);

/// Adjugate of a square integer matrix: adj(m) * m = det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

/// Smith normal form u * m * v = d with u, v unimodular and d diagonal with
/// nonnegative entries, each dividing the next.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace ldp
