#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "skewcliff/error.hpp"
#include "skewcliff/param_poly.hpp"
#include "skewcliff/scalar.hpp"

namespace skewcliff {

/// Dense row-major matrix over an exact entry type (Scalar or ParamPoly).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using ParamMatrix = Matrix<ParamPoly>;
using ScalarVector = std::vector<Scalar>;

ScalarMatrix identity_matrix(std::size_t n);
ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);

/// Exact rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const ScalarMatrix& m);

/// Reduced row echelon form with first-nonzero pivoting, column by column.
struct Echelon {
  ScalarMatrix reduced;               // only the nonzero rows are kept
  std::vector<std::size_t> pivots;    // pivot column of each kept row
};
Echelon rref(const ScalarMatrix& m);

/// Coefficients c with sum_i c_i * basis[i] = target, or nullopt when target
/// is outside the span. Free coefficients are set to zero.
std::optional<ScalarVector> solve_in_span(std::span<const Scalar> target,
                                          std::span<const ScalarVector> basis);

std::optional<ScalarMatrix> inverse(const ScalarMatrix& m);
Scalar determinant(const ScalarMatrix& m);

/// All order-by-order minors, row subsets in lexicographic order, then
/// column subsets in lexicographic order.
std::vector<ParamPoly> parametric_minors(const ParamMatrix& m, std::size_t order);

ScalarMatrix specialize(const ParamMatrix& m, std::span<const Scalar> point);

/// Incrementally maintained echelon basis used for independence tests.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }

  /// Adds v when it is independent of the stored rows; returns whether it was.
  bool insert(ScalarVector v);
  bool contains(ScalarVector v) const;

 private:
  void reduce(ScalarVector& v) const;

  std::size_t dim_;
  std::vector<ScalarVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace skewcliff
