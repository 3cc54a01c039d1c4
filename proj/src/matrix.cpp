#include "skewcliff/matrix.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

namespace skewcliff {

ScalarMatrix identity_matrix(std::size_t n) {
  ScalarMatrix m(n, n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix size mismatch in product");
  ScalarMatrix out(a.rows(), b.cols(), Scalar(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::size_t rank(const ScalarMatrix& input) {
  ScalarMatrix m = input;
  std::size_t r = 0;
  Scalar prev(1);
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t p = r;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Scalar pivot = m(r, col);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Scalar lead = m(i, col);
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        m(i, j) = (pivot * m(i, j) - lead * m(r, j)) / prev;
      }
      m(i, col) = Scalar(0);
    }
    prev = pivot;
    ++r;
  }
  return r;
}

Echelon rref(const ScalarMatrix& input) {
  ScalarMatrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t p = r;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Scalar inv = m(r, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, col).is_zero()) continue;
      const Scalar f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  ScalarMatrix reduced(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::optional<ScalarVector> solve_in_span(std::span<const Scalar> target,
                                          std::span<const ScalarVector> basis) {
  const std::size_t len = target.size();
  for (const auto& b : basis) {
    if (b.size() != len) throw Error("solve_in_span: vectors of different lengths");
  }
  // Augmented matrix [b_0 ... b_{k-1} | target] with the vectors as columns.
  ScalarMatrix aug(len, basis.size() + 1, Scalar(0));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t k = 0; k < basis.size(); ++k) aug(i, k) = basis[k][i];
    aug(i, basis.size()) = target[i];
  }
  const Echelon e = rref(aug);
  ScalarVector coeffs(basis.size(), Scalar(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == basis.size()) return std::nullopt;
    coeffs[e.pivots[r]] = e.reduced(r, basis.size());
  }
  return coeffs;
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ScalarMatrix aug(n, 2 * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  const Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  ScalarMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Scalar determinant(const ScalarMatrix& input) {
  if (input.rows() != input.cols()) throw Error("determinant of a non-square matrix");
  ScalarMatrix m = input;
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != col) {
      m.swap_rows(p, col);
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = m(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const Scalar f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

namespace {

using Mask = std::uint64_t;

// Determinants of the leading rows of a row subset against column subsets,
// extended one row at a time by expansion along the newest row.
class MinorTable {
 public:
  MinorTable(const ParamMatrix& m, std::size_t order) : m_(m), order_(order) {}

  void run(std::vector<ParamPoly>& out) {
    std::vector<std::size_t> rows;
    std::unordered_map<Mask, ParamPoly> level0;
    level0.emplace(Mask{0}, ParamPoly::constant(num_vars(), Scalar(1)));
    descend(rows, 0, level0, out);
  }

 private:
  std::size_t num_vars() const { return m_.rows() > 0 && m_.cols() > 0 ? m_(0, 0).num_vars() : 0; }

  void descend(std::vector<std::size_t>& rows, std::size_t next_row,
               const std::unordered_map<Mask, ParamPoly>& table, std::vector<ParamPoly>& out) {
    const std::size_t t = rows.size();
    if (t == order_) {
      emit(table, out);
      return;
    }
    for (std::size_t r = next_row; r + (order_ - t) <= m_.rows(); ++r) {
      std::unordered_map<Mask, ParamPoly> extended;
      for (const auto& [mask, det] : table) {
        if (det.is_zero()) continue;
        // Adding column c to the subset; sign from the position of c inside it.
        for (std::size_t c = 0; c < m_.cols(); ++c) {
          const Mask bit = Mask{1} << c;
          if (mask & bit) continue;
          const ParamPoly& entry = m_(r, c);
          if (entry.is_zero()) continue;
          const Mask higher = mask & ~((bit << 1) - 1);
          const bool negative = (std::popcount(higher) % 2) == 1;
          ParamPoly term = det * entry;
          auto [it, inserted] = extended.try_emplace(mask | bit, ParamPoly(num_vars()));
          if (negative) {
            it->second -= term;
          } else {
            it->second += term;
          }
        }
      }
      rows.push_back(r);
      descend(rows, r + 1, extended, out);
      rows.pop_back();
    }
  }

  void emit(const std::unordered_map<Mask, ParamPoly>& table, std::vector<ParamPoly>& out) {
    // Column subsets of size order_ in lexicographic order.
    std::vector<std::size_t> cols(order_);
    for (std::size_t i = 0; i < order_; ++i) cols[i] = i;
    while (true) {
      Mask mask = 0;
      for (std::size_t c : cols) mask |= Mask{1} << c;
      auto it = table.find(mask);
      out.push_back(it == table.end() ? ParamPoly(num_vars()) : it->second);
      std::size_t i = order_;
      while (i > 0 && cols[i - 1] == m_.cols() - order_ + (i - 1)) --i;
      if (i == 0) break;
      ++cols[i - 1];
      for (std::size_t j = i; j < order_; ++j) cols[j] = cols[j - 1] + 1;
    }
  }

  const ParamMatrix& m_;
  std::size_t order_;
};

}  // namespace

std::vector<ParamPoly> parametric_minors(const ParamMatrix& m, std::size_t order) {
  if (order == 0) throw Error("empty minor order");
  if (order > m.rows() || order > m.cols()) throw Error("minor order exceeds matrix size");
  if (m.cols() > 64) throw Error("parametric_minors supports at most 64 columns");
  std::vector<ParamPoly> out;
  MinorTable(m, order).run(out);
  return out;
}

ScalarMatrix specialize(const ParamMatrix& m, std::span<const Scalar> point) {
  ScalarMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).evaluate(point);
  return out;
}

void EchelonBasis::reduce(ScalarVector& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (v[p].is_zero()) continue;
    const Scalar f = v[p];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!rows_[k][j].is_zero()) v[j] -= f * rows_[k][j];
    }
  }
}

bool EchelonBasis::insert(ScalarVector v) {
  if (v.size() != dim_) throw Error("EchelonBasis: vector of wrong length");
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Scalar inv = v[p].inverse();
  for (auto& x : v) x *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool EchelonBasis::contains(ScalarVector v) const {
  if (v.size() != dim_) throw Error("EchelonBasis: vector of wrong length");
  reduce(v);
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace skewcliff
