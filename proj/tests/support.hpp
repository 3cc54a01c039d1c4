#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "skewcliff/analyze.hpp"
#include "skewcliff/clifford.hpp"
#include "skewcliff/matrix.hpp"
#include "skewcliff/nc_poly.hpp"
#include "skewcliff/rewrite.hpp"
#include "skewcliff/twist.hpp"

namespace testing {

using namespace skewcliff;

inline ScalarMatrix mat(const std::vector<std::vector<Scalar>>& rows) {
  ScalarMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

inline ScalarMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j, const Scalar& v) {
  ScalarMatrix m(n, n);
  m(i - 1, j - 1) = v;
  return m;
}

/// E_ij + E_ji.
inline ScalarMatrix sym_unit(std::size_t n, std::size_t i, std::size_t j) {
  ScalarMatrix m(n, n);
  m(i - 1, j - 1) = 1;
  m(j - 1, i - 1) = 1;
  return m;
}

inline MuMatrix example_mu() {
  const Scalar h(1, 2);
  return MuMatrix(mat({{1, 2, 1}, {h, 1, 1}, {1, 1, 1}}));
}

inline std::vector<MuSymmetricMatrix> example_forms() {
  const auto mu = example_mu();
  const Scalar h(1, 2);
  return {MuSymmetricMatrix(mat({{2, 0, 0}, {0, 0, 0}, {0, 0, 0}}), mu),
          MuSymmetricMatrix(mat({{0, 0, 0}, {0, 2, 0}, {0, 0, 0}}), mu),
          MuSymmetricMatrix(mat({{0, 1, 0}, {h, 0, 0}, {0, 0, 2}}), mu)};
}

inline CliffordPresentation example_gsca() { return build_gsca(example_mu(), example_forms()); }

/// N_k = 2 E_kk.
inline std::vector<ScalarMatrix> diagonal_gca_data(std::size_t n) {
  std::vector<ScalarMatrix> ns;
  for (std::size_t k = 1; k <= n; ++k) ns.push_back(unit_matrix(n, k, k, 2));
  return ns;
}

inline Scalar small_rational(std::mt19937& rng, int span = 3) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 3);
  return Scalar(num(rng), den(rng));
}

inline Scalar small_nonzero(std::mt19937& rng, int span = 3) {
  std::uniform_int_distribution<int> num(1, span);
  std::uniform_int_distribution<int> den(1, 3);
  std::bernoulli_distribution neg(0.5);
  const Scalar s(num(rng), den(rng));
  return neg(rng) ? -s : s;
}

inline MuMatrix random_mu(std::mt19937& rng, std::size_t n) {
  ScalarMatrix e(n, n, Scalar(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      e(i, j) = small_nonzero(rng);
      e(j, i) = e(i, j).inverse();
    }
  return MuMatrix(e);
}

/// Entries above the diagonal are free; below they follow M_ji = mu_ji M_ij.
inline MuSymmetricMatrix random_mu_symmetric(std::mt19937& rng, const MuMatrix& mu) {
  const std::size_t n = mu.n();
  ScalarMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    e(i, i) = small_rational(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      e(i, j) = small_rational(rng);
      e(j, i) = mu(j + 1, i + 1) * e(i, j);
    }
  }
  return MuSymmetricMatrix(e, mu);
}

/// Random symmetric N_1..N_n whose flattened upper triangles are independent.
inline std::vector<ScalarMatrix> random_gca_data(std::mt19937& rng, std::size_t n) {
  for (;;) {
    std::vector<ScalarMatrix> ns;
    ScalarMatrix t(n * (n + 1) / 2, n);
    for (std::size_t k = 0; k < n; ++k) {
      ScalarMatrix m(n, n);
      std::size_t row = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          m(i, j) = m(j, i) = Scalar(std::uniform_int_distribution<int>(-2, 2)(rng));
          t(row++, k) = m(i, j);
        }
      ns.push_back(m);
    }
    if (rank(t) == n) return ns;
  }
}

inline std::vector<Scalar> random_lambdas(std::mt19937& rng, std::size_t n) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(small_nonzero(rng));
  return out;
}

inline NcPoly random_linear(std::mt19937& rng, std::size_t n) {
  NcPoly p;
  for (unsigned i = 1; i <= n; ++i) p.add_term(Word{i}, small_rational(rng));
  return p;
}

/// Rank by ordinary Gaussian elimination choosing the last nonzero entry of
/// each column as pivot, scanning columns right to left.
inline std::size_t oracle_rank(ScalarMatrix m) {
  std::size_t r = 0;
  const std::size_t rows = m.rows();
  for (std::size_t cc = m.cols(); cc-- > 0 && r < rows;) {
    std::optional<std::size_t> piv;
    for (std::size_t i = rows; i-- > r;)
      if (!m(i, cc).is_zero()) {
        piv = i;
        break;
      }
    if (!piv) continue;
    m.swap_rows(*piv, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, cc).is_zero()) continue;
      const Scalar f = m(i, cc) / m(r, cc);
      for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) -= f * m(r, c);
    }
    ++r;
  }
  return r;
}

/// binomial(a, b) by the multiplicative formula.
inline std::size_t oracle_binomial(std::size_t a, std::size_t b) {
  if (b > a) return 0;
  unsigned long long out = 1;
  for (std::size_t i = 1; i <= b; ++i) out = out * (a - b + i) / i;
  return static_cast<std::size_t>(out);
}

/// All words of degree d over n letters, lexicographic.
inline std::vector<Word> all_words(std::size_t n, std::size_t d) {
  std::vector<Word> out{Word{}};
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (unsigned a = 1; a <= n; ++a) next.push_back(w + Word{a});
    out = std::move(next);
  }
  return out;
}

/// Normal words by literal substring search against the leading words.
inline std::size_t oracle_normal_word_count(const GroebnerData& gb, std::size_t d) {
  std::size_t count = 0;
  for (const auto& w : all_words(gb.n(), d)) {
    bool reducible = false;
    for (const auto& g : gb.elements()) {
      const auto& lead = g.leading_word().letters();
      if (std::search(w.letters().begin(), w.letters().end(), lead.begin(), lead.end()) != w.letters().end()) {
        reducible = true;
        break;
      }
    }
    if (!reducible) ++count;
  }
  return count;
}

}  // namespace testing
