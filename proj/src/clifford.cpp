#include "skewcliff/clifford.hpp"

#include <algorithm>
#include <numeric>

#include "skewcliff/analyze.hpp"
#include "skewcliff/error.hpp"

namespace skewcliff {

namespace {

std::string at(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::vector<NcPoly> degree_one_generators(std::size_t n) {
  std::vector<NcPoly> gens;
  for (unsigned i = 1; i <= n; ++i) gens.push_back(NcPoly::generator(i));
  return gens;
}

}  // namespace

MuMatrix::MuMatrix(ScalarMatrix entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.rows();
  if (n == 0 || entries_.cols() != n) throw Error("mu must be a nonempty square matrix");
  if (n > kMaxGenerators) throw Error("mu larger than 16 x 16");
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const Scalar& m = (*this)(i, j);
      if (m.is_zero()) throw Error("mu constraint violated at " + at(i, j) + ": entry is zero");
      if (i == j && !m.is_one()) throw Error("mu constraint violated at " + at(i, j) + ": mu_ii must be 1");
      if (i < j && !(m * (*this)(j, i)).is_one()) {
        throw Error("mu constraint violated at " + at(i, j) + ": mu_ij * mu_ji = " + (m * (*this)(j, i)).str() +
                    " != 1");
      }
    }
  }
}

MuMatrix MuMatrix::ones(std::size_t n) { return MuMatrix(ScalarMatrix(n, n, Scalar(1))); }

bool MuMatrix::is_all_ones() const {
  for (std::size_t i = 1; i <= n(); ++i)
    for (std::size_t j = 1; j <= n(); ++j)
      if (!(*this)(i, j).is_one()) return false;
  return true;
}

MuSymmetricMatrix::MuSymmetricMatrix(ScalarMatrix entries, MuMatrix mu) : entries_(std::move(entries)), mu_(std::move(mu)) {
  if (entries_.rows() != mu_.n() || entries_.cols() != mu_.n()) throw Error("matrix size does not match mu");
  for (std::size_t i = 1; i <= n(); ++i)
    for (std::size_t j = 1; j <= n(); ++j)
      if ((*this)(i, j) != mu_(i, j) * (*this)(j, i)) throw Error("not mu-symmetric at " + at(i, j));
}

Scalar QuadraticForm::coeff(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

void QuadraticForm::add(std::size_t i, std::size_t j, const Scalar& c) {
  if (i == 0 || j == 0 || i > n_ || j > n_) throw Error("quadratic form index out of range");
  if (i > j) throw Error("quadratic forms store ordered monomials only");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

NcPoly QuadraticForm::to_poly() const {
  NcPoly p;
  for (const auto& [key, c] : coeffs_) {
    p.add_term(Word{static_cast<unsigned>(key.first), static_cast<unsigned>(key.second)}, c);
  }
  return p;
}

QuadraticForm QuadraticForm::from_poly(const NcPoly& p, std::size_t n) {
  QuadraticForm q(n);
  for (const auto& [w, c] : p.terms()) {
    if (w.degree() != 2) throw Error("quadratic form must be homogeneous of degree 2");
    if (w[0] > w[1]) throw Error("quadratic form written on an unordered monomial");
    q.add(w[0], w[1], c);
  }
  return q;
}

QuadraticForm quadratic_form_of(const MuSymmetricMatrix& m) {
  const std::size_t n = m.n();
  QuadraticForm q(n);
  // z^T M z = sum_{i,j} M_ij z_i z_j; z_j z_i = mu_ij z_i z_j for i < j.
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i <= j) {
        q.add(i, j, m(i, j));
      } else {
        q.add(j, i, m.mu()(j, i) * m(i, j));
      }
    }
  }
  return q;
}

MuSymmetricMatrix matrix_of_form(const QuadraticForm& q, const MuMatrix& mu) {
  const std::size_t n = mu.n();
  if (q.n() != n) throw Error("form and mu have different sizes");
  ScalarMatrix m(n, n, Scalar(0));
  const Scalar half(1, 2);
  for (const auto& [key, c] : q.coefficients()) {
    const auto [i, j] = key;
    if (i == j) {
      m(i - 1, i - 1) = c;
    } else {
      m(i - 1, j - 1) = c * half;
      m(j - 1, i - 1) = mu(j, i) * c * half;
    }
  }
  return MuSymmetricMatrix(std::move(m), mu);
}

PresentedAlgebra build_skew_ring(const MuMatrix& mu) {
  std::vector<NcPoly> rels;
  for (unsigned i = 1; i <= mu.n(); ++i)
    for (unsigned j = i + 1; j <= mu.n(); ++j) {
      NcPoly r = NcPoly::monomial(Word{j, i});
      r.add_term(Word{i, j}, -mu(i, j));
      rels.push_back(std::move(r));
    }
  return PresentedAlgebra(mu.n(), std::move(rels));
}

NcPoly skew_anticommutator(const MuMatrix& mu, std::size_t i, std::size_t j) {
  NcPoly e = NcPoly::monomial(Word{static_cast<unsigned>(i), static_cast<unsigned>(j)});
  e.add_term(Word{static_cast<unsigned>(j), static_cast<unsigned>(i)}, mu(i, j));
  return e;
}

CliffordPresentation build_gsca(const MuMatrix& mu, const std::vector<MuSymmetricMatrix>& ms) {
  const std::size_t n = mu.n();
  if (ms.size() != n) throw Error("expected exactly n = " + std::to_string(n) + " matrices");
  for (const auto& m : ms) {
    if (!(m.mu() == mu)) throw Error("matrix built over a different mu");
  }

  // Rows (i,j), i <= j, in lexicographic order; T_{(ij),k} = (M_k)_ij.
  std::vector<std::pair<std::size_t, std::size_t>> row_keys;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) row_keys.emplace_back(i, j);
  ScalarMatrix t(row_keys.size(), n, Scalar(0));
  for (std::size_t r = 0; r < row_keys.size(); ++r)
    for (std::size_t k = 0; k < n; ++k) t(r, k) = ms[k](row_keys[r].first, row_keys[r].second);

  if (rank(t) < n) throw Error("matrices linearly dependent: y_k not expressible in (A_1)^2");

  std::vector<std::size_t> pivots;
  EchelonBasis picked(n);
  for (std::size_t r = 0; r < row_keys.size() && pivots.size() < n; ++r) {
    if (picked.insert(ScalarVector(t.row(r).begin(), t.row(r).end()))) pivots.push_back(r);
  }
  ScalarMatrix tp(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t k = 0; k < n; ++k) tp(p, k) = t(pivots[p], k);
  const ScalarMatrix tp_inv = *inverse(tp);

  std::vector<NcPoly> e;
  for (const auto& [i, j] : row_keys) e.push_back(skew_anticommutator(mu, i, j));

  CliffordPresentation out{mu, ms, {}, {}, {}};
  // e_P = T_P y, so y = T_P^{-1} e_P.
  for (std::size_t k = 0; k < n; ++k) {
    NcPoly y;
    for (std::size_t p = 0; p < n; ++p) y += e[pivots[p]] * tp_inv(k, p);
    out.y_expressions.push_back(std::move(y));
  }
  for (std::size_t p : pivots) out.pivot_rows.push_back(row_keys[p]);
  // Non-pivot rows give the left kernel of T: e_r - sum_k T_{r,k} y_k = 0.
  for (std::size_t r = 0; r < row_keys.size(); ++r) {
    if (std::find(pivots.begin(), pivots.end(), r) != pivots.end()) continue;
    NcPoly rel = e[r];
    for (std::size_t k = 0; k < n; ++k) rel -= out.y_expressions[k] * t(r, k);
    out.x_relations.push_back(rel.monic());
  }
  return out;
}

CliffordPresentation build_gca(const std::vector<ScalarMatrix>& ns) {
  if (ns.empty()) throw Error("expected at least one matrix");
  const MuMatrix ones = MuMatrix::ones(ns.front().rows());
  std::vector<MuSymmetricMatrix> ms;
  for (const auto& n : ns) ms.emplace_back(n, ones);
  return build_gsca(ones, ms);
}

CentralityVerdict check_gca_centrality(const CliffordPresentation& b, const NcPoly& a, const NcPoly& bb,
                                       std::size_t depth) {
  if (!b.mu.is_all_ones()) throw Error("centrality check requires a graded Clifford algebra (mu = 1)");
  if (depth < 3) throw Error("centrality check needs depth >= 3");
  const GroebnerData gb = groebner(b.algebra(), depth);
  const NcPoly c = a * bb + bb * a;
  std::vector<NcPoly> side = degree_one_generators(b.n());
  CentralityVerdict v;
  const CentralVerdict gens = is_central(c, gb, side);
  if (!gens.central) {
    v.witness = gens.witness;
    return v;
  }
  if (depth >= 4) {
    std::vector<NcPoly> words;
    for (unsigned i = 1; i <= b.n(); ++i)
      for (unsigned j = 1; j <= b.n(); ++j) words.push_back(NcPoly::monomial(Word{i, j}));
    const CentralVerdict quads = is_central(c, gb, words);
    if (!quads.central) {
      v.witness = quads.witness;
      return v;
    }
  }
  v.central = true;
  return v;
}

QuadricSystem quadric_system_of(const CliffordPresentation& pres) {
  QuadricSystem sys{pres.mu, {}};
  for (const auto& m : pres.forms_matrices) sys.forms.push_back(quadratic_form_of(m));
  return sys;
}

PresentedAlgebra quotient_by_forms(const MuMatrix& mu, const std::vector<QuadraticForm>& forms) {
  std::vector<NcPoly> extra;
  for (const auto& q : forms) extra.push_back(q.to_poly());
  return build_skew_ring(mu).with_relations(extra);
}

PresentedAlgebra quotient_by_system(const QuadricSystem& sys, std::size_t count) {
  return quotient_by_forms(sys.mu, std::vector<QuadraticForm>(sys.forms.begin(),
                                                               sys.forms.begin() + static_cast<std::ptrdiff_t>(count)));
}

NormalizingVerdict normalizing_check(const QuadricSystem& sys, std::size_t max_degree) {
  const std::size_t m = sys.forms.size();
  if (m > 8) throw Error("normalizing_check: at most 8 forms supported");
  if (max_degree < 3) throw Error("normalizing_check: max_degree must be at least 3");
  const std::size_t n = sys.mu.n();
  const std::vector<NcPoly> side = degree_one_generators(n);

  std::map<std::vector<std::size_t>, GroebnerData> prefix_gbs;
  auto gb_for = [&](const std::vector<std::size_t>& prefix) -> const GroebnerData& {
    auto it = prefix_gbs.find(prefix);
    if (it != prefix_gbs.end()) return it->second;
    std::vector<QuadraticForm> forms;
    for (std::size_t idx : prefix) forms.push_back(sys.forms[idx]);
    // Only degree deg(q) + 1 = 3 is inspected.
    return prefix_gbs.emplace(prefix, groebner(quotient_by_forms(sys.mu, forms), 3)).first->second;
  };

  auto sequence_normal = [&](const std::vector<std::size_t>& order) {
    std::vector<std::size_t> prefix;
    for (std::size_t idx : order) {
      const NormalVerdict v = is_normal(sys.forms[idx].to_poly(), gb_for(prefix), side);
      if (!v.normal) return false;
      prefix.push_back(idx);
    }
    return true;
  };

  NormalizingVerdict verdict;
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  ++verdict.orders_tried;
  if (sequence_normal(order)) {
    verdict.normalizing = true;
    verdict.order = order;
    return verdict;
  }
  while (std::next_permutation(order.begin(), order.end())) {
    ++verdict.orders_tried;
    if (sequence_normal(order)) {
      verdict.normalizing = true;
      verdict.order = order;
      return verdict;
    }
  }
  return verdict;
}

BasePointVerdict base_point_free_check(const QuadricSystem& sys, std::size_t max_degree,
                                       std::optional<bool> known_normalizing) {
  const GroebnerData gb = groebner(quotient_by_forms(sys.mu, sys.forms), max_degree);
  const FiniteDimVerdict fd = finite_dim_check(gb);
  BasePointVerdict v;
  v.base_point_free = fd.finite;
  v.dimension = fd.dimension;
  v.bound = fd.bound;
  v.quotient_dims = hilbert_coeffs(gb, gb.complete_through());
  const bool normalizing = known_normalizing ? *known_normalizing : normalizing_check(sys, std::max<std::size_t>(max_degree, 3)).normalizing;
  if (!normalizing) {
    v.warning = "no normalizing order was found; the finite-dimension criterion is stated for normalizing systems";
  }
  return v;
}

std::vector<std::size_t> polynomial_ring_dims(std::size_t n, std::size_t through) {
  // Pascal recurrence: dims_n(d) = dims_n(d-1) + dims_{n-1}(d).
  std::vector<std::size_t> row(through + 1, 1);
  for (std::size_t k = 2; k <= n; ++k)
    for (std::size_t d = 1; d <= through; ++d) row[d] += row[d - 1];
  return row;
}

RegularityReport regularity_verdict(const CliffordPresentation& pres, std::size_t max_degree) {
  RegularityReport r;
  const QuadricSystem sys = quadric_system_of(pres);
  r.normalizing = normalizing_check(sys, std::max<std::size_t>(max_degree, 3));
  r.base_points = base_point_free_check(sys, max_degree, r.normalizing.normalizing);
  r.regular = r.normalizing.normalizing && r.base_points.base_point_free;
  const GroebnerData gb = groebner(pres.algebra(), max_degree);
  r.hilbert = hilbert_coeffs(gb, max_degree);
  r.expected = polynomial_ring_dims(pres.n(), max_degree);
  r.hilbert_matches = r.hilbert == r.expected;
  r.hard_failure = r.regular && !r.hilbert_matches;
  return r;
}

}  // namespace skewcliff
