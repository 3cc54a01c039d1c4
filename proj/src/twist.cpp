#include "skewcliff/twist.hpp"

#include <map>

#include "skewcliff/error.hpp"

namespace skewcliff {

DiagonalAutomorphism::DiagonalAutomorphism(std::vector<Scalar> lambdas) : lambdas_(std::move(lambdas)) {
  if (lambdas_.empty()) throw Error("diagonal automorphism needs at least one entry");
  for (std::size_t i = 0; i < lambdas_.size(); ++i) {
    if (lambdas_[i].is_zero()) throw Error("singular map: lambda_" + std::to_string(i + 1) + " = 0");
  }
}

DiagonalAutomorphism DiagonalAutomorphism::inverse() const { return power(-1); }

DiagonalAutomorphism DiagonalAutomorphism::power(long k) const {
  std::vector<Scalar> out;
  for (const auto& l : lambdas_) out.push_back(l.pow(k));
  return DiagonalAutomorphism(std::move(out));
}

DiagonalAutomorphism DiagonalAutomorphism::from_linear_map(const LinearMap& map) {
  if (!map.is_diagonal()) {
    throw Error("automorphism is not diagonal; diagonalize it externally and pass the eigenvalues");
  }
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < map.n(); ++i) out.push_back(map.matrix()(i, i));
  return DiagonalAutomorphism(std::move(out));
}

PresentedAlgebra twist_presentation(const PresentedAlgebra& alg, const LinearMap& phi) {
  if (phi.n() != alg.n()) throw Error("twist: map size does not match generator count");
  const LinearMap inv = phi.inverse();
  std::vector<NcPoly> images;
  for (unsigned b = 1; b <= alg.n(); ++b) images.push_back(inv.image_of_generator(b));
  std::vector<NcPoly> out;
  for (const auto& r : alg.relations()) {
    if (r.homogeneous_degree() != 2) throw Error("non-quadratic relation " + render(r));
    NcPoly t;
    for (const auto& [w, c] : r.terms()) {
      t += nc_mul(NcPoly::monomial(Word{w[0]}, c), images[w[1] - 1]);
    }
    out.push_back(t);
  }
  return PresentedAlgebra(alg.n(), canonical_relations(PresentedAlgebra(alg.n(), std::move(out))));
}

PresentedAlgebra twist_presentation(const PresentedAlgebra& alg, const DiagonalAutomorphism& phi) {
  return twist_presentation(alg, phi.as_linear_map());
}

std::vector<NcPoly> canonical_relations(const PresentedAlgebra& alg) {
  std::map<std::size_t, std::vector<const NcPoly*>> by_degree;
  for (const auto& r : alg.relations()) by_degree[*r.homogeneous_degree()].push_back(&r);
  std::vector<NcPoly> out;
  for (const auto& [d, rels] : by_degree) {
    // Columns: words that occur, highest first.
    std::map<Word, std::size_t, DeglexLess> seen;
    for (const NcPoly* r : rels)
      for (const auto& [w, c] : r->terms()) seen.emplace(w, 0);
    std::vector<Word> cols;
    for (auto it = seen.rbegin(); it != seen.rend(); ++it) {
      it->second = cols.size();
      cols.push_back(it->first);
    }
    ScalarMatrix m(rels.size(), cols.size(), Scalar(0));
    for (std::size_t i = 0; i < rels.size(); ++i)
      for (const auto& [w, c] : rels[i]->terms()) m(i, seen.at(w)) = c;
    const Echelon e = rref(m);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      NcPoly p;
      for (std::size_t j = 0; j < cols.size(); ++j) p.add_term(cols[j], e.reduced(i, j));
      out.push_back(std::move(p));
    }
  }
  return out;
}

bool same_relation_span(const PresentedAlgebra& a, const PresentedAlgebra& b) {
  return a.n() == b.n() && canonical_relations(a) == canonical_relations(b);
}

TwistVerdict twist_criterion(const MuMatrix& mu) {
  const std::size_t n = mu.n();
  TwistVerdict v;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        if (mu(i, k) != mu(i, j) * mu(j, k)) {
          v.witness = {i, j, k};
          return v;
        }
  v.is_twist = true;
  for (std::size_t j = 1; j <= n; ++j) v.lambdas.push_back(mu(1, j));
  // Reconstruction mu_ij = lambda_j / lambda_i.
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (mu(i, j) != v.lambdas[j - 1] / v.lambdas[i - 1]) {
        throw Error("twist_criterion: reconstruction failed at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
  return v;
}

MuMatrix mu_from_lambdas(const std::vector<Scalar>& lambdas) {
  const std::size_t n = lambdas.size();
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lambdas[i].is_zero()) throw Error("lambda_" + std::to_string(i + 1) + " is zero");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = lambdas[j] / lambdas[i];
  return MuMatrix(std::move(m));
}

NcPoly untwist(const NcPoly& p, const DiagonalAutomorphism& phi) {
  NcPoly out;
  for (const auto& [w, c] : p.terms()) {
    Scalar f = c;
    for (std::size_t pos = 1; pos < w.degree(); ++pos) f *= phi.lambda(w[pos]).pow(static_cast<long>(pos));
    out.add_term(w, f);
  }
  return out;
}

}  // namespace skewcliff
