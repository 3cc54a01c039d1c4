#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "skewcliff/clifford.hpp"
#include "skewcliff/nc_poly.hpp"
#include "skewcliff/rewrite.hpp"

namespace skewcliff {

/// x_i -> lambda_i x_i with every lambda_i nonzero.
class DiagonalAutomorphism {
 public:
  explicit DiagonalAutomorphism(std::vector<Scalar> lambdas);

  std::size_t n() const { return lambdas_.size(); }
  const std::vector<Scalar>& lambdas() const { return lambdas_; }
  /// 1-based.
  const Scalar& lambda(std::size_t i) const { return lambdas_[i - 1]; }

  DiagonalAutomorphism inverse() const;
  DiagonalAutomorphism power(long k) const;
  LinearMap as_linear_map() const { return LinearMap::diagonal(lambdas_); }

  /// Rejects non-diagonal maps; diagonalization is left to the caller.
  static DiagonalAutomorphism from_linear_map(const LinearMap& map);

  friend bool operator==(const DiagonalAutomorphism&, const DiagonalAutomorphism&) = default;

 private:
  std::vector<Scalar> lambdas_;
};

/// Relations sum c_ab x_a x_b become sum c_ab x_a phi^{-1}(x_b).
PresentedAlgebra twist_presentation(const PresentedAlgebra& alg, const LinearMap& phi);
PresentedAlgebra twist_presentation(const PresentedAlgebra& alg, const DiagonalAutomorphism& phi);

/// Reduced echelon basis of the relation span in each degree, pivots on the
/// deglex-highest word, so each row is monic.
std::vector<NcPoly> canonical_relations(const PresentedAlgebra& alg);
bool same_relation_span(const PresentedAlgebra& a, const PresentedAlgebra& b);

struct TwistVerdict {
  bool is_twist = false;
  std::vector<Scalar> lambdas;            // lambda_1 = 1 when is_twist
  std::array<std::size_t, 3> witness{};   // 1-based (i,j,k) with mu_ik != mu_ij mu_jk
};

TwistVerdict twist_criterion(const MuMatrix& mu);

/// mu_ij = lambda_j / lambda_i.
MuMatrix mu_from_lambdas(const std::vector<Scalar>& lambdas);

/// In the twist by phi, the word a_1 a_2 ... a_d corresponds to
/// a_1 phi(a_2) phi^2(a_3) ... of the original algebra. Applied termwise.
NcPoly untwist(const NcPoly& p, const DiagonalAutomorphism& phi);

}  // namespace skewcliff
