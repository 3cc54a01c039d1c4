#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewcliff/matrix.hpp"
#include "skewcliff/nc_poly.hpp"
#include "skewcliff/rewrite.hpp"

namespace skewcliff {

/// Skew-commutation data: mu_ii = 1 and mu_ij * mu_ji = 1.
class MuMatrix {
 public:
  /// Validates; throws Error("mu constraint violated at (i,j): ...") with
  /// 1-based indices.
  explicit MuMatrix(ScalarMatrix entries);
  static MuMatrix ones(std::size_t n);

  std::size_t n() const { return entries_.rows(); }
  /// 1-based access.
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_(i - 1, j - 1); }
  const ScalarMatrix& entries() const { return entries_; }
  bool is_all_ones() const;

  friend bool operator==(const MuMatrix&, const MuMatrix&) = default;

 private:
  ScalarMatrix entries_;
};

inline MuMatrix validate_mu(ScalarMatrix entries) { return MuMatrix(std::move(entries)); }

/// Matrix M with M_ij = mu_ij M_ji.
class MuSymmetricMatrix {
 public:
  /// Throws Error("not mu-symmetric at (i,j)") with 1-based indices.
  MuSymmetricMatrix(ScalarMatrix entries, MuMatrix mu);

  std::size_t n() const { return entries_.rows(); }
  const ScalarMatrix& entries() const { return entries_; }
  const MuMatrix& mu() const { return mu_; }
  /// 1-based access.
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_(i - 1, j - 1); }

  friend bool operator==(const MuSymmetricMatrix&, const MuSymmetricMatrix&) = default;

 private:
  ScalarMatrix entries_;
  MuMatrix mu_;
};

inline MuSymmetricMatrix check_mu_symmetric(ScalarMatrix m, const MuMatrix& mu) {
  return MuSymmetricMatrix(std::move(m), mu);
}

/// sum_{i <= j} c_ij z_i z_j in S_2, stored on ordered monomials only.
class QuadraticForm {
 public:
  using Key = std::pair<std::size_t, std::size_t>;  // 1-based, first <= second

  QuadraticForm() = default;
  explicit QuadraticForm(std::size_t n) : n_(n) {}

  std::size_t n() const { return n_; }
  const std::map<Key, Scalar>& coefficients() const { return coeffs_; }
  Scalar coeff(std::size_t i, std::size_t j) const;
  void add(std::size_t i, std::size_t j, const Scalar& c);
  bool is_zero() const { return coeffs_.empty(); }

  /// As an element of the free algebra (ordered words only).
  NcPoly to_poly() const;
  /// Reads an element written on ordered words z_i z_j, i <= j.
  static QuadraticForm from_poly(const NcPoly& p, std::size_t n);

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  std::size_t n_ = 0;
  std::map<Key, Scalar> coeffs_;
};

/// z^T M z with each z_j z_i (j > i) rewritten to mu_ij z_i z_j.
QuadraticForm quadratic_form_of(const MuSymmetricMatrix& m);
/// Inverse of quadratic_form_of.
MuSymmetricMatrix matrix_of_form(const QuadraticForm& q, const MuMatrix& mu);

struct QuadricSystem {
  MuMatrix mu;
  std::vector<QuadraticForm> forms;
};

/// Relations z_j z_i - mu_ij z_i z_j for i < j.
PresentedAlgebra build_skew_ring(const MuMatrix& mu);

/// Quadratic x-presentation obtained by eliminating the degree-two y's.
struct CliffordPresentation {
  MuMatrix mu;
  std::vector<MuSymmetricMatrix> forms_matrices;
  std::vector<NcPoly> x_relations;
  std::vector<NcPoly> y_expressions;  // y_expressions[k-1] expresses y_k
  std::vector<std::pair<std::size_t, std::size_t>> pivot_rows;  // lexicographic (i,j) pivots

  std::size_t n() const { return mu.n(); }
  PresentedAlgebra algebra() const { return PresentedAlgebra(n(), x_relations); }
};

/// e_ij = x_i x_j + mu_ij x_j x_i (so e_ii = 2 x_i^2).
NcPoly skew_anticommutator(const MuMatrix& mu, std::size_t i, std::size_t j);

CliffordPresentation build_gsca(const MuMatrix& mu, const std::vector<MuSymmetricMatrix>& ms);
CliffordPresentation build_gca(const std::vector<ScalarMatrix>& ns);

struct CentralityVerdict {
  bool central = false;
  std::optional<std::size_t> witness;  // generator that fails to commute
};

/// Checks that ab + ba commutes with every generator of B, and with every
/// degree-two word when `depth` allows it.
CentralityVerdict check_gca_centrality(const CliffordPresentation& b, const NcPoly& a, const NcPoly& bb,
                                       std::size_t depth);

QuadricSystem quadric_system_of(const CliffordPresentation& pres);

/// The skew ring S with the forms of the system adjoined as relations.
PresentedAlgebra quotient_by_system(const QuadricSystem& sys, std::size_t count);
PresentedAlgebra quotient_by_forms(const MuMatrix& mu, const std::vector<QuadraticForm>& forms);

struct NormalizingVerdict {
  bool normalizing = false;
  std::vector<std::size_t> order;  // 0-based permutation of the forms
  std::size_t orders_tried = 0;
};

NormalizingVerdict normalizing_check(const QuadricSystem& sys, std::size_t max_degree);

struct BasePointVerdict {
  bool base_point_free = false;
  std::size_t dimension = 0;
  std::size_t bound = 0;
  std::vector<std::size_t> quotient_dims;
  std::optional<std::string> warning;
};

BasePointVerdict base_point_free_check(const QuadricSystem& sys, std::size_t max_degree,
                                       std::optional<bool> known_normalizing = std::nullopt);

struct RegularityReport {
  NormalizingVerdict normalizing;
  BasePointVerdict base_points;
  bool regular = false;
  std::vector<std::size_t> hilbert;   // of the x-presentation through the bound
  std::vector<std::size_t> expected;  // binomial(n-1+d, d)
  bool hilbert_matches = false;
  bool hard_failure = false;          // declared regular but Hilbert data disagrees
};

RegularityReport regularity_verdict(const CliffordPresentation& pres, std::size_t max_degree);

/// binomial(n-1+d, d), the Hilbert coefficients of 1/(1-t)^n.
std::vector<std::size_t> polynomial_ring_dims(std::size_t n, std::size_t through);

}  // namespace skewcliff
