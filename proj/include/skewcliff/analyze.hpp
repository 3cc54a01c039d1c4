#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "skewcliff/clifford.hpp"
#include "skewcliff/matrix.hpp"
#include "skewcliff/nc_poly.hpp"
#include "skewcliff/param_poly.hpp"
#include "skewcliff/rewrite.hpp"
#include "skewcliff/twist.hpp"

namespace skewcliff {

std::vector<NcPoly> generators_of_degree_one(std::size_t n);

/// Outcome of comparing a * span(side) with span(side) * a one degree up.
struct NormalVerdict {
  bool normal = false;
  /// Row s: g_s a = sum_h left(s,h) a h. Filled when normal.
  ScalarMatrix left;
  /// Row s: a g_s = sum_h right(s,h) h a. Filled when normal.
  ScalarMatrix right;
  std::optional<std::size_t> witness;  // side element that breaks a containment
  std::string failing_side;            // "left" (g a not in a V) or "right"
};

/// Side elements must share one degree. Throws DegreeBoundError when
/// deg(a) + deg(side) exceeds the completeness bound.
NormalVerdict is_normal(const NcPoly& a, const GroebnerData& gb, const std::vector<NcPoly>& side_basis);

struct CentralVerdict {
  bool central = false;
  std::optional<std::size_t> witness;
};

CentralVerdict is_central(const NcPoly& a, const GroebnerData& gb, const std::vector<NcPoly>& side_basis);

/// Graded pieces of the subalgebra generated by homogeneous elements of a
/// common degree (degree 2 for R and C).
struct SubalgebraBasis {
  std::vector<NcPoly> generators;
  std::size_t generator_degree = 0;
  std::size_t through = 0;
  std::map<std::size_t, std::vector<NcPoly>> per_degree;

  std::vector<std::size_t> dims() const;
};

SubalgebraBasis subalgebra_basis(const GroebnerData& gb, const std::vector<NcPoly>& generators, std::size_t through);

/// Coefficients of 1/(1-t^e)^n through `through`.
std::vector<std::size_t> weighted_polynomial_dims(std::size_t n, std::size_t e, std::size_t through);

struct MinorCertificate {
  std::vector<std::size_t> rows;  // indices into the containment matrix rows
  std::vector<std::size_t> cols;
  ParamPoly minor;
  Scalar value;
};

struct LocusPoint {
  std::vector<Scalar> point;
  bool normal = false;
  std::optional<MinorCertificate> certificate;
  std::optional<std::size_t> witness;  // non-normal without a minor certificate
};

struct NormalLocusReport {
  std::size_t num_params = 0;
  std::size_t minor_order = 0;
  std::size_t total_minors = 0;
  std::vector<ParamPoly> distinct_nonzero_minors;
  std::vector<Word> row_words;  // surviving rows of the containment matrix
  std::vector<LocusPoint> points;
};

/// All nonzero integer tuples with entries in [-radius, radius], lexicographic.
std::vector<std::vector<Scalar>> default_grid(std::size_t params, long radius);

/// a = sum_k c_k span_gens[k]. The containment matrix has columns a h and
/// h a for h in side_basis; all of its (|side|+1)-minors vanish at normal a.
NormalLocusReport normal_locus_in_span(const GroebnerData& gb, const std::vector<NcPoly>& span_gens,
                                       const std::vector<NcPoly>& side_basis,
                                       const std::vector<std::vector<Scalar>>& grid);

/// r_ij = lambda_i x_i x_j + lambda_j x_j x_i, i <= j.
struct RElement {
  std::size_t i = 0;
  std::size_t j = 0;
  NcPoly raw;    // before reduction
  NcPoly value;  // normal form in A
  bool is_zero() const { return value.is_zero(); }
};

std::vector<RElement> build_r_elements(const CliffordPresentation& a, const DiagonalAutomorphism& tau,
                                       const GroebnerData& gb);

using IndexPair = std::pair<std::size_t, std::size_t>;

struct NormalityScalar {
  std::size_t k, i, j;
  std::optional<Scalar> recovered;  // from the normal-form computation
  Scalar expected;                  // mu_ki mu_kj from lambda
  bool pass = false;
};

struct DaggerCheck {
  std::size_t i, j, k, p;
  Scalar factor;  // mu_ik^2 mu_jp^2
  bool pass = false;
};

struct CTwistCheck {
  std::size_t i, j;
  std::optional<Scalar> scale;  // c_ij = scale * (X_i X_j + X_j X_i) in B
  bool untwists_to_r = false;
  bool pass = false;
};

struct TheoremReport {
  std::size_t n = 0;
  std::size_t through = 0;
  std::vector<Scalar> lambdas;
  TwistVerdict criterion;
  bool lambdas_consistent = false;       // criterion lambdas are proportional to tau
  std::vector<std::string> warnings;

  bool presentation_matches = false;     // twist of B equals build_gsca(mu, N_k diag(lambda))
  std::size_t relation_count = 0;
  std::vector<IndexPair> zero_r;
  bool r_span_equals_y_span = false;

  std::vector<NormalityScalar> normality_scalars;
  bool normality_pass = false;
  std::vector<DaggerCheck> dagger_checks;
  bool dagger_pass = false;
  bool nu_cocycle = false;
  std::vector<std::size_t> r_dims_expected;
  std::vector<std::size_t> r_dims_computed;
  bool r_hilbert_pass = false;
  std::vector<CTwistCheck> c_checks;
  bool c_commutation_pass = false;
  bool c_twist = false;

  bool overall() const;
};

/// nu_ijkp = mu_ik^2 mu_jp^2 (1-based).
Scalar nu(const MuMatrix& mu, std::size_t i, std::size_t j, std::size_t k, std::size_t p);
bool nu_cocycle_holds(const MuMatrix& mu);

TheoremReport verify_twist_theorem(const std::vector<ScalarMatrix>& b_data, const DiagonalAutomorphism& tau,
                                   std::size_t through);

}  // namespace skewcliff
