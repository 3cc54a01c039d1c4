#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "skewcliff/scalar.hpp"

namespace skewcliff {

/// Commutative polynomial in parameters c1..cm with exact coefficients.
class ParamPoly {
 public:
  using Exponents = std::vector<unsigned>;

  ParamPoly() = default;
  explicit ParamPoly(std::size_t num_vars) : num_vars_(num_vars) {}

  static ParamPoly constant(std::size_t num_vars, const Scalar& value);
  /// The parameter c_{index+1}.
  static ParamPoly variable(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;

  void add_term(const Exponents& exps, const Scalar& coeff);
  Scalar evaluate(std::span<const Scalar> point) const;

  /// Renders with parameter names c1, c2, ...
  std::string str() const;

  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const Scalar& factor);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const Scalar& s) { return a *= s; }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) = default;

 private:
  void check_compatible(const ParamPoly& other) const;

  std::size_t num_vars_ = 0;
  std::map<Exponents, Scalar> terms_;
};

}  // namespace skewcliff
