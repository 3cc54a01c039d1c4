#include "skewcliff/param_poly.hpp"

#include "skewcliff/error.hpp"

namespace skewcliff {

ParamPoly ParamPoly::constant(std::size_t num_vars, const Scalar& value) {
  ParamPoly p(num_vars);
  p.add_term(Exponents(num_vars, 0), value);
  return p;
}

ParamPoly ParamPoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw Error("parameter index out of range");
  Exponents e(num_vars, 0);
  e[index] = 1;
  ParamPoly p(num_vars);
  p.add_term(e, Scalar(1));
  return p;
}

unsigned ParamPoly::total_degree() const {
  unsigned best = 0;
  for (const auto& [exps, coeff] : terms_) {
    unsigned d = 0;
    for (unsigned e : exps) d += e;
    best = std::max(best, d);
  }
  return best;
}

void ParamPoly::add_term(const Exponents& exps, const Scalar& coeff) {
  if (exps.size() != num_vars_) throw Error("exponent vector has wrong length");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar ParamPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != num_vars_) throw Error("evaluation point has wrong length");
  Scalar total(0);
  for (const auto& [exps, coeff] : terms_) {
    Scalar term = coeff;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (exps[i] != 0) term *= point[i].pow(exps[i]);
    }
    total += term;
  }
  return total;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Highest exponent vectors first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, coeff] = *it;
    Scalar c = coeff;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    c = c.abs();
    bool monomial_empty = true;
    for (unsigned e : exps) monomial_empty = monomial_empty && e == 0;
    std::string mono;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "c" + std::to_string(i + 1);
      if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
    }
    if (monomial_empty) {
      out += c.str();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.str() + "*" + mono;
    }
    first = false;
  }
  return out;
}

void ParamPoly::check_compatible(const ParamPoly& other) const {
  if (num_vars_ != other.num_vars_) throw Error("parameter polynomials over different variable sets");
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  check_compatible(other);
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, coeff);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  check_compatible(other);
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, -coeff);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Scalar& factor) {
  if (factor.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [exps, coeff] : terms_) coeff *= factor;
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  a.check_compatible(b);
  ParamPoly out(a.num_vars_);
  ParamPoly::Exponents e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

}  // namespace skewcliff
