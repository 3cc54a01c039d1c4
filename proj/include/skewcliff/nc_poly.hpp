#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <vector>

#include "skewcliff/matrix.hpp"
#include "skewcliff/scalar.hpp"

namespace skewcliff {

inline constexpr std::size_t kMaxGenerators = 16;

/// Monomial in the free algebra: a sequence of generator indices, 1-based.
/// The empty word is the unit.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<unsigned> letters);
  explicit Word(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {}

  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<std::uint8_t>& letters() const { return letters_; }
  unsigned operator[](std::size_t i) const { return letters_[i]; }

  Word subword(std::size_t pos, std::size_t len) const;
  /// Position of the leftmost occurrence of `needle`, if any.
  std::optional<std::size_t> find(const Word& needle, std::size_t from = 0) const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<std::uint8_t> letters_;
};

/// Degree first, then left-to-right lexicographic with index 1 smallest.
std::strong_ordering compare_deglex(const Word& a, const Word& b);

struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const { return compare_deglex(a, b) < 0; }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Element of the free algebra on generators 1..n with exact coefficients.
class NcPoly {
 public:
  using Terms = std::map<Word, Scalar, DeglexLess>;

  NcPoly() = default;
  static NcPoly unit() { return monomial(Word{}); }
  static NcPoly generator(unsigned index);
  static NcPoly monomial(const Word& w, const Scalar& coeff = Scalar(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Requires a nonzero polynomial.
  const Word& leading_word() const;
  const Scalar& leading_coeff() const;
  Scalar coeff(const Word& w) const;

  /// Common degree of all terms; nullopt for zero or inhomogeneous input.
  std::optional<std::size_t> homogeneous_degree() const;
  std::size_t max_degree() const;
  /// Largest generator index appearing anywhere (0 for constants).
  unsigned max_letter() const;

  void add_term(const Word& w, const Scalar& coeff);
  NcPoly monic() const;

  NcPoly& operator+=(const NcPoly& other);
  NcPoly& operator-=(const NcPoly& other);
  NcPoly& operator*=(const Scalar& s);

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator-(NcPoly a) { return a *= Scalar(-1); }
  friend NcPoly operator*(NcPoly a, const Scalar& s) { return a *= s; }
  friend NcPoly operator*(const Scalar& s, NcPoly a) { return a *= s; }
  friend bool operator==(const NcPoly&, const NcPoly&) = default;

 private:
  Terms terms_;
};

/// Free-algebra product.
NcPoly nc_mul(const NcPoly& p, const NcPoly& q);
inline NcPoly operator*(const NcPoly& p, const NcPoly& q) { return nc_mul(p, q); }

/// u * p * v for words u, v.
NcPoly sandwich(const Word& left, const NcPoly& p, const Word& right, const Scalar& coeff = Scalar(1));

/// Linear action on the degree-one span: generator j maps to
/// sum_i matrix(i, j-1) x_{i+1}.
class LinearMap {
 public:
  explicit LinearMap(ScalarMatrix matrix);
  static LinearMap identity(std::size_t n);
  static LinearMap diagonal(const std::vector<Scalar>& entries);

  std::size_t n() const { return matrix_.rows(); }
  const ScalarMatrix& matrix() const { return matrix_; }
  bool is_invertible() const;
  bool is_diagonal() const;
  /// Throws Error("singular map") when not invertible.
  LinearMap inverse() const;
  NcPoly image_of_generator(unsigned index) const;

  /// (*this) after `inner`: x -> this(inner(x)).
  LinearMap compose(const LinearMap& inner) const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  ScalarMatrix matrix_;
};

/// Applies the algebra endomorphism extending `map` letterwise.
NcPoly apply_linear(const LinearMap& map, const NcPoly& p);

/// Renders e.g. "x1*x2 + 2*x2*x1 - x3^2", terms in increasing deglex order.
std::string render(const NcPoly& p, char letter = 'x');

/// Parses the rendering grammar; accepts x, z, X or Z generator names.
/// Generator indices above `n` are rejected when n > 0.
NcPoly parse_poly(std::string_view text, std::size_t n = 0);

}  // namespace skewcliff
