#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "skewcliff/nc_poly.hpp"

namespace skewcliff {

/// Graded algebra given by n degree-one generators and homogeneous relations
/// of degree >= 2. Relations are stored monic; zero relations are dropped.
class PresentedAlgebra {
 public:
  PresentedAlgebra(std::size_t n, std::vector<NcPoly> relations);

  std::size_t n() const { return n_; }
  const std::vector<NcPoly>& relations() const { return relations_; }

  /// Same generators with extra relations appended.
  PresentedAlgebra with_relations(const std::vector<NcPoly>& extra) const;

 private:
  std::size_t n_;
  std::vector<NcPoly> relations_;
};

/// The free algebra on n generators.
PresentedAlgebra free_algebra(std::size_t n);
/// Commutative polynomial ring: z_j z_i - z_i z_j for i < j.
PresentedAlgebra commutative_ring(std::size_t n);

/// Lookup of leading words by subword occurrence.
class LeadIndex {
 public:
  LeadIndex() = default;
  explicit LeadIndex(const std::vector<NcPoly>& elements);

  /// Registers elements[index]'s leading word (elements must be nonzero).
  void add(const NcPoly& element, std::size_t index);
  bool empty() const { return index_.empty(); }

  /// Leftmost occurrence of some leading word in w: (element index, position).
  std::optional<std::pair<std::size_t, std::size_t>> find(const Word& w) const;

 private:
  std::unordered_map<Word, std::size_t, WordHash> index_;
  std::vector<std::size_t> lengths_;
};

/// Truncated, inter-reduced Groebner basis of a homogeneous presentation.
///
/// Every element of degree <= complete_through() has been found, so normal
/// forms and normal words are exact in those degrees.
class GroebnerData {
 public:
  GroebnerData(PresentedAlgebra source, std::size_t max_degree, std::vector<NcPoly> elements);

  const PresentedAlgebra& source() const { return source_; }
  std::size_t n() const { return source_.n(); }
  std::size_t max_degree() const { return max_degree_; }
  std::size_t complete_through() const { return max_degree_; }
  const std::vector<NcPoly>& elements() const { return elements_; }

  /// Leftmost occurrence of some leading word in w: (element index, position).
  std::optional<std::pair<std::size_t, std::size_t>> find_divisor(const Word& w) const { return leads_.find(w); }
  bool is_normal_word(const Word& w) const { return !find_divisor(w); }

 private:
  PresentedAlgebra source_;
  std::size_t max_degree_;
  std::vector<NcPoly> elements_;
  LeadIndex leads_;
};

/// Degree-by-degree completion of all overlap obstructions up to max_degree.
GroebnerData groebner(const PresentedAlgebra& alg, std::size_t max_degree);

/// Full reduction, always rewriting the highest reducible term at its
/// leftmost divisor. Throws DegreeBoundError past complete_through().
NcPoly normal_form(const NcPoly& p, const GroebnerData& gb);

/// Normal words of degree d in deglex order.
std::vector<Word> degree_basis(const GroebnerData& gb, std::size_t d);
/// Number of normal words of degree d, without materializing them.
std::size_t degree_dimension(const GroebnerData& gb, std::size_t d);

std::vector<std::size_t> hilbert_coeffs(const GroebnerData& gb, std::size_t through);

struct FiniteDimVerdict {
  bool finite = false;
  std::size_t dimension = 0;     // total dimension when finite
  std::size_t vanishing_degree = 0;  // first degree with no normal words
  std::size_t bound = 0;         // degree bound searched
};

FiniteDimVerdict finite_dim_check(const GroebnerData& gb);

/// Coordinates of homogeneous degree-d elements against degree_basis(gb, d).
class DegreeCoordinates {
 public:
  DegreeCoordinates(const GroebnerData& gb, std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Word>& basis() const { return basis_; }

  /// Normal form of p expressed as a coefficient vector.
  ScalarVector coordinates(const NcPoly& p) const;
  NcPoly element(const ScalarVector& coords) const;

 private:
  const GroebnerData* gb_;
  std::size_t degree_;
  std::vector<Word> basis_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
};

}  // namespace skewcliff
