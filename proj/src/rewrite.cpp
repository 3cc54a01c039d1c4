#include "skewcliff/rewrite.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "skewcliff/error.hpp"

namespace skewcliff {

PresentedAlgebra::PresentedAlgebra(std::size_t n, std::vector<NcPoly> relations) : n_(n) {
  if (n == 0 || n > kMaxGenerators) throw Error("generator count must be between 1 and 16");
  for (auto& r : relations) {
    if (r.is_zero()) continue;
    const auto d = r.homogeneous_degree();
    if (!d) throw Error("inhomogeneous relation " + render(r));
    if (*d < 2) throw Error("relation of degree < 2: " + render(r));
    if (r.max_letter() > n) throw Error("relation uses a generator beyond n: " + render(r));
    relations_.push_back(r.monic());
  }
}

PresentedAlgebra PresentedAlgebra::with_relations(const std::vector<NcPoly>& extra) const {
  std::vector<NcPoly> all = relations_;
  all.insert(all.end(), extra.begin(), extra.end());
  return PresentedAlgebra(n_, std::move(all));
}

PresentedAlgebra free_algebra(std::size_t n) { return PresentedAlgebra(n, {}); }

PresentedAlgebra commutative_ring(std::size_t n) {
  std::vector<NcPoly> rels;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) {
      NcPoly r = NcPoly::monomial(Word{j, i});
      r.add_term(Word{i, j}, Scalar(-1));
      rels.push_back(r);
    }
  return PresentedAlgebra(n, std::move(rels));
}

LeadIndex::LeadIndex(const std::vector<NcPoly>& elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) add(elements[i], i);
}

void LeadIndex::add(const NcPoly& element, std::size_t index) {
  const Word& lead = element.leading_word();
  index_.emplace(lead, index);
  if (std::find(lengths_.begin(), lengths_.end(), lead.degree()) == lengths_.end()) {
    lengths_.push_back(lead.degree());
    std::sort(lengths_.begin(), lengths_.end());
  }
}

std::optional<std::pair<std::size_t, std::size_t>> LeadIndex::find(const Word& w) const {
  if (index_.empty()) return std::nullopt;
  for (std::size_t pos = 0; pos < w.degree(); ++pos) {
    for (std::size_t len : lengths_) {
      if (pos + len > w.degree()) break;
      auto it = index_.find(w.subword(pos, len));
      if (it != index_.end()) return std::make_pair(it->second, pos);
    }
  }
  return std::nullopt;
}

GroebnerData::GroebnerData(PresentedAlgebra source, std::size_t max_degree, std::vector<NcPoly> elements)
    : source_(std::move(source)), max_degree_(max_degree), elements_(std::move(elements)), leads_(elements_) {}

namespace {

// Reduction with no completeness check; used while the basis is being built.
template <class FindDivisor>
NcPoly reduce_by(NcPoly p, const std::vector<NcPoly>& elements, FindDivisor&& find) {
  NcPoly result;
  while (!p.is_zero()) {
    const Word w = p.leading_word();
    const Scalar c = p.leading_coeff();
    p.add_term(w, -c);
    if (auto div = find(w)) {
      const NcPoly& g = elements[div->first];
      const Word& lead = g.leading_word();
      const Word left = w.subword(0, div->second);
      const Word right = w.subword(div->second + lead.degree(), w.degree() - div->second - lead.degree());
      // g is monic: replace the occurrence of its lead by minus its tail.
      for (const auto& [tw, tc] : g.terms()) {
        if (tw == lead) continue;
        p.add_term(left + tw + right, -c * tc);
      }
    } else {
      result.add_term(w, c);
    }
  }
  return result;
}

NcPoly reduce_with(NcPoly p, const std::vector<NcPoly>& elements, const LeadIndex& leads) {
  return reduce_by(std::move(p), elements, [&](const Word& w) { return leads.find(w); });
}

NcPoly reduce_unchecked(NcPoly p, const GroebnerData& gb) {
  return reduce_by(std::move(p), gb.elements(), [&](const Word& w) { return gb.find_divisor(w); });
}

struct Obstruction {
  Word overlap;
  std::size_t first;
  std::size_t second;
  std::size_t shared;
};

}  // namespace

GroebnerData groebner(const PresentedAlgebra& alg, std::size_t max_degree) {
  if (max_degree < 2) throw Error("groebner: max_degree must be at least 2");
  std::map<std::size_t, std::vector<NcPoly>> inputs;
  for (const auto& r : alg.relations()) {
    const std::size_t d = *r.homogeneous_degree();
    if (d <= max_degree) inputs[d].push_back(r);
  }

  std::vector<NcPoly> elements;
  LeadIndex leads;
  for (std::size_t d = 2; d <= max_degree; ++d) {
    // Degree-d obstructions come only from leads of degree < d.
    std::vector<Obstruction> obstructions;
    for (std::size_t a = 0; a < elements.size(); ++a) {
      const Word& u = elements[a].leading_word();
      for (std::size_t b = 0; b < elements.size(); ++b) {
        const Word& v = elements[b].leading_word();
        if (u.degree() + v.degree() <= d) continue;
        const std::size_t k = u.degree() + v.degree() - d;
        if (k >= u.degree() || k >= v.degree()) continue;
        if (std::equal(u.letters().end() - static_cast<std::ptrdiff_t>(k), u.letters().end(), v.letters().begin())) {
          obstructions.push_back({u.subword(0, u.degree() - k) + v, a, b, k});
        }
      }
    }
    std::stable_sort(obstructions.begin(), obstructions.end(), [](const Obstruction& x, const Obstruction& y) {
      const auto c = compare_deglex(x.overlap, y.overlap);
      if (c != 0) return c < 0;
      return std::tie(x.first, x.second) < std::tie(y.first, y.second);
    });

    std::vector<NcPoly> candidates;
    if (auto it = inputs.find(d); it != inputs.end()) candidates = it->second;
    for (const auto& ob : obstructions) {
      const NcPoly& g = elements[ob.first];
      const NcPoly& h = elements[ob.second];
      const Word& u = g.leading_word();
      const Word& v = h.leading_word();
      NcPoly s = sandwich(Word{}, g, v.subword(ob.shared, v.degree() - ob.shared));
      s -= sandwich(u.subword(0, u.degree() - ob.shared), h, Word{});
      candidates.push_back(std::move(s));
    }

    const std::size_t first_new = elements.size();
    for (auto& cand : candidates) {
      NcPoly reduced = reduce_with(std::move(cand), elements, leads);
      if (reduced.is_zero()) continue;
      elements.push_back(reduced.monic());
      leads.add(elements.back(), elements.size() - 1);
    }
    // Inter-reduce the tails of the new degree-d elements.
    for (std::size_t i = first_new; i < elements.size(); ++i) {
      NcPoly tail = elements[i];
      const Word lead = tail.leading_word();
      tail.add_term(lead, Scalar(-1));
      NcPoly e = reduce_with(std::move(tail), elements, leads);
      e.add_term(lead, Scalar(1));
      elements[i] = std::move(e);
    }
  }
  return GroebnerData(alg, max_degree, std::move(elements));
}

NcPoly normal_form(const NcPoly& p, const GroebnerData& gb) {
  if (p.max_degree() > gb.complete_through()) {
    throw DegreeBoundError("degree exceeds completeness bound (" + std::to_string(p.max_degree()) + " > " +
                           std::to_string(gb.complete_through()) + ")");
  }
  return reduce_unchecked(p, gb);
}

namespace {

class NormalWordWalker {
 public:
  explicit NormalWordWalker(const GroebnerData& gb) : gb_(gb) {
    for (const auto& e : gb.elements()) max_lead_ = std::max(max_lead_, e.leading_word().degree());
  }

  // Appending l to a normal word keeps it normal iff no lead ends at l.
  bool extends(const std::vector<std::uint8_t>& letters) const {
    const std::size_t len = letters.size();
    for (const auto& e : gb_.elements()) {
      const auto& lead = e.leading_word().letters();
      if (lead.size() > len) continue;
      if (std::equal(lead.begin(), lead.end(), letters.end() - static_cast<std::ptrdiff_t>(lead.size()))) {
        return false;
      }
    }
    return true;
  }

  void collect(std::vector<std::uint8_t>& prefix, std::size_t d, std::vector<Word>& out) const {
    if (prefix.size() == d) {
      out.emplace_back(prefix);
      return;
    }
    for (unsigned l = 1; l <= gb_.n(); ++l) {
      prefix.push_back(static_cast<std::uint8_t>(l));
      if (extends(prefix)) collect(prefix, d, out);
      prefix.pop_back();
    }
  }

  // Count depends only on the last (max_lead - 1) letters.
  std::size_t count(std::vector<std::uint8_t>& prefix, std::size_t remaining) {
    if (remaining == 0) return 1;
    const std::size_t keep = max_lead_ == 0 ? 0 : std::min(prefix.size(), max_lead_ - 1);
    std::vector<std::uint8_t> key(prefix.end() - static_cast<std::ptrdiff_t>(keep), prefix.end());
    key.push_back(static_cast<std::uint8_t>(remaining & 0xff));
    key.push_back(static_cast<std::uint8_t>(remaining >> 8));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::size_t total = 0;
    for (unsigned l = 1; l <= gb_.n(); ++l) {
      prefix.push_back(static_cast<std::uint8_t>(l));
      if (extends(prefix)) total += count(prefix, remaining - 1);
      prefix.pop_back();
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  const GroebnerData& gb_;
  std::size_t max_lead_ = 0;
  std::map<std::vector<std::uint8_t>, std::size_t> memo_;
};

void check_bound(const GroebnerData& gb, std::size_t d) {
  if (d > gb.complete_through()) {
    throw DegreeBoundError("degree exceeds completeness bound (" + std::to_string(d) + " > " +
                           std::to_string(gb.complete_through()) + ")");
  }
}

}  // namespace

std::vector<Word> degree_basis(const GroebnerData& gb, std::size_t d) {
  check_bound(gb, d);
  std::vector<Word> out;
  std::vector<std::uint8_t> prefix;
  NormalWordWalker(gb).collect(prefix, d, out);
  return out;
}

std::size_t degree_dimension(const GroebnerData& gb, std::size_t d) {
  check_bound(gb, d);
  std::vector<std::uint8_t> prefix;
  NormalWordWalker walker(gb);
  return walker.count(prefix, d);
}

std::vector<std::size_t> hilbert_coeffs(const GroebnerData& gb, std::size_t through) {
  check_bound(gb, through);
  std::vector<std::size_t> out;
  NormalWordWalker walker(gb);
  for (std::size_t d = 0; d <= through; ++d) {
    std::vector<std::uint8_t> prefix;
    out.push_back(walker.count(prefix, d));
  }
  return out;
}

FiniteDimVerdict finite_dim_check(const GroebnerData& gb) {
  FiniteDimVerdict v;
  v.bound = gb.complete_through();
  const auto dims = hilbert_coeffs(gb, gb.complete_through());
  std::size_t total = 0;
  for (std::size_t d = 0; d < dims.size(); ++d) {
    if (dims[d] == 0) {
      v.finite = true;
      v.dimension = total;
      v.vanishing_degree = d;
      return v;
    }
    total += dims[d];
  }
  return v;
}

DegreeCoordinates::DegreeCoordinates(const GroebnerData& gb, std::size_t degree)
    : gb_(&gb), degree_(degree), basis_(degree_basis(gb, degree)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

ScalarVector DegreeCoordinates::coordinates(const NcPoly& p) const {
  ScalarVector v(basis_.size(), Scalar(0));
  const NcPoly nf = normal_form(p, *gb_);
  for (const auto& [w, c] : nf.terms()) {
    if (w.degree() != degree_) throw Error("coordinates: element is not homogeneous of degree " + std::to_string(degree_));
    v[index_.at(w)] = c;
  }
  return v;
}

NcPoly DegreeCoordinates::element(const ScalarVector& coords) const {
  NcPoly out;
  for (std::size_t i = 0; i < coords.size(); ++i) out.add_term(basis_[i], coords[i]);
  return out;
}

}  // namespace skewcliff
