#include "skewcliff/nc_poly.hpp"

#include <algorithm>

#include "skewcliff/error.hpp"

namespace skewcliff {

Word::Word(std::initializer_list<unsigned> letters) {
  letters_.reserve(letters.size());
  for (unsigned l : letters) {
    if (l == 0 || l > kMaxGenerators) throw Error("generator index out of range");
    letters_.push_back(static_cast<std::uint8_t>(l));
  }
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<std::uint8_t>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                        letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

std::optional<std::size_t> Word::find(const Word& needle, std::size_t from) const {
  if (needle.degree() > degree()) return std::nullopt;
  auto it = std::search(letters_.begin() + static_cast<std::ptrdiff_t>(from), letters_.end(),
                        needle.letters_.begin(), needle.letters_.end());
  if (it == letters_.end() && !needle.empty()) return std::nullopt;
  return static_cast<std::size_t>(it - letters_.begin());
}

Word operator+(const Word& a, const Word& b) {
  std::vector<std::uint8_t> out;
  out.reserve(a.degree() + b.degree());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

std::strong_ordering compare_deglex(const Word& a, const Word& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  return std::lexicographical_compare_three_way(a.letters().begin(), a.letters().end(),
                                                b.letters().begin(), b.letters().end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the letters.
  std::size_t h = 1469598103934665603ULL;
  for (std::uint8_t l : w.letters()) {
    h ^= l;
    h *= 1099511628211ULL;
  }
  return h ^ w.degree();
}

NcPoly NcPoly::generator(unsigned index) { return monomial(Word{index}); }

NcPoly NcPoly::monomial(const Word& w, const Scalar& coeff) {
  NcPoly p;
  p.add_term(w, coeff);
  return p;
}

const Word& NcPoly::leading_word() const {
  if (terms_.empty()) throw Error("leading word of the zero polynomial");
  return terms_.rbegin()->first;
}

const Scalar& NcPoly::leading_coeff() const {
  if (terms_.empty()) throw Error("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

Scalar NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<std::size_t> NcPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const std::size_t d = terms_.begin()->first.degree();
  if (terms_.rbegin()->first.degree() != d) return std::nullopt;
  return d;
}

std::size_t NcPoly::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

unsigned NcPoly::max_letter() const {
  unsigned best = 0;
  for (const auto& [w, c] : terms_)
    for (std::uint8_t l : w.letters()) best = std::max<unsigned>(best, l);
  return best;
}

void NcPoly::add_term(const Word& w, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPoly NcPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading_coeff().inverse();
}

NcPoly& NcPoly::operator+=(const NcPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

NcPoly nc_mul(const NcPoly& p, const NcPoly& q) {
  NcPoly out;
  for (const auto& [wp, cp] : p.terms())
    for (const auto& [wq, cq] : q.terms()) out.add_term(wp + wq, cp * cq);
  return out;
}

NcPoly sandwich(const Word& left, const NcPoly& p, const Word& right, const Scalar& coeff) {
  NcPoly out;
  if (coeff.is_zero()) return out;
  for (const auto& [w, c] : p.terms()) out.add_term(left + w + right, c * coeff);
  return out;
}

LinearMap::LinearMap(ScalarMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw Error("linear map must be square");
  if (matrix_.rows() > kMaxGenerators) throw Error("too many generators");
}

LinearMap LinearMap::identity(std::size_t n) { return LinearMap(identity_matrix(n)); }

LinearMap LinearMap::diagonal(const std::vector<Scalar>& entries) {
  ScalarMatrix m(entries.size(), entries.size(), Scalar(0));
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return LinearMap(std::move(m));
}

bool LinearMap::is_invertible() const { return rank(matrix_) == n(); }

bool LinearMap::is_diagonal() const {
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j)
      if (i != j && !matrix_(i, j).is_zero()) return false;
  return true;
}

LinearMap LinearMap::inverse() const {
  auto inv = skewcliff::inverse(matrix_);
  if (!inv) throw Error("singular map");
  return LinearMap(std::move(*inv));
}

NcPoly LinearMap::image_of_generator(unsigned index) const {
  if (index == 0 || index > n()) throw Error("generator index out of range for linear map");
  NcPoly out;
  for (std::size_t i = 0; i < n(); ++i) {
    out.add_term(Word{static_cast<unsigned>(i + 1)}, matrix_(i, index - 1));
  }
  return out;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
  return LinearMap(matrix_ * inner.matrix_);
}

NcPoly apply_linear(const LinearMap& map, const NcPoly& p) {
  std::vector<NcPoly> images;
  images.reserve(map.n());
  for (std::size_t i = 1; i <= map.n(); ++i) images.push_back(map.image_of_generator(static_cast<unsigned>(i)));
  NcPoly out;
  for (const auto& [w, c] : p.terms()) {
    NcPoly term = NcPoly::monomial(Word{}, c);
    for (std::uint8_t l : w.letters()) {
      if (l > map.n()) throw Error("polynomial uses a generator outside the map's domain");
      term = nc_mul(term, images[l - 1]);
    }
    out += term;
  }
  return out;
}

}  // namespace skewcliff
