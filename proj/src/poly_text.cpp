#include <cctype>
#include <string>

#include "skewcliff/error.hpp"
#include "skewcliff/nc_poly.hpp"

namespace skewcliff {

namespace {

std::string render_word(const Word& w, char letter) {
  std::string out;
  std::size_t i = 0;
  while (i < w.degree()) {
    std::size_t j = i;
    while (j < w.degree() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += letter;
    out += std::to_string(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  NcPoly parse() {
    NcPoly out;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      Scalar sign(1);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = Scalar(-1);
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [w, c] = term();
      out.add_term(w, c * sign);
      first = false;
      skip_space();
    }
    return out;
  }

 private:
  std::pair<Word, Scalar> term() {
    Scalar coeff(1);
    std::vector<std::uint8_t> letters;
    while (true) {
      skip_space();
      if (at_end()) fail("unexpected end of input");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= scalar();
      } else if (c == 'x' || c == 'z' || c == 'X' || c == 'Z') {
        ++pos_;
        const unsigned long index = integer();
        if (index == 0 || index > kMaxGenerators || (n_ > 0 && index > n_)) {
          fail("generator index " + std::to_string(index) + " out of range");
        }
        unsigned long power = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          power = integer();
        }
        letters.insert(letters.end(), power, static_cast<std::uint8_t>(index));
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {Word(std::move(letters)), coeff};
  }

  Scalar scalar() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return Scalar::parse(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  unsigned long integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial \"" + std::string(text_) + "\" at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render(const NcPoly& p, char letter) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const Scalar a = c.abs();
    if (w.empty()) {
      out += a.str();
    } else if (a.is_one()) {
      out += render_word(w, letter);
    } else {
      out += a.str() + "*" + render_word(w, letter);
    }
    first = false;
  }
  return out;
}

NcPoly parse_poly(std::string_view text, std::size_t n) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  if (trimmed == "0") return NcPoly{};
  return PolyParser(text, n).parse();
}

}  // namespace skewcliff
