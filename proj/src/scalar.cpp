#include "skewcliff/scalar.hpp"

#include <cctype>

#include "skewcliff/error.hpp"

namespace skewcliff {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("malformed scalar \"" + std::string(text) + "\"");
  }
  std::string canonical(text.front() == '+' ? text.substr(1) : text);
  mpq_class q;
  if (q.set_str(canonical, 10) != 0) {
    throw ParseError("malformed scalar \"" + std::string(text) + "\"");
  }
  if (q.get_den() == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  return Scalar(std::move(q));
}

std::string Scalar::str() const { return value_.get_str(10); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  return Scalar(mpq_class(1 / value_));
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Scalar result(1);
  while (e != 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  value_ += other.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  value_ -= other.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  value_ *= other.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw Error("division by zero");
  value_ /= other.value_;
  return *this;
}

}  // namespace skewcliff
