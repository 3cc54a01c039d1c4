#include <doctest.h>

#include "skewcliff/error.hpp"
#include "skewcliff/nc_poly.hpp"
#include "support.hpp"

using namespace skewcliff;

TEST_CASE("nc_mul examples") {
  const NcPoly x1 = NcPoly::generator(1), x2 = NcPoly::generator(2);
  const NcPoly p = x1 * x2;
  REQUIRE(p.size() == 1);
  CHECK(p.coeff(Word{1, 2}) == Scalar(1));
  CHECK(p.coeff(Word{2, 1}).is_zero());

  const NcPoly q = (x1 + x2) * (x1 - x2);
  CHECK(q == parse_poly("x1*x1 - x1*x2 + x2*x1 - x2*x2"));
  CHECK(NcPoly::unit() * q == q);
  CHECK(q * NcPoly::unit() == q);
}

TEST_CASE("compare_deglex examples") {
  CHECK(compare_deglex(Word{3}, Word{1, 2}) < 0);
  CHECK(compare_deglex(Word{1, 2}, Word{2, 1}) < 0);
  CHECK(compare_deglex(Word{}, Word{1}) < 0);
  CHECK(compare_deglex(Word{2, 2}, Word{2, 2}) == 0);
}

TEST_CASE("deglex is a total order compatible with multiplication") {
  const auto words = testing::all_words(3, 2);
  auto shorter = testing::all_words(3, 1);
  shorter.push_back(Word{});
  std::vector<Word> pool = words;
  pool.insert(pool.end(), shorter.begin(), shorter.end());
  for (const auto& a : pool)
    for (const auto& b : pool) {
      const auto ab = compare_deglex(a, b);
      CHECK((ab < 0) == (compare_deglex(b, a) > 0));
      CHECK((ab == 0) == (a == b));
      if (ab < 0)
        for (const auto& w : shorter) {
          CHECK(compare_deglex(w + a, w + b) < 0);
          CHECK(compare_deglex(a + w, b + w) < 0);
        }
    }
}

TEST_CASE("apply_linear examples") {
  const LinearMap d = LinearMap::diagonal({Scalar(3), Scalar(5)});
  CHECK(apply_linear(d, NcPoly::monomial(Word{1, 2})) == NcPoly::monomial(Word{1, 2}, 15));
  const NcPoly p = parse_poly("x1*x2 - 3*x2^2 + x1");
  CHECK(apply_linear(LinearMap::identity(2), p) == p);
  CHECK(apply_linear(LinearMap::diagonal({Scalar(1), Scalar(2)}), parse_poly("x2*x2")) == parse_poly("4*x2^2"));
}

TEST_CASE("apply_linear respects composition") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    ScalarMatrix a(3, 3), b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        a(i, j) = testing::small_rational(rng);
        b(i, j) = testing::small_rational(rng);
      }
    const LinearMap phi(a), psi(b);
    NcPoly p = testing::random_linear(rng, 3) * testing::random_linear(rng, 3) + testing::random_linear(rng, 3);
    CHECK(apply_linear(phi.compose(psi), p) == apply_linear(phi, apply_linear(psi, p)));
  }
}

TEST_CASE("product degrees add") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const NcPoly p = testing::random_linear(rng, 3) * testing::random_linear(rng, 3);
    const NcPoly q = testing::random_linear(rng, 3);
    if (p.is_zero() || q.is_zero()) continue;
    CHECK(*(p * q).homogeneous_degree() == *p.homogeneous_degree() + *q.homogeneous_degree());
  }
  CHECK_FALSE(parse_poly("x1 + x1*x2").homogeneous_degree());
  CHECK_FALSE(NcPoly().homogeneous_degree());
}

TEST_CASE("leading word is the deglex largest term") {
  const NcPoly p = parse_poly("x1*x2 + 2*x2*x1 - x3^2");
  CHECK(p.leading_word() == Word{3, 3});
  CHECK(p.leading_coeff() == Scalar(-1));
  CHECK(p.monic().leading_coeff().is_one());
  CHECK_THROWS(NcPoly().leading_word());
}

TEST_CASE("render and parse round trip") {
  const NcPoly p = parse_poly("x1*x2 + 2*x2*x1 - x3^2");
  CHECK(render(p) == "x1*x2 + 2*x2*x1 - x3^2");
  CHECK(parse_poly(render(p)) == p);
  CHECK(render(parse_poly("z2*z1 - 2*z1*z2"), 'z') == "-2*z1*z2 + z2*z1");
  CHECK(render(NcPoly()) == "0");
  CHECK(render(parse_poly("1/2*x3")) == "1/2*x3");
  CHECK(parse_poly("X1*X2") == parse_poly("x1*x2"));
  CHECK(parse_poly("x1^3") == NcPoly::monomial(Word{1, 1, 1}));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_poly("x1 +"), ParseError);
  CHECK_THROWS_AS(parse_poly("y1"), ParseError);
  CHECK_THROWS_AS(parse_poly("x4", 3), ParseError);
  CHECK_THROWS_AS(parse_poly("x0"), ParseError);
  CHECK_THROWS_AS(parse_poly("x17"), ParseError);
}

TEST_CASE("singular linear maps") {
  const LinearMap s(testing::mat({{1, 2}, {2, 4}}));
  CHECK_FALSE(s.is_invertible());
  CHECK_THROWS_WITH_AS(s.inverse(), "singular map", Error);
  const LinearMap d = LinearMap::diagonal({Scalar(2), Scalar(-1)});
  CHECK(d.is_diagonal());
  CHECK(d.compose(d.inverse()) == LinearMap::identity(2));
}
