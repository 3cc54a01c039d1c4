#include <doctest.h>

#include "skewcliff/clifford.hpp"
#include "skewcliff/error.hpp"
#include "support.hpp"

using namespace skewcliff;
using testing::mat;

TEST_CASE("validate_mu examples") {
  CHECK_NOTHROW(testing::example_mu());
  CHECK(MuMatrix::ones(4).is_all_ones());
  CHECK_NOTHROW(validate_mu(ScalarMatrix(3, 3, Scalar(1))));
  CHECK_THROWS_WITH_AS(validate_mu(mat({{1, 2}, {2, 1}})), doctest::Contains("mu constraint violated at (1,2)"), Error);
  CHECK_THROWS_AS(validate_mu(mat({{2, 1}, {1, 1}})), Error);
  CHECK_THROWS_AS(validate_mu(mat({{1, 0}, {0, 1}})), Error);
}

TEST_CASE("check_mu_symmetric examples") {
  const auto mu = testing::example_mu();
  const Scalar h(1, 2);
  CHECK_NOTHROW(check_mu_symmetric(mat({{0, 1, 0}, {h, 0, 0}, {0, 0, 2}}), mu));
  CHECK_NOTHROW(check_mu_symmetric(mat({{1, 2, 3}, {2, 0, 5}, {3, 5, 7}}), MuMatrix::ones(3)));
  CHECK_THROWS_WITH_AS(check_mu_symmetric(mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}), mu),
                       doctest::Contains("not mu-symmetric at (1,2)"), Error);
}

TEST_CASE("quadratic forms of the example matrices") {
  const auto forms = testing::example_forms();
  CHECK(quadratic_form_of(forms[0]).to_poly() == parse_poly("2*z1^2"));
  CHECK(quadratic_form_of(forms[2]).to_poly() == parse_poly("2*z1*z2 + 2*z3^2"));
  const auto mu1 = MuMatrix::ones(2);
  CHECK(quadratic_form_of(MuSymmetricMatrix(mat({{0, 1}, {1, 0}}), mu1)).to_poly() == parse_poly("2*z1*z2"));
}

TEST_CASE("matrix_of_form examples") {
  const auto mu = testing::example_mu();
  const auto forms = testing::example_forms();
  CHECK(matrix_of_form(QuadraticForm::from_poly(parse_poly("2*z1*z2 + 2*z3^2"), 3), mu) == forms[2]);
  CHECK(matrix_of_form(QuadraticForm(3), mu).entries() == ScalarMatrix(3, 3));
  CHECK(matrix_of_form(QuadraticForm::from_poly(parse_poly("2*z1^2"), 3), mu) == forms[0]);
}

TEST_CASE("form and matrix maps are mutually inverse") {
  std::mt19937 rng(41);
  for (std::size_t n : {2, 3, 4}) {
    const auto mu = testing::random_mu(rng, n);
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = testing::random_mu_symmetric(rng, mu);
      CHECK(matrix_of_form(quadratic_form_of(m), mu) == m);
      QuadraticForm q(n);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) q.add(i, j, testing::small_rational(rng));
      CHECK(quadratic_form_of(matrix_of_form(q, mu)) == q);
    }
  }
}

TEST_CASE("skew ring presentations") {
  const auto s = build_skew_ring(testing::example_mu());
  REQUIRE(s.relations().size() == 3);
  CHECK(s.relations()[0] == parse_poly("z2*z1 - 2*z1*z2"));
  CHECK(s.relations()[1] == parse_poly("z3*z1 - z1*z3"));
  CHECK(s.relations()[2] == parse_poly("z3*z2 - z2*z3"));
  CHECK(build_skew_ring(MuMatrix::ones(3)).relations() == commutative_ring(3).relations());
  CHECK(build_skew_ring(MuMatrix::ones(1)).relations().empty());
}

TEST_CASE("example GSCA presentation") {
  const auto pres = testing::example_gsca();
  const auto gb = groebner(pres.algebra(), 3);
  const std::vector<NcPoly> expected{parse_poly("x1*x2 + 2*x2*x1 - x3^2"), parse_poly("x1*x3 + x3*x1"),
                                     parse_poly("x2*x3 + x3*x2")};
  REQUIRE(pres.x_relations.size() == 3);
  for (const auto& e : expected) CHECK(normal_form(e, gb).is_zero());
  for (std::size_t k = 0; k < 3; ++k) {
    const Word sq{static_cast<unsigned>(k + 1), static_cast<unsigned>(k + 1)};
    CHECK(normal_form(pres.y_expressions[k] - NcPoly::monomial(sq), gb).is_zero());
  }
}

TEST_CASE("y expressions satisfy the defining equations modulo the relations") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 3;
    const auto mu = testing::random_mu(rng, n);
    std::vector<MuSymmetricMatrix> ms;
    for (;;) {
      ms.clear();
      for (std::size_t k = 0; k < n; ++k) ms.push_back(testing::random_mu_symmetric(rng, mu));
      try {
        const auto pres = build_gsca(mu, ms);
        CHECK(pres.x_relations.size() == n * (n - 1) / 2);
        const auto gb = groebner(pres.algebra(), 3);
        for (std::size_t i = 1; i <= n; ++i)
          for (std::size_t j = 1; j <= n; ++j) {
            NcPoly rhs;
            for (std::size_t k = 0; k < n; ++k) rhs += pres.y_expressions[k] * ms[k](i, j);
            CHECK(normal_form(skew_anticommutator(mu, i, j) - rhs, gb).is_zero());
          }
        break;
      } catch (const Error&) {
      }
    }
  }
}

TEST_CASE("small builder examples") {
  const Scalar h(1, 2);
  const MuMatrix mu(mat({{1, 2}, {h, 1}}));
  const auto pres = build_gsca(mu, {MuSymmetricMatrix(testing::unit_matrix(2, 1, 1, 2), mu),
                                    MuSymmetricMatrix(testing::unit_matrix(2, 2, 2, 2), mu)});
  REQUIRE(pres.x_relations.size() == 1);
  CHECK(pres.x_relations[0] == parse_poly("x1*x2 + 2*x2*x1").monic());
  CHECK(pres.y_expressions[0] == parse_poly("x1^2"));
  CHECK(pres.y_expressions[1] == parse_poly("x2^2"));

  const auto gca = build_gca(testing::diagonal_gca_data(3));
  REQUIRE(gca.x_relations.size() == 3);
  const auto gb = groebner(gca.algebra(), 2);
  for (auto [i, j] : {std::pair{1u, 2u}, {1u, 3u}, {2u, 3u}})
    CHECK(normal_form(NcPoly::monomial(Word{i, j}) + NcPoly::monomial(Word{j, i}), gb).is_zero());

  CHECK(build_gca(testing::diagonal_gca_data(2)).x_relations == std::vector<NcPoly>{parse_poly("x2*x1 + x1*x2")});
}

TEST_CASE("dependent matrices are rejected") {
  const auto mu = MuMatrix::ones(2);
  const MuSymmetricMatrix m(testing::unit_matrix(2, 1, 1, 2), mu);
  CHECK_THROWS_WITH_AS(build_gsca(mu, {m, m}), doctest::Contains("matrices linearly dependent"), Error);
  CHECK_THROWS_AS(build_gca({testing::unit_matrix(2, 1, 1, 1), testing::unit_matrix(2, 1, 1, 3)}), Error);
}

TEST_CASE("gca centrality examples") {
  const auto b = build_gca(testing::diagonal_gca_data(3));
  const NcPoly x1 = NcPoly::generator(1), x2 = NcPoly::generator(2);
  CHECK(check_gca_centrality(b, x1, x2, 4).central);
  CHECK(check_gca_centrality(b, x1, x1, 4).central);
  CHECK_THROWS_AS(check_gca_centrality(testing::example_gsca(), x1, x2, 4), Error);

  std::mt19937 rng(8);
  for (int trial = 0; trial < 2; ++trial) {
    const auto g = build_gca(testing::random_gca_data(rng, 3));
    CHECK(check_gca_centrality(g, testing::random_linear(rng, 3), testing::random_linear(rng, 3), 4).central);
  }
}

TEST_CASE("quadric systems") {
  const auto forms = quadric_system_of(testing::example_gsca()).forms;
  REQUIRE(forms.size() == 3);
  CHECK(forms[0].to_poly() == parse_poly("2*z1^2"));
  CHECK(forms[1].to_poly() == parse_poly("2*z2^2"));
  CHECK(forms[2].to_poly() == parse_poly("2*z1*z2 + 2*z3^2"));
  const auto diag = quadric_system_of(build_gca(testing::diagonal_gca_data(2))).forms;
  CHECK(diag[0].to_poly() == parse_poly("2*z1^2"));
  CHECK(diag[1].to_poly() == parse_poly("2*z2^2"));
}

namespace {
QuadraticForm form(const char* text, std::size_t n) { return QuadraticForm::from_poly(parse_poly(text), n); }
}  // namespace

TEST_CASE("normalizing check examples") {
  const auto sys = quadric_system_of(testing::example_gsca());
  const auto v = normalizing_check(sys, 6);
  CHECK(v.normalizing);
  CHECK(v.order == std::vector<std::size_t>{0, 1, 2});
  CHECK(v.orders_tried == 1);

  CHECK(normalizing_check({MuMatrix::ones(2), {form("2*z1^2", 2), form("2*z2^2", 2)}}, 6).normalizing);
  CHECK(normalizing_check({testing::example_mu(), {form("z1*z2", 3)}}, 6).normalizing);
  // z2 (z1^2 + z1 z3) = (4 z1^2 + 2 z1 z3) z2, which is not a left multiple of the form.
  CHECK_FALSE(normalizing_check({testing::example_mu(), {form("z1^2 + z1*z3", 3)}}, 6).normalizing);
  CHECK_THROWS_AS(normalizing_check(sys, 2), Error);
}

TEST_CASE("base point checks") {
  const auto sys = quadric_system_of(testing::example_gsca());
  const auto v = base_point_free_check(sys, 8);
  CHECK(v.base_point_free);
  CHECK(v.dimension == 8);

  const auto single = base_point_free_check({MuMatrix::ones(3), {form("2*z1^2", 3)}}, 8);
  CHECK_FALSE(single.base_point_free);
  CHECK(single.bound == 8);

  const auto diag = base_point_free_check(quadric_system_of(build_gca(testing::diagonal_gca_data(3))), 8);
  CHECK(diag.base_point_free);
  CHECK(diag.dimension == 8);

  const auto warned = base_point_free_check({testing::example_mu(), {form("z1^2 + z1*z3", 3)}}, 6);
  CHECK(warned.warning);
}

TEST_CASE("regularity verdicts") {
  const auto ex = regularity_verdict(testing::example_gsca(), 8);
  CHECK(ex.regular);
  CHECK(ex.hilbert_matches);
  CHECK_FALSE(ex.hard_failure);
  CHECK(std::vector<std::size_t>(ex.hilbert.begin(), ex.hilbert.begin() + 8) ==
        std::vector<std::size_t>{1, 3, 6, 10, 15, 21, 28, 36});

  // The forms 2z1^2, 2z1z2, 2z2^2 leave z3 free.
  const auto degenerate = build_gca({testing::unit_matrix(3, 1, 1, 2),
                                     testing::sym_unit(3, 1, 2),
                                     testing::unit_matrix(3, 2, 2, 2)});
  const auto dv = regularity_verdict(degenerate, 6);
  CHECK_FALSE(dv.regular);
  CHECK_FALSE(dv.base_points.base_point_free);

  const auto diag = regularity_verdict(build_gca(testing::diagonal_gca_data(3)), 8);
  CHECK(diag.regular);
  CHECK(diag.hilbert == polynomial_ring_dims(3, 8));
}

TEST_CASE("regular implies polynomial dimensions") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 4; ++trial) {
    const auto pres = build_gca(testing::random_gca_data(rng, 3));
    const auto v = regularity_verdict(pres, 6);
    if (v.regular) CHECK(v.hilbert == polynomial_ring_dims(3, 6));
    CHECK_FALSE(v.hard_failure);
  }
}
