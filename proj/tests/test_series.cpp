#include <doctest.h>

#include "helpers.hpp"
#include "poincare/engine.hpp"
#include "poincare/format.hpp"

using namespace poincare;
using testing::one;
using testing::z;

TEST_CASE("expand examples")
{
    const RationalSeriesForm r(2, one(2), {BinomialFactor(Monomial({1, 1}), 0)});
    CHECK(expand(r, 4).terms() == one(2) + z(2, 0) * z(2, 1) + z(2, 0, 2) * z(2, 1, 2));

    const TruncatedSeries c11 = expand(parse_form("1/((1 - z2*t)*(1 - z1*t)*(1 - z1*z2))", 2), 2);
    CHECK(c11.coefficient(Monomial({1, 0}, 1)) == 1);
    CHECK(c11.coefficient(Monomial({1, 1}, 0)) == 1);
    CHECK(c11.coefficient(Monomial({1, 1}, 2)) == 1);
    CHECK(c11.coefficient(Monomial({1, 1}, 1)) == 0);

    const LaurentPolynomial p = one(1) - LaurentPolynomial(Monomial(1).with_t(2));
    CHECK(expand(p, 5).terms() == p);
    // t is not truncated, only z
    CHECK(expand(LaurentPolynomial(Monomial({3}, 9)), 2).terms().is_zero());
}

TEST_CASE("series_equal examples")
{
    const RationalSeriesForm a(1, one(1), {BinomialFactor(Monomial({1}), 0)});
    const RationalSeriesForm b(1, one(1) + z(1, 0), {BinomialFactor(Monomial({2}), 0)});
    CHECK(series_equal(a, b, 6));
    CHECK_FALSE(series_equal(a, RationalSeriesForm(1, one(1), {}), 1));
    CHECK(series_equal(a, RationalSeriesForm(1, one(1), {}), 0));
}

TEST_CASE("geometric rejects a base without z")
{
    CHECK_THROWS_AS(geometric(Monomial(1).with_t(1), 3), std::invalid_argument);
    CHECK(geometric(Monomial({1}, -1), 3) ==
          LaurentPolynomial::from_terms({{Monomial({0}), 1}, {Monomial({1}, -1), 1}, {Monomial({2}, -2), 1}, {Monomial({3}, -3), 1}}));
    CHECK_THROWS_AS(expand(one(1), -1), std::invalid_argument);
}

TEST_CASE("expansion is a ring homomorphism up to truncation")
{
    std::mt19937 rng(41);
    for (int round = 0; round < 60; ++round) {
        const ElliottTerm a = testing::random_term(rng, 2, -2, 2);
        const ElliottTerm b = testing::random_term(rng, 2, -2, 2);
        Denominator den = a.denominator();
        den.insert(den.end(), b.denominator().begin(), b.denominator().end());
        const ElliottTerm ab(2, a.numerator() * b.numerator(), den);
        const int order = 6;
        CHECK(expand(ab, order) == (expand(a, order) * expand(b, order)).truncate(order));
        const auto p = testing::random_poly(rng, 2);
        const auto q = testing::random_poly(rng, 2);
        CHECK(expand(p * q, 4) == (expand(p, 4) * expand(q, 4)).truncate(4));
    }
}

TEST_CASE("truncation is monotone")
{
    std::mt19937 rng(43);
    for (int round = 0; round < 40; ++round) {
        const ElliottTerm term = testing::random_term(rng, 3, -3, 3);
        const TruncatedSeries big = expand(term, 8);
        for (int m = 0; m <= 8; ++m) {
            CHECK(big.truncate(m) == expand(term, m));
        }
        CHECK_THROWS_AS(expand(term, 3).truncate(4), std::invalid_argument);
    }
}

TEST_CASE("f_d is symmetric under t -> 1/t")
{
    for (const auto& d : std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 1}, {1, 2}, {2, 3}, {1, 1, 1}}) {
        const TruncatedSeries s = expand(build_f(Multidegree(d)), 6);
        const LaurentPolynomial flipped =
            s.terms().map_monomials([](const Monomial& m) { return m.with_t(-m.t()); });
        CHECK(flipped == s.terms());
    }
}
