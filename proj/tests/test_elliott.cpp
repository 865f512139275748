#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "poincare/engine.hpp"

using namespace poincare;
using testing::one;
using testing::z;

namespace {

BinomialFactor factor(std::vector<int> zexp, int mu, int t = 0)
{
    return {Monomial(zexp, t), mu};
}

LaurentPolynomial mu_pow(std::size_t n, int k)
{
    return LaurentPolynomial(Monomial(n).with_mu(k));
}

RationalSeriesForm form(std::size_t n, LaurentPolynomial num, Denominator den = {})
{
    return {n, std::move(num), std::move(den)};
}

// x = z1, y = z2
const BinomialFactor x_pos = factor({1, 0}, 1);
const BinomialFactor y_neg = factor({0, 1}, -1);

} // namespace

TEST_CASE("elliott_step on the basic pair")
{
    const ElliottTerm term(2, one(2), {x_pos, y_neg});
    const auto parts = elliott_step(term, x_pos, y_neg);
    const BinomialFactor xy = factor({1, 1}, 0);
    CHECK(parts[0] == ElliottTerm(2, one(2), {xy, x_pos}));
    CHECK(parts[1] == ElliottTerm(2, one(2), {xy, y_neg}));
    CHECK(parts[2] == ElliottTerm(2, -one(2), {xy}));
    // the identity itself, cleared of denominators
    const LaurentPolynomial lhs = product({xy}, 2);
    const LaurentPolynomial rhs = product({y_neg}, 2) + product({x_pos}, 2) - product({x_pos, y_neg}, 2);
    CHECK(lhs == rhs);
}

TEST_CASE("elliott_step exponent arithmetic")
{
    const BinomialFactor p2 = factor({1, 0}, 2);
    const ElliottTerm term(2, one(2), {p2, y_neg});
    const auto parts = elliott_step(term, p2, y_neg);
    CHECK(std::count(parts[0].denominator().begin(), parts[0].denominator().end(), factor({1, 1}, 1)) == 1);
    CHECK(series_equal(std::vector<ElliottTerm>(parts.begin(), parts.end()), term, 8));
}

TEST_CASE("elliott_step carries other factors and the numerator")
{
    const BinomialFactor other = factor({2, 0}, 3, 1);
    const LaurentPolynomial num = one(2) - mu_pow(2, -2);
    const ElliottTerm term(2, num, {x_pos, y_neg, other});
    const auto parts = elliott_step(term, x_pos, y_neg);
    for (const auto& part : parts) {
        CHECK(std::count(part.denominator().begin(), part.denominator().end(), other) == 1);
    }
    CHECK(parts[0].numerator() == num);
    CHECK(parts[2].numerator() == -num);
    CHECK(expand(std::vector<ElliottTerm>(parts.begin(), parts.end()), 8) == expand(term, 8));
}

TEST_CASE("elliott_step rejects bad input")
{
    const ElliottTerm term(2, one(2), {x_pos, y_neg});
    CHECK_THROWS_AS(elliott_step(term, y_neg, x_pos), std::invalid_argument);
    CHECK_THROWS_AS(elliott_step(term, factor({0, 1}, 1), y_neg), std::invalid_argument);
    CHECK_THROWS_AS(elliott_step(term, x_pos, factor({1, 0}, -1)), std::invalid_argument);
    CHECK_THROWS_AS(elliott_step(term, factor({1, 0}, 0), y_neg), std::invalid_argument);
}

TEST_CASE("factor invariants")
{
    CHECK_THROWS_AS(BinomialFactor(Monomial(2), 1), std::invalid_argument);
    CHECK_THROWS_AS(BinomialFactor(Monomial(2).with_t(1), 1), std::invalid_argument);
    CHECK_THROWS_AS(BinomialFactor(Monomial({1, 0}, 0, 1), 1), std::invalid_argument);
    CHECK_THROWS_AS(RationalSeriesForm(2, mu_pow(2, 1), {}), std::invalid_argument);
    CHECK_THROWS_AS(RationalSeriesForm(2, one(2), {x_pos}), std::invalid_argument);
    CHECK_THROWS_AS(ElliottTerm(3, one(2), {}), std::invalid_argument);
}

TEST_CASE("elliott_reduce small cases")
{
    const ElliottTerm mixed(2, one(2), {x_pos, y_neg});
    const auto parts = elliott_reduce(mixed);
    CHECK(parts.size() == 3);
    for (const auto& p : parts) {
        CHECK_FALSE(p.mixed());
    }

    const ElliottTerm free(2, one(2) + z(2, 0), {factor({1, 1}, 0)});
    CHECK(elliott_reduce(free) == std::vector<ElliottTerm>{free});

    CHECK(elliott_reduce(ElliottTerm(2, LaurentPolynomial(), {x_pos, y_neg})).empty());
}

TEST_CASE("d = (1) operand reduces to 1/(1 - z1 t)")
{
    const ElliottTerm operand = attach_order_variable(build_covariant_operand(Multidegree({1})));
    const auto parts = elliott_reduce(operand);
    for (const auto& p : parts) {
        CHECK_FALSE(p.mixed());
    }
    const RationalSeriesForm total = sum(omega_geq_parts(operand), 1);
    const RationalSeriesForm expected(1, one(1), {BinomialFactor(Monomial({1}, 1), 0)});
    CHECK(series_equal(total, expected, 12));
    CHECK(total.same_function(expected));
}

TEST_CASE("positive_part examples")
{
    const ElliottTerm base(2, one(2), {x_pos, y_neg});
    const RationalSeriesForm crude = omega_geq(base);
    const RationalSeriesForm crude_expected(2, one(2), {factor({1, 0}, 0), factor({1, 1}, 0)});
    CHECK(crude.same_function(crude_expected));
    CHECK(testing::brute_omega(expand(base, 10), false) == expand(crude_expected, 10).terms());

    const ElliottTerm shifted(2, mu_pow(2, -2), {x_pos, y_neg});
    const RationalSeriesForm shifted_expected(2, z(2, 0, 2), {factor({1, 0}, 0), factor({1, 1}, 0)});
    CHECK(omega_geq(shifted).same_function(shifted_expected));
    CHECK(testing::brute_omega(expand(shifted, 10), false) == expand(shifted_expected, 10).terms());

    const ElliottTerm free(2, one(2) + z(2, 1), {factor({1, 1}, 0)});
    CHECK(positive_part(free) == form(2, one(2) + z(2, 1), {factor({1, 1}, 0)}));
    CHECK_THROWS_AS(positive_part(ElliottTerm(2, one(2), {y_neg})), std::invalid_argument);
}

TEST_CASE("negative_side_part examples")
{
    CHECK(negative_side_part(ElliottTerm(2, one(2), {y_neg})) == form(2, one(2)));
    CHECK(negative_side_part(ElliottTerm(2, mu_pow(2, 2), {y_neg})) == form(2, one(2) + z(2, 1) + z(2, 1, 2)));
    CHECK(negative_side_part(ElliottTerm(2, mu_pow(2, -1), {y_neg})).is_zero());
    CHECK_THROWS_AS(negative_side_part(ElliottTerm(2, one(2), {x_pos})), std::invalid_argument);
}

TEST_CASE("mu_zero_part examples")
{
    const ElliottTerm base(2, one(2), {x_pos, y_neg});
    const RationalSeriesForm diag = omega_eq(base);
    CHECK(diag.same_function(form(2, one(2), {factor({1, 1}, 0)})));
    CHECK(testing::brute_omega(expand(base, 10), true) == expand(diag, 10).terms());

    CHECK(mu_zero_part(ElliottTerm(2, one(2), {x_pos})) == form(2, one(2)));
    CHECK(mu_zero_part(ElliottTerm(2, mu_pow(2, -1), {x_pos})) == form(2, z(2, 0)));
    CHECK_THROWS_AS(mu_zero_part(base), std::invalid_argument);
}

TEST_CASE("mu_series_coefficient examples")
{
    const Denominator den{factor({1, 0}, 1), factor({0, 1}, 2)};
    CHECK(mu_series_coefficient(den, 0, 2) == form(2, one(2)));
    CHECK(mu_series_coefficient(den, 2, 2) == form(2, z(2, 0, 2) + z(2, 1)));
    CHECK(mu_series_coefficient({factor({1, 0}, 0), factor({0, 1}, 1)}, 1, 2) ==
          form(2, z(2, 1), {factor({1, 0}, 0)}));
    CHECK_THROWS_AS(mu_series_coefficient({y_neg}, 1, 2), std::invalid_argument);
}

TEST_CASE("reduction preserves the series on random terms")
{
    std::mt19937 rng(101);
    for (int round = 0; round < 150; ++round) {
        const ElliottTerm term = testing::random_term(rng, testing::pick(rng, 1, 4), -3, 3);
        ReduceStats stats;
        const auto parts = elliott_reduce(term, &stats);
        for (const auto& p : parts) {
            CHECK_FALSE(p.mixed());
        }
        const int order = round < 30 ? 8 : 6;
        CHECK(expand(parts, order) == expand(term, order));
    }
}

TEST_CASE("step count stays bounded")
{
    // Ceilings sit well above the observed counts; a runaway loop (as the
    // smallest-first pairing has on d = (1,2)) blows straight through them.
    for (const auto& [d, ceiling] : std::vector<std::pair<std::vector<int>, std::size_t>>{
             {{1}, 10}, {{1, 2}, 100}, {{2, 2}, 200}, {{1, 1, 1}, 200}, {{3, 2}, 1000}, {{4, 1, 1}, 5000}}) {
        ReduceStats stats;
        (void)elliott_reduce(build_covariant_operand(Multidegree(d)), &stats);
        CHECK(stats.steps > 0);
        CHECK(stats.steps < ceiling);
    }
    std::mt19937 rng(17);
    for (int round = 0; round < 100; ++round) {
        ReduceStats stats;
        (void)elliott_reduce(testing::random_term(rng, 5, -4, 4), &stats);
        CHECK(stats.steps < 2000);
    }
}

TEST_CASE("the result does not depend on the pairing rule")
{
    std::mt19937 rng(23);
    for (int round = 0; round < 60; ++round) {
        const ElliottTerm term = testing::random_term(rng, 4, -3, 3);
        const auto a = elliott_reduce(term, nullptr, PairRule::largest_partner);
        const auto b = elliott_reduce(term, nullptr, PairRule::smallest_partner);
        CHECK(expand(a, 6) == expand(b, 6));
        CHECK(series_equal(omega_geq(term, nullptr, PairRule::largest_partner),
                           omega_geq(term, nullptr, PairRule::smallest_partner), 6));
    }
    for (const auto& d : std::vector<std::vector<int>>{{1, 2}, {2, 2}, {3, 1}, {1, 1, 1}}) {
        PipelineOptions other;
        other.rule = PairRule::smallest_partner;
        CHECK(poincare_covariants(Multidegree(d)).same_function(poincare_covariants(Multidegree(d), other)));
        CHECK(poincare_invariants(Multidegree(d)).same_function(poincare_invariants(Multidegree(d), other)));
    }
}

TEST_CASE("Omega agrees with brute force on one-sided terms")
{
    std::mt19937 rng(29);
    for (int round = 0; round < 120; ++round) {
        const bool positive = round % 2 == 0;
        const ElliottTerm term = positive ? testing::random_term(rng, testing::pick(rng, 1, 3), 0, 3)
                                          : testing::random_term(rng, testing::pick(rng, 1, 3), -3, 0);
        const TruncatedSeries raw = expand(term, 8);
        const RationalSeriesForm geq = positive ? positive_part(term) : negative_side_part(term);
        CHECK(expand(geq, 8).terms() == testing::brute_omega(raw, false));
        CHECK(expand(mu_zero_part(term), 8).terms() == testing::brute_omega(raw, true));
    }
}

TEST_CASE("Omega is linear")
{
    std::mt19937 rng(31);
    for (int round = 0; round < 40; ++round) {
        const ElliottTerm a = testing::random_term(rng, 3, -2, 2);
        const ElliottTerm b = testing::random_term(rng, 3, -2, 2);
        const ElliottTerm joined(2, a.numerator() * product(b.denominator(), 2) + b.numerator() * product(a.denominator(), 2),
                                 [&] {
                                     Denominator d = a.denominator();
                                     d.insert(d.end(), b.denominator().begin(), b.denominator().end());
                                     return d;
                                 }());
        CHECK(series_equal(omega_geq(joined), omega_geq(a) + omega_geq(b), 6));
        CHECK(series_equal(omega_eq(joined), omega_eq(a) + omega_eq(b), 6));
        // on term lists
        std::vector<ElliottTerm> both{a, b};
        const auto reduced = elliott_reduce(both);
        RationalSeriesForm total(2);
        for (const auto& t : reduced) {
            total = total + (t.has_negative() ? negative_side_part(t) : positive_part(t));
        }
        CHECK(series_equal(total, omega_geq(a) + omega_geq(b), 6));
    }
}
