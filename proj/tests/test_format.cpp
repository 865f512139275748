#include <doctest.h>

#include "poincare/acceptance.hpp"
#include "poincare/engine.hpp"
#include "poincare/format.hpp"
#include "poincare/series.hpp"

using namespace poincare;

TEST_CASE("text rendering")
{
    const RationalSeriesForm c12 = poincare_covariants(Multidegree({1, 2}));
    CHECK(render_text(c12) == "(1 + z1*z2*t)/((1 - z2*t^2)*(1 - z1*t)*(1 - z2^2)*(1 - z1^2*z2))");
    CHECK(render_text(poincare_invariants(Multidegree({1, 1}))) == "1/(1 - z1*z2)");
    CHECK(render_text(poincare_invariants(Multidegree({1}))) == "1");
    CHECK(render_text(RationalSeriesForm(1)) == "0");

    const RationalSeriesForm repeated = parse_form("(2 - 3*z1^2*t)/((1 - z1)*(1 - z1))", 1);
    CHECK(render_text(repeated) == "(2 - 3*z1^2*t)/((1 - z1)^2)");
    CHECK(render_text(parse_form("-z1/(1 - z1)", 1)) == "(-z1)/(1 - z1)");
}

TEST_CASE("latex rendering")
{
    CHECK(render_latex(poincare_covariants(Multidegree({1, 1}))) ==
          "\\frac{1}{\\left(1 - z_{2} t\\right)\\left(1 - z_{1} t\\right)\\left(1 - z_{1} z_{2}\\right)}");
    CHECK(render_latex(parse_form("(1 + 2*z1^3)/((1 - z1)*(1 - z1))", 1)) ==
          "\\frac{1 + 2 z_{1}^{3}}{\\left(1 - z_{1}\\right)^{2}}");
    CHECK(render_latex(parse_form("1 - z1*t", 1)) == "1 - z_{1} t");
}

TEST_CASE("parsing")
{
    const RationalSeriesForm r = parse_form(" (1+z1*z2*t) / ((1-z2*t^2)*(1-z2^2)) ", 2);
    CHECK(r.denominator().size() == 2);
    CHECK(r.numerator().size() == 2);

    // powers of binomials are binomial products
    CHECK(parse_form("1/(1 - z1)^3", 1).denominator().size() == 3);
    // sums of fractions are combined
    CHECK(series_equal(parse_form("1/(1 - z1) - z1/(1 - z1)", 1), parse_form("1", 1), 8));
    CHECK(parse_form("t^-2*z1", 1).numerator().terms()[0].first == Monomial({1}, -2));
    CHECK(parse_form("-(1 - z1)", 1).numerator() == parse_form("z1 - 1", 1).numerator());

    for (const char* bad : {"1/(1 + z1)", "1/(1 - t)", "1/2", "(1 - z1", "z3", "z0", "1 -", "x", "1/(1 - z1)^-1",
                            "z1^-1", "", "2 3"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_form(bad, 2), std::invalid_argument);
    }
}

TEST_CASE("text round-trips through the parser")
{
    for (const auto& d : std::vector<std::vector<int>>{{1}, {2}, {1, 2}, {2, 2}, {1, 3}, {3, 2}, {1, 1, 1}}) {
        for (const RationalSeriesForm& r : {poincare_covariants(Multidegree(d)), poincare_invariants(Multidegree(d))}) {
            const RationalSeriesForm back = parse_form(render_text(r), d.size());
            CHECK(back == r);
            CHECK(series_equal(back, r, 6));
        }
    }
    for (const auto& p : printed_forms()) {
        const RationalSeriesForm r = parse_form(p.text, p.d.size());
        CHECK(parse_form(render_text(r), p.d.size()) == r);
    }
}

TEST_CASE("structured form round-trips")
{
    for (const auto& d : std::vector<std::vector<int>>{{1}, {1, 1}, {1, 2}, {2, 2}, {3, 2}, {1, 1, 1}}) {
        const RationalSeriesForm r = poincare_covariants(Multidegree(d));
        const nlohmann::json j = result_json(r);
        const RationalSeriesForm back = form_from_json(j, d.size());
        CHECK(back == r);
        CHECK(result_json(back) == j);
        CHECK(nlohmann::json::parse(j.dump()) == j);
        CHECK(series_equal(parse_form(j["text"].get<std::string>(), d.size()), back, 6));
    }
}

TEST_CASE("structured form layout")
{
    const nlohmann::json j = form_to_json(poincare_invariants(Multidegree({1, 1})));
    CHECK(j["numerator"] == nlohmann::json::parse(R"([{"coeff": 1, "exponents": [0, 0, 0]}])"));
    CHECK(j["denominator"] == nlohmann::json::parse(R"([{"base_exponents": [1, 1, 0], "multiplicity": 1}])"));

    const RationalSeriesForm big(1, LaurentPolynomial::constant(1, Integer("123456789012345678901234567890")), {});
    const nlohmann::json jb = form_to_json(big);
    CHECK(jb["numerator"][0]["coeff"] == "123456789012345678901234567890");
    CHECK(form_from_json(jb, 1) == big);

    CHECK_THROWS_AS(form_from_json(nlohmann::json::parse(R"({"numerator": []})"), 1), std::invalid_argument);
    CHECK_THROWS_AS(form_from_json(nlohmann::json::parse(R"({"numerator": [{"coeff": 1, "exponents": [0]}], "denominator": []})"), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(form_from_json(nlohmann::json::parse(R"({"numerator": [], "denominator": [{"base_exponents": [0, 1], "multiplicity": 1}]})"), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(form_from_json(nlohmann::json::parse(R"({"numerator": [{"coeff": "1x", "exponents": [0, 0]}], "denominator": []})"), 1),
                    std::invalid_argument);
}
