#include "poincare/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>

#include "poincare/format.hpp"
#include "poincare/series.hpp"

namespace poincare {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double v, int digits = 2)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string yes_no(bool v)
{
    return v ? "yes" : "no";
}

std::string agreement(const OracleReport& r)
{
    if (r.passed()) {
        return "agrees (" + std::to_string(r.checked) + " coefficients)";
    }
    return "disagrees (" + std::to_string(r.mismatches) + " mismatches; first " + r.first_mismatch + ")";
}

// Brute-force Omega on an expanded series: keep mu^e with e >= 0 (or e == 0)
// and drop mu.
LaurentPolynomial brute_omega(const TruncatedSeries& s, bool equal_only)
{
    return s.terms()
        .filter([&](const Monomial& m) { return equal_only ? m.mu() == 0 : m.mu() >= 0; })
        .map_monomials([](const Monomial& m) { return m.without_mu(); });
}

LaurentPolynomial permute_z(const LaurentPolynomial& p, const std::vector<std::size_t>& sigma)
{
    return p.map_monomials([&](const Monomial& m) {
        std::vector<int> z(m.num_z());
        for (std::size_t k = 0; k < m.num_z(); ++k) {
            z[sigma[k]] = m.z(k);
        }
        return Monomial(z, m.t(), m.mu());
    });
}

ElliottTerm random_term(std::mt19937& rng)
{
    constexpr std::size_t n = 2;
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::vector<LaurentPolynomial::Term> num;
    for (int k = pick(1, 2); k > 0; --k) {
        int c = pick(1, 2) * (pick(0, 1) ? 1 : -1);
        num.emplace_back(Monomial({pick(0, 1), pick(0, 1)}, 0, pick(-2, 2)), c);
    }
    Denominator den;
    for (int k = pick(1, 3); k > 0; --k) {
        std::vector<int> z{0, 0};
        for (int deg = pick(1, 2); deg > 0; --deg) {
            ++z[pick(0, 1)];
        }
        den.emplace_back(Monomial(z, pick(0, 1)), pick(-3, 3));
    }
    return {n, LaurentPolynomial::from_terms(std::move(num)), std::move(den)};
}

std::vector<std::vector<int>> sweep(int total)
{
    std::vector<std::vector<int>> out;
    std::vector<int> d;
    auto rec = [&](auto& self, int left, int largest) -> void {
        if (!d.empty()) {
            out.push_back(d);
        }
        for (int k = std::min(left, largest); k >= 1; --k) {
            d.push_back(k);
            self(self, left - k, k);
            d.pop_back();
        }
    };
    rec(rec, total, total);
    return out;
}

class Suite {
public:
    explicit Suite(const AcceptanceOptions& options) : options_(options) {}

    int cap(int value) const { return options_.order_cap > 0 ? std::min(value, options_.order_cap) : value; }

    const RationalSeriesForm& covariants(const std::vector<int>& d)
    {
        auto it = cov_.find(d);
        if (it == cov_.end()) {
            it = cov_.emplace(d, poincare_covariants(Multidegree(d), options_.pipeline)).first;
        }
        return it->second;
    }

    const RationalSeriesForm& invariants(const std::vector<int>& d)
    {
        auto it = inv_.find(d);
        if (it == inv_.end()) {
            it = inv_.emplace(d, poincare_invariants(Multidegree(d), options_.pipeline)).first;
        }
        return it->second;
    }

    CriterionResult golden(int id, bool want_covariants, double budget)
    {
        CriterionResult r{id, want_covariants ? "printed covariant series" : "printed invariant series", false, {}};
        const int order = cap(10);
        r.passed = true;
        for (const auto& p : printed_forms()) {
            if (p.covariants != want_covariants) {
                continue;
            }
            const auto start = Clock::now();
            const RationalSeriesForm& got = want_covariants ? covariants(p.d) : invariants(p.d);
            const double t = seconds_since(start);
            const RationalSeriesForm gold = parse_form(p.text, p.d.size());
            const bool equal = series_equal(got, gold, order);
            r.passed = r.passed && equal && t < budget;
            r.details.push_back(p.label + ": series equal to order " + std::to_string(order) + ": " + yes_no(equal) +
                                ", same rational function: " + yes_no(got.same_function(gold)) + ", " + fixed(t) +
                                " s");
        }
        return r;
    }

    CriterionResult adjudication()
    {
        CriterionResult r{3, "(2,2) covariants against the oracle", false, {}};
        const auto start = Clock::now();
        const Adjudication a = adjudicate_c22(cap(12), options_.pipeline);
        const double t = seconds_since(start);
        r.passed = a.pipeline.passed() && t < 60;
        const std::string bound = "2*m1 + 2*m2 <= " + std::to_string(a.weight_bound);
        r.details.push_back("pipeline output, " + bound + ": " + agreement(a.pipeline));
        r.details.push_back("printed form with (1 - z1) twice: " + agreement(a.printed));
        r.details.push_back("symmetrized reading with (1 - z1^2): " + agreement(a.symmetrized));
        return r;
    }

    CriterionResult cross_agreement()
    {
        CriterionResult r{4, "oracle cross-agreement", false, {}};
        r.passed = true;
        const int bound = cap(12);
        for (const auto& d : std::vector<std::vector<int>>{{1}, {2}, {3}, {4}, {1, 1}, {1, 2}, {1, 3}, {2, 2}}) {
            const Multidegree md(d);
            const OracleReport rep = verify_covariants(md, covariants(d), multidegrees_up_to(md, bound), true);
            r.passed = r.passed && rep.passed();
            r.details.push_back("d=" + md.to_string() + ", weight <= " + std::to_string(bound) + ": " + agreement(rep));
        }
        return r;
    }

    CriterionResult spot_values()
    {
        CriterionResult r{5, "spot dimensions", false, {}};
        const DimensionQuery q0(Multidegree({4}), {2}, 0);
        const DimensionQuery q2(Multidegree({4}), {2}, 2);
        const Integer w0 = omega_count(q0);
        const Integer w2 = omega_count(q2);
        const Integer dim4 = dim_covariants(q0);
        const bool quartic = w0 == 3 && w2 == 2 && dim4 == 1 && dim_via_extraction(q0) == 1;
        r.details.push_back("d=(4) m=(2) i=0: omega " + w0.str() + ", " + w2.str() + ", dimension " + dim4.str());

        const DimensionQuery q11(Multidegree({1, 1}), {1, 1}, 0);
        const Integer dim11 = dim_covariants(q11);
        const auto& printed = *std::find_if(printed_forms().begin(), printed_forms().end(),
                                            [](const PrintedForm& p) { return !p.covariants && p.d.size() == 2 && p.d[1] == 1; });
        const Integer coeff = expand(parse_form(printed.text, 2), 2).coefficient(Monomial({1, 1}));
        const bool pair = dim11 == 1 && coeff == 1;
        r.details.push_back("d=(1,1) m=(1,1) i=0: dimension " + dim11.str() + ", printed z1*z2 coefficient " +
                            coeff.str());
        r.passed = quartic && pair;
        return r;
    }

    CriterionResult properties()
    {
        CriterionResult r{6, "property suites", false, {}};
        r.passed = true;
        auto check = [&](const std::string& name, bool ok) {
            r.passed = r.passed && ok;
            r.details.push_back(name + ": " + (ok ? "ok" : "FAILED"));
        };
        const std::vector<std::vector<int>> test_set{{1}, {2}, {3}, {4}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {1, 1, 1}};
        const int wb = cap(10);

        bool symmetric = true;
        bool unimodal = true;
        bool support = true;
        bool totals = true;
        for (const auto& dv : test_set) {
            const Multidegree d(dv);
            for (const auto& m : multidegrees_up_to(d, wb)) {
                const int w = DimensionQuery(d, m, 0).weight_bound();
                totals = totals && total_dimension_check(d, m);
                for (int i = -w - 2; i <= w + 2; ++i) {
                    const Integer here = omega_count(DimensionQuery(d, m, i));
                    symmetric = symmetric && here == omega_count(DimensionQuery(d, m, -i));
                    if (std::abs(i) > w || (i - w) % 2 != 0) {
                        support = support && here == 0;
                    }
                    if (i >= 0 && (i - w) % 2 == 0) {
                        unimodal = unimodal && here >= omega_count(DimensionQuery(d, m, i + 2));
                    }
                }
            }
        }
        check("weight symmetry, weight <= " + std::to_string(wb), symmetric);
        check("unimodality", unimodal);
        check("parity and support", support);
        check("total dimension count", totals);

        const int order = cap(8);
        bool specialization = true;
        bool graded = true;
        for (const auto& dv : test_set) {
            const Multidegree d(dv);
            const TruncatedSeries cov = expand(covariants(dv), order);
            const LaurentPolynomial at_zero = cov.terms().filter([](const Monomial& m) { return m.t() == 0; });
            specialization = specialization && at_zero == expand(invariants(dv), order).terms();
            for (const auto& [m, c] : cov.terms()) {
                int w = 0;
                for (std::size_t k = 0; k < d.size(); ++k) {
                    w += d[k] * m.z(k);
                }
                graded = graded && c > 0 && m.t() >= 0 && m.t() <= w && (w - m.t()) % 2 == 0;
            }
        }
        check("t = 0 specialization, order " + std::to_string(order), specialization);
        check("nonnegativity and grading", graded);

        bool equivariant = true;
        for (auto dv : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 1, 2}}) {
            const LaurentPolynomial base = expand(covariants(dv), order).terms();
            std::vector<std::size_t> sigma(dv.size());
            std::iota(sigma.begin(), sigma.end(), 0);
            while (std::next_permutation(sigma.begin(), sigma.end())) {
                std::vector<int> permuted(dv.size());
                for (std::size_t k = 0; k < dv.size(); ++k) {
                    permuted[sigma[k]] = dv[k];
                }
                equivariant = equivariant && permute_z(base, sigma) == expand(covariants(permuted), order).terms();
            }
        }
        check("permutation equivariance, order " + std::to_string(order), equivariant);

        std::mt19937 rng(20240611);
        const int small = cap(6);
        int preserved = 0;
        for (int k = 0; k < 100; ++k) {
            const ElliottTerm term = random_term(rng);
            if (expand(term, small) == expand(elliott_reduce(term), small)) {
                ++preserved;
            }
        }
        check("Elliott reduction preserves " + std::to_string(preserved) + "/100 random terms, order " +
                  std::to_string(small),
              preserved == 100);

        const ElliottTerm crude(2, LaurentPolynomial::constant(2, 1),
                                {BinomialFactor(Monomial({1, 0}), 1), BinomialFactor(Monomial({0, 1}), -1)});
        const int crude_order = cap(10);
        const TruncatedSeries raw = expand(crude, crude_order);
        const RationalSeriesForm geq = parse_form("1/((1 - z1)*(1 - z1*z2))", 2);
        const RationalSeriesForm eq = parse_form("1/(1 - z1*z2)", 2);
        check("crude Omega >= 0",
              brute_omega(raw, false) == expand(geq, crude_order).terms() && series_equal(omega_geq(crude), geq, crude_order));
        check("crude Omega = 0",
              brute_omega(raw, true) == expand(eq, crude_order).terms() && series_equal(omega_eq(crude), eq, crude_order));
        return r;
    }

    CriterionResult performance(double elapsed_before)
    {
        CriterionResult r{7, "performance envelope", false, {}};
        const auto start = Clock::now();
        double slowest = 0;
        std::string which;
        for (const auto& dv : sweep(6)) {
            const auto t0 = Clock::now();
            (void)poincare_covariants(Multidegree(dv), options_.pipeline);
            const double t = seconds_since(t0);
            if (t >= slowest) {
                slowest = t;
                which = Multidegree(dv).to_string();
            }
        }
        const double total = elapsed_before + seconds_since(start);
        r.passed = slowest < 60 && total < 600;
        r.details.push_back("all d with sum <= 6, slowest " + which + " at " + fixed(slowest) + " s (limit 60 s)");
        r.details.push_back("suite total " + fixed(total, 1) + " s (limit 600 s)");
        return r;
    }

private:
    AcceptanceOptions options_;
    std::map<std::vector<int>, RationalSeriesForm> cov_;
    std::map<std::vector<int>, RationalSeriesForm> inv_;
};

} // namespace

const std::vector<PrintedForm>& printed_forms()
{
    static const std::vector<PrintedForm> forms{
        {"C(1,1)", {1, 1}, true, "1/((1 - z2*t)*(1 - z1*t)*(1 - z1*z2))"},
        {"C(1,2)", {1, 2}, true, "(1 + z1*z2*t)/((1 - z2*t^2)*(1 - z2^2)*(1 - z1*t)*(1 - z1^2*z2))"},
        {"I(1,1)", {1, 1}, false, "1/(1 - z1*z2)"},
        {"I(1,3)", {1, 3}, false, "(1 + z2^2*z1^2 - z2*z1)/((1 - z2^4)*(1 - z1^3*z2)*(1 - z2*z1))"},
    };
    return forms;
}

const PrintedForm& printed_c22()
{
    static const PrintedForm form{"C(2,2) as printed", {2, 2}, true,
                                  "(1 + z1*z2*t^2)/((1 - z1)*(1 - z2*t^2)*(1 - z2^2)*(1 - z1*t^2)*(1 - z2*z1)*(1 - z1))"};
    return form;
}

const PrintedForm& symmetrized_c22()
{
    static const PrintedForm form{"C(2,2) symmetrized", {2, 2}, true,
                                  "(1 + z1*z2*t^2)/((1 - z1^2)*(1 - z2*t^2)*(1 - z2^2)*(1 - z1*t^2)*(1 - z2*z1))"};
    return form;
}

Adjudication adjudicate_c22(int weight_bound, const PipelineOptions& options)
{
    const Multidegree d({2, 2});
    const auto ms = multidegrees_up_to(d, weight_bound);
    Adjudication a;
    a.weight_bound = weight_bound;
    a.pipeline = verify_covariants(d, poincare_covariants(d, options), ms);
    a.printed = verify_covariants(d, parse_form(printed_c22().text, 2), ms);
    a.symmetrized = verify_covariants(d, parse_form(symmetrized_c22().text, 2), ms);
    return a;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result)
{
    Suite suite(options);
    std::vector<CriterionResult> out;
    const auto start = Clock::now();
    auto run = [&](auto&& f) {
        const auto t0 = Clock::now();
        CriterionResult r = f();
        r.seconds = seconds_since(t0);
        if (on_result) {
            on_result(r);
        }
        out.push_back(std::move(r));
    };
    run([&] { return suite.golden(1, true, 5); });
    run([&] { return suite.golden(2, false, 10); });
    run([&] { return suite.adjudication(); });
    run([&] { return suite.cross_agreement(); });
    run([&] { return suite.spot_values(); });
    run([&] { return suite.properties(); });
    run([&] { return suite.performance(seconds_since(start)); });
    return out;
}

std::string summary_line(const CriterionResult& r)
{
    return std::string(r.passed ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + "  " + r.title + "  (" +
           fixed(r.seconds) + " s)";
}

} // namespace poincare
