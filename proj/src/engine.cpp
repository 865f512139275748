#include "poincare/engine.hpp"

#include <numeric>
#include <stdexcept>

namespace poincare {

Multidegree::Multidegree(std::vector<int> degrees) : degrees_(std::move(degrees))
{
    if (degrees_.empty()) {
        throw std::invalid_argument("multidegree needs at least one form");
    }
    for (int d : degrees_) {
        if (d < 1) {
            throw std::invalid_argument("form degrees must be positive");
        }
    }
}

int Multidegree::total() const
{
    return std::accumulate(degrees_.begin(), degrees_.end(), 0);
}

std::string Multidegree::to_string() const
{
    std::string out = "(";
    for (std::size_t k = 0; k < degrees_.size(); ++k) {
        out += (k ? "," : "") + std::to_string(degrees_[k]);
    }
    return out + ")";
}

ElliottTerm build_f(const Multidegree& d)
{
    const auto n = d.size();
    Denominator den;
    for (std::size_t k = 0; k < n; ++k) {
        for (int j = 0; j <= d[k]; ++j) {
            den.emplace_back(Monomial::z_var(n, k).with_t(d[k] - 2 * j), 0);
        }
    }
    return {n, LaurentPolynomial::constant(n, 1), std::move(den)};
}

ElliottTerm build_covariant_operand(const Multidegree& d, bool include_order_factor)
{
    const auto n = d.size();
    Denominator den;
    for (std::size_t k = 0; k < n; ++k) {
        for (int j = 0; j <= d[k]; ++j) {
            den.emplace_back(Monomial::z_var(n, k), d[k] - 2 * j);
        }
    }
    LaurentPolynomial numerator = LaurentPolynomial::constant(n, 1);
    if (include_order_factor) {
        numerator -= LaurentPolynomial(Monomial(n).with_mu(-2));
    }
    return {n, std::move(numerator), std::move(den)};
}

ElliottTerm attach_order_variable(const ElliottTerm& term)
{
    LaurentPolynomial numerator =
        term.numerator().map_monomials([](const Monomial& m) { return m.with_t(m.t() + m.mu()); });
    Denominator den;
    for (const auto& f : term.denominator()) {
        den.emplace_back(f.base.with_t(f.base.t() + f.mu_exp), f.mu_exp);
    }
    return {term.num_z(), std::move(numerator), std::move(den)};
}

RationalSeriesForm poincare_covariants(const Multidegree& d, const PipelineOptions& options)
{
    const ElliottTerm operand = attach_order_variable(build_covariant_operand(d, options.include_order_factor));
    return omega_geq(operand, nullptr, options.rule);
}

RationalSeriesForm poincare_invariants(const Multidegree& d, const PipelineOptions& options)
{
    const ElliottTerm operand = build_covariant_operand(d, options.include_order_factor);
    return omega_eq(operand, nullptr, options.rule);
}

} // namespace poincare
