#include "poincare/series.hpp"

#include <stdexcept>

namespace poincare {

namespace {

TruncatedSeries expand_fraction(const LaurentPolynomial& numerator, const Denominator& den, int order)
{
    LaurentPolynomial acc = numerator.filter([order](const Monomial& m) { return m.z_degree() <= order; });
    for (const auto& f : den) {
        if (acc.is_zero()) {
            break;
        }
        acc = acc.mul_truncated(geometric(f.monomial(), order), order);
    }
    return {order, std::move(acc)};
}

} // namespace

TruncatedSeries::TruncatedSeries(int order, LaurentPolynomial terms) : order_(order), terms_(std::move(terms))
{
    if (order < 0) {
        throw std::invalid_argument("series order must be nonnegative");
    }
    if (terms_.max_z_degree() > order_) {
        throw std::invalid_argument("series term exceeds truncation order");
    }
}

TruncatedSeries TruncatedSeries::truncate(int order) const
{
    if (order > order_) {
        throw std::invalid_argument("cannot extend a truncated series");
    }
    return {order, terms_.filter([order](const Monomial& m) { return m.z_degree() <= order; })};
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const
{
    const int order = std::min(order_, other.order_);
    return {order, terms_.mul_truncated(other.terms_, order)};
}

LaurentPolynomial geometric(const Monomial& m, int order)
{
    const int step = m.z_degree();
    if (step == 0) {
        throw std::invalid_argument("cannot expand a factor whose base has no z variable");
    }
    std::vector<LaurentPolynomial::Term> terms;
    Monomial power(m.num_z());
    for (int deg = 0; deg <= order; deg += step) {
        terms.emplace_back(power, 1);
        power = power * m;
    }
    return LaurentPolynomial::from_terms(std::move(terms));
}

TruncatedSeries expand(const LaurentPolynomial& p, int order)
{
    return expand_fraction(p, {}, order);
}

TruncatedSeries expand(const RationalSeriesForm& r, int order)
{
    return expand_fraction(r.numerator(), r.denominator(), order);
}

TruncatedSeries expand(const ElliottTerm& t, int order)
{
    return expand_fraction(t.numerator(), t.denominator(), order);
}

TruncatedSeries expand(const std::vector<ElliottTerm>& terms, int order)
{
    LaurentPolynomial acc;
    for (const auto& t : terms) {
        acc += expand(t, order).terms();
    }
    return {order, std::move(acc)};
}

} // namespace poincare
