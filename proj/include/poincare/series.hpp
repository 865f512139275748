#pragma once

// Truncated multivariate power series: expansion of rational forms to a
// bound on total z-degree, and equality of forms up to that bound.

#include "poincare/forms.hpp"

namespace poincare {

class TruncatedSeries {
public:
    TruncatedSeries(int order, LaurentPolynomial terms);

    int order() const { return order_; }
    const LaurentPolynomial& terms() const { return terms_; }
    Integer coefficient(const Monomial& m) const { return terms_.coefficient(m); }

    /// Restriction to total z-degree <= order (order must not exceed this one).
    TruncatedSeries truncate(int order) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    int order_;
    LaurentPolynomial terms_;
};

/// Geometric expansion of (1 - m)^-1 up to total z-degree `order`.
LaurentPolynomial geometric(const Monomial& m, int order);

TruncatedSeries expand(const LaurentPolynomial& p, int order);
TruncatedSeries expand(const RationalSeriesForm& r, int order);
TruncatedSeries expand(const ElliottTerm& t, int order);
TruncatedSeries expand(const std::vector<ElliottTerm>& terms, int order);

template <typename A, typename B>
bool series_equal(const A& a, const B& b, int order)
{
    return expand(a, order).terms() == expand(b, order).terms();
}

} // namespace poincare
