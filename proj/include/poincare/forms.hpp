#pragma once

// Rational forms built from binomial denominators (1 - base * mu^a).

#include <cstddef>
#include <vector>

#include "poincare/poly.hpp"

namespace poincare {

/// The factor (1 - base * mu^mu_exp). The base is a monomial in z (and
/// possibly t) carrying at least one z variable.
struct BinomialFactor {
    Monomial base;
    int mu_exp = 0;

    BinomialFactor() = default;
    BinomialFactor(Monomial base_, int mu_exp_);

    /// base * mu^mu_exp as a single monomial.
    Monomial monomial() const { return base.with_mu(mu_exp); }
    LaurentPolynomial polynomial() const;

    friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
    friend auto operator<=>(const BinomialFactor&, const BinomialFactor&) = default;
};

using Denominator = std::vector<BinomialFactor>;

/// Sorts into canonical order.
Denominator canonical(Denominator den);
/// Expanded product of the factors.
LaurentPolynomial product(const Denominator& den, std::size_t num_z);
/// p * prod(den), one binomial at a time.
LaurentPolynomial multiply_out(LaurentPolynomial p, const Denominator& den);
/// Multiset union taking the larger multiplicity of each factor.
Denominator union_max(const Denominator& a, const Denominator& b);
/// Multiset difference a \ b (b must be a sub-multiset of a).
Denominator difference(const Denominator& a, const Denominator& b);

/// numerator / prod(denominator), expanded z-adically, with mu still present.
class ElliottTerm {
public:
    ElliottTerm(std::size_t num_z, LaurentPolynomial numerator, Denominator denominator);

    std::size_t num_z() const { return num_z_; }
    const LaurentPolynomial& numerator() const { return numerator_; }
    const Denominator& denominator() const { return denominator_; }

    bool has_positive() const;
    bool has_negative() const;
    bool mixed() const { return has_positive() && has_negative(); }
    bool mu_free() const { return !has_positive() && !has_negative(); }

    friend bool operator==(const ElliottTerm&, const ElliottTerm&) = default;

private:
    std::size_t num_z_;
    LaurentPolynomial numerator_;
    Denominator denominator_;
};

/// A mu-free rational function numerator / prod(1 - base).
class RationalSeriesForm {
public:
    explicit RationalSeriesForm(std::size_t num_z);
    RationalSeriesForm(std::size_t num_z, LaurentPolynomial numerator, Denominator denominator);

    std::size_t num_z() const { return num_z_; }
    const LaurentPolynomial& numerator() const { return numerator_; }
    const Denominator& denominator() const { return denominator_; }
    bool is_zero() const { return numerator_.is_zero(); }

    RationalSeriesForm operator+(const RationalSeriesForm& other) const;
    RationalSeriesForm operator-() const;

    /// Cross-multiplied equality: a.num * b.den == b.num * a.den.
    bool same_function(const RationalSeriesForm& other) const;

    friend bool operator==(const RationalSeriesForm&, const RationalSeriesForm&) = default;

private:
    std::size_t num_z_;
    LaurentPolynomial numerator_;
    Denominator denominator_;
};

/// Cancels denominator factors that divide the numerator exactly. The
/// rational function is unchanged.
RationalSeriesForm normalize(const RationalSeriesForm& r);

/// Sum of forms. Parts with equal denominators are added first, the rest are
/// combined pairwise with cancellation after every addition.
RationalSeriesForm sum(std::vector<RationalSeriesForm> parts, std::size_t num_z);

} // namespace poincare
