#include "poincare/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace poincare {

BinomialFactor::BinomialFactor(Monomial base_, int mu_exp_) : base(std::move(base_)), mu_exp(mu_exp_)
{
    if (base.mu() != 0) {
        throw std::invalid_argument("binomial base must not contain mu");
    }
    if (!base.has_z()) {
        throw std::invalid_argument("binomial base must contain a z variable");
    }
}

LaurentPolynomial BinomialFactor::polynomial() const
{
    return LaurentPolynomial::constant(base.num_z(), 1) - LaurentPolynomial(monomial());
}

Denominator canonical(Denominator den)
{
    std::sort(den.begin(), den.end());
    return den;
}

LaurentPolynomial product(const Denominator& den, std::size_t num_z)
{
    return multiply_out(LaurentPolynomial::constant(num_z, 1), den);
}

LaurentPolynomial multiply_out(LaurentPolynomial p, const Denominator& den)
{
    for (const auto& f : den) {
        p = p.mul_binomial(f.monomial());
    }
    return p;
}

Denominator union_max(const Denominator& a, const Denominator& b)
{
    Denominator out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Denominator difference(const Denominator& a, const Denominator& b)
{
    Denominator out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    if (out.size() + b.size() != a.size()) {
        throw std::logic_error("denominator is not a sub-multiset");
    }
    return out;
}

ElliottTerm::ElliottTerm(std::size_t num_z, LaurentPolynomial numerator, Denominator denominator)
    : num_z_(num_z), numerator_(std::move(numerator)), denominator_(canonical(std::move(denominator)))
{
    for (const auto& [m, c] : numerator_) {
        if (m.num_z() != num_z_) {
            throw std::invalid_argument("numerator has the wrong number of z variables");
        }
    }
    for (const auto& f : denominator_) {
        if (f.base.num_z() != num_z_) {
            throw std::invalid_argument("denominator has the wrong number of z variables");
        }
    }
}

bool ElliottTerm::has_positive() const
{
    return std::any_of(denominator_.begin(), denominator_.end(), [](const auto& f) { return f.mu_exp > 0; });
}

bool ElliottTerm::has_negative() const
{
    return std::any_of(denominator_.begin(), denominator_.end(), [](const auto& f) { return f.mu_exp < 0; });
}

RationalSeriesForm::RationalSeriesForm(std::size_t num_z) : num_z_(num_z) {}

RationalSeriesForm::RationalSeriesForm(std::size_t num_z, LaurentPolynomial numerator, Denominator denominator)
    : num_z_(num_z), numerator_(std::move(numerator)), denominator_(canonical(std::move(denominator)))
{
    for (const auto& [m, c] : numerator_) {
        if (m.num_z() != num_z_ || m.mu() != 0) {
            throw std::invalid_argument("rational form numerator must be mu-free over the declared variables");
        }
    }
    for (const auto& f : denominator_) {
        if (f.base.num_z() != num_z_ || f.mu_exp != 0) {
            throw std::invalid_argument("rational form denominator must be mu-free over the declared variables");
        }
    }
}

RationalSeriesForm RationalSeriesForm::operator+(const RationalSeriesForm& other) const
{
    if (is_zero()) {
        return other;
    }
    if (other.is_zero()) {
        return *this;
    }
    if (denominator_ == other.denominator_) {
        return {num_z_, numerator_ + other.numerator_, denominator_};
    }
    Denominator common = union_max(denominator_, other.denominator_);
    LaurentPolynomial num = multiply_out(numerator_, difference(common, denominator_)) +
                            multiply_out(other.numerator_, difference(common, other.denominator_));
    return {num_z_, std::move(num), std::move(common)};
}

RationalSeriesForm RationalSeriesForm::operator-() const
{
    return {num_z_, -numerator_, denominator_};
}

bool RationalSeriesForm::same_function(const RationalSeriesForm& other) const
{
    return multiply_out(numerator_, other.denominator_) == multiply_out(other.numerator_, denominator_);
}

RationalSeriesForm normalize(const RationalSeriesForm& r)
{
    const auto n = r.num_z();
    if (r.is_zero()) {
        return RationalSeriesForm(n);
    }
    LaurentPolynomial numerator = r.numerator();
    Denominator kept;
    for (const auto& f : r.denominator()) {
        if (auto q = numerator.divide_by_binomial(f.base)) {
            numerator = std::move(*q);
        } else {
            kept.push_back(f);
        }
    }
    return {n, std::move(numerator), std::move(kept)};
}

RationalSeriesForm sum(std::vector<RationalSeriesForm> parts, std::size_t num_z)
{
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.denominator() < b.denominator(); });
    std::vector<RationalSeriesForm> level;
    for (auto& p : parts) {
        if (p.is_zero()) {
            continue;
        }
        if (!level.empty() && level.back().denominator() == p.denominator()) {
            level.back() = level.back() + p;
        } else {
            level.push_back(std::move(p));
        }
    }
    if (level.empty()) {
        return RationalSeriesForm(num_z);
    }
    // Neighbours in sorted order share most factors, which keeps the
    // intermediate common denominators small.
    while (level.size() > 1) {
        std::vector<RationalSeriesForm> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
            next.push_back(normalize(level[i] + level[i + 1]));
        }
        if (level.size() % 2 == 1) {
            next.push_back(std::move(level.back()));
        }
        level = std::move(next);
    }
    return normalize(level.front());
}

} // namespace poincare
