#pragma once

#include <random>
#include <vector>

#include "poincare/elliott.hpp"
#include "poincare/series.hpp"

namespace testing {

using namespace poincare;

inline int pick(std::mt19937& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// A few terms in z_1..z_n, t, mu with small exponents.
inline LaurentPolynomial random_poly(std::mt19937& rng, std::size_t n, int terms = 4)
{
    std::vector<LaurentPolynomial::Term> out;
    for (int k = 0; k < terms; ++k) {
        std::vector<int> z(n);
        for (auto& e : z) {
            e = pick(rng, 0, 2);
        }
        out.emplace_back(Monomial(z, pick(rng, -2, 2), pick(rng, -2, 2)), pick(rng, -3, 3));
    }
    return LaurentPolynomial::from_terms(std::move(out));
}

/// Base of z-degree 1..max_degree, optionally with a t.
inline Monomial random_base(std::mt19937& rng, std::size_t n, int max_degree)
{
    std::vector<int> z(n, 0);
    for (int deg = pick(rng, 1, max_degree); deg > 0; --deg) {
        ++z[pick(rng, 0, static_cast<int>(n) - 1)];
    }
    return Monomial(z, pick(rng, 0, 1));
}

/// mu exponents drawn from [lo, hi].
inline ElliottTerm random_term(std::mt19937& rng, int factors, int lo, int hi)
{
    constexpr std::size_t n = 2;
    std::vector<LaurentPolynomial::Term> num;
    for (int k = pick(rng, 1, 2); k > 0; --k) {
        num.emplace_back(Monomial({pick(rng, 0, 1), pick(rng, 0, 1)}, 0, pick(rng, -2, 2)), pick(rng, -2, 2));
    }
    Denominator den;
    for (int k = 0; k < factors; ++k) {
        den.emplace_back(random_base(rng, n, 2), pick(rng, lo, hi));
    }
    return {n, LaurentPolynomial::from_terms(std::move(num)), std::move(den)};
}

/// Omega by filtering an expanded series: keep mu^e for e >= 0 (or e == 0), drop mu.
inline LaurentPolynomial brute_omega(const TruncatedSeries& s, bool equal_only)
{
    return s.terms()
        .filter([&](const Monomial& m) { return equal_only ? m.mu() == 0 : m.mu() >= 0; })
        .map_monomials([](const Monomial& m) { return m.without_mu(); });
}

inline LaurentPolynomial z(std::size_t n, std::size_t k, int power = 1)
{
    return LaurentPolynomial(Monomial::z_var(n, k, power));
}

inline LaurentPolynomial one(std::size_t n)
{
    return LaurentPolynomial::constant(n, 1);
}

} // namespace testing
