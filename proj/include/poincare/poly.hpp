#pragma once

// Sparse Laurent polynomials in z_1..z_n, t and the elimination variable mu,
// with arbitrary-precision integer coefficients.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace poincare {

using Integer = boost::multiprecision::cpp_int;

/// Exponent vector (z_1..z_n, t, mu). z exponents are nonnegative; t and mu
/// exponents are arbitrary integers. At most `max_z` z variables.
class Monomial {
public:
    static constexpr std::size_t max_z = 14;
    using Lanes = std::array<std::int16_t, max_z + 2>;

    Monomial() = default;
    explicit Monomial(std::size_t num_z);
    Monomial(std::initializer_list<int> z, int t = 0, int mu = 0);
    Monomial(const std::vector<int>& z, int t = 0, int mu = 0);

    static Monomial z_var(std::size_t num_z, std::size_t k, int power = 1);

    std::size_t num_z() const { return num_z_; }
    int z(std::size_t k) const { return lanes_[k]; }
    int t() const { return lanes_[num_z_]; }
    int mu() const { return lanes_[num_z_ + 1]; }
    int z_degree() const { return degree_; }
    bool is_one() const;
    bool has_z() const { return degree_ > 0; }

    Monomial with_t(int t) const;
    Monomial with_mu(int mu) const;
    Monomial without_mu() const { return with_mu(0); }
    std::vector<int> z_exponents() const { return {lanes_.begin(), lanes_.begin() + num_z_}; }
    /// z_1..z_n, t, mu followed by zero lanes.
    const Lanes& lanes() const { return lanes_; }

    Monomial operator*(const Monomial& other) const;
    Monomial pow(int k) const;
    /// this / other when the z part stays nonnegative.
    std::optional<Monomial> divide(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Graded lex on (total z-degree, z_1..z_n, t, mu).
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        if (auto c = a.degree_ <=> b.degree_; c != 0) {
            return c;
        }
        return a.lanes_ <=> b.lanes_;
    }

    std::size_t hash() const;

private:
    static std::int16_t narrow(long v);

    // z_1..z_n, t, mu, then unused zero lanes.
    Lanes lanes_{};
    std::int16_t degree_ = 0;
    std::uint8_t num_z_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Finite sum of Monomials with nonzero Integer coefficients, kept sorted in
/// ascending canonical order.
class LaurentPolynomial {
public:
    using Term = std::pair<Monomial, Integer>;

    LaurentPolynomial() = default;
    LaurentPolynomial(const Monomial& m, Integer c = 1);
    /// Constant polynomial with the given number of z variables.
    static LaurentPolynomial constant(std::size_t num_z, Integer c);
    static LaurentPolynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    Integer coefficient(const Monomial& m) const;
    /// Largest total z-degree present; 0 for the zero polynomial.
    int max_z_degree() const;
    int min_mu() const;
    int max_mu() const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial operator+(const LaurentPolynomial& other) const;
    LaurentPolynomial operator-(const LaurentPolynomial& other) const;
    LaurentPolynomial operator*(const LaurentPolynomial& other) const;
    LaurentPolynomial operator*(const Monomial& m) const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& other) { return *this = *this + other; }
    LaurentPolynomial& operator-=(const LaurentPolynomial& other) { return *this = *this - other; }
    LaurentPolynomial& operator*=(const LaurentPolynomial& other) { return *this = *this * other; }

    /// Keeps terms satisfying the predicate.
    LaurentPolynomial filter(const std::function<bool(const Monomial&)>& keep) const;
    /// Applies an exponent map to every monomial; collisions are summed.
    LaurentPolynomial map_monomials(const std::function<Monomial(const Monomial&)>& f) const;
    /// Product truncated to total z-degree <= order.
    LaurentPolynomial mul_truncated(const LaurentPolynomial& other, int order) const;

    /// this * (1 - m), as a linear merge.
    LaurentPolynomial mul_binomial(const Monomial& m) const { return *this - *this * m; }
    /// Exact quotient by (1 - m), or nullopt when (1 - m) does not divide.
    std::optional<LaurentPolynomial> divide_by_binomial(const Monomial& m) const;

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    bool chain_classes_balance(const Monomial& m) const;

    std::vector<Term> terms_;
};

LaurentPolynomial poly_add(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial poly_mul(const LaurentPolynomial& a, const LaurentPolynomial& b);
Integer coefficient_of(const LaurentPolynomial& p, const Monomial& m);

} // namespace poincare

template <>
struct std::hash<poincare::Monomial> {
    std::size_t operator()(const poincare::Monomial& m) const { return m.hash(); }
};
