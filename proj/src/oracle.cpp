#include "poincare/oracle.hpp"

#include <stdexcept>

#include "poincare/series.hpp"

namespace poincare {

namespace {

struct Enumerator {
    const Multidegree& d;
    const std::vector<int>& m;
    int target;
    // suffix_bound[k] = sum_{k' >= k} d_k' m_k'
    std::vector<int> suffix_bound;
    Integer count = 0;

    Enumerator(const Multidegree& d_, const std::vector<int>& m_, int target_) : d(d_), m(m_), target(target_)
    {
        suffix_bound.assign(d.size() + 1, 0);
        for (std::size_t k = d.size(); k-- > 0;) {
            suffix_bound[k] = suffix_bound[k + 1] + d[k] * m[k];
        }
    }

    // Form k, slot j, with `left` units of m_k still to place.
    void run(std::size_t k, int j, int left, int weight)
    {
        if (k == d.size()) {
            if (weight == target) {
                ++count;
            }
            return;
        }
        // Remaining slots j..d_k of form k reach weights in
        // [-left d_k, left (d_k - 2j)], the later forms +-suffix_bound.
        const int hi = weight + left * (d[k] - 2 * j) + suffix_bound[k + 1];
        const int lo = weight - left * d[k] - suffix_bound[k + 1];
        if (target > hi || target < lo) {
            return;
        }
        if (j == d[k]) {
            run(k + 1, 0, k + 1 < d.size() ? m[k + 1] : 0, weight - left * d[k]);
            return;
        }
        const int slot_weight = d[k] - 2 * j;
        for (int a = 0; a <= left; ++a) {
            run(k, j + 1, left - a, weight + a * slot_weight);
        }
    }
};

Integer binomial(int n, int k)
{
    Integer out = 1;
    for (int r = 1; r <= k; ++r) {
        out = out * (n - k + r) / r;
    }
    return out;
}

} // namespace

DimensionQuery::DimensionQuery(Multidegree d_, std::vector<int> m_, int i_) : d(std::move(d_)), m(std::move(m_)), i(i_)
{
    if (m.size() != d.size()) {
        throw std::invalid_argument("multidegree m and degrees d have different lengths");
    }
    for (int mk : m) {
        if (mk < 0) {
            throw std::invalid_argument("multidegree entries must be nonnegative");
        }
    }
}

int DimensionQuery::weight_bound() const
{
    int w = 0;
    for (std::size_t k = 0; k < d.size(); ++k) {
        w += d[k] * m[k];
    }
    return w;
}

Integer omega_count(const DimensionQuery& q)
{
    Enumerator e(q.d, q.m, q.i);
    e.run(0, 0, q.m[0], 0);
    return e.count;
}

Integer dim_covariants(const DimensionQuery& q)
{
    if (q.i < 0) {
        throw std::invalid_argument("order must be nonnegative");
    }
    return omega_count(q) - omega_count(DimensionQuery(q.d, q.m, q.i + 2));
}

Integer dim_via_extraction(const DimensionQuery& q)
{
    if (q.i < 0) {
        throw std::invalid_argument("order must be nonnegative");
    }
    const auto n = q.d.size();
    // f_d(z_k t^d_k, t) has factors (1 - z_k t^(2 d_k - 2j)).
    Denominator den;
    for (std::size_t k = 0; k < n; ++k) {
        for (int j = 0; j <= q.d[k]; ++j) {
            den.emplace_back(Monomial::z_var(n, k).with_t(2 * q.d[k] - 2 * j), 0);
        }
    }
    const LaurentPolynomial numerator =
        LaurentPolynomial::constant(n, 1) - LaurentPolynomial(Monomial(n).with_t(2));
    int order = 0;
    for (int mk : q.m) {
        order += mk;
    }
    const RationalSeriesForm substituted(n, numerator, std::move(den));
    return expand(substituted, order).coefficient(Monomial(q.m, q.weight_bound() - q.i));
}

bool total_dimension_check(const Multidegree& d, const std::vector<int>& m)
{
    const DimensionQuery base(d, m, 0);
    const int bound = base.weight_bound();
    Integer total = 0;
    for (int i = -bound; i <= bound; ++i) {
        total += omega_count(DimensionQuery(d, m, i));
    }
    Integer expected = 1;
    for (std::size_t k = 0; k < d.size(); ++k) {
        expected *= binomial(m[k] + d[k], d[k]);
    }
    return total == expected;
}

std::vector<std::vector<int>> multidegrees_up_to(const Multidegree& d, int bound)
{
    std::vector<std::vector<int>> out;
    std::vector<int> m(d.size(), 0);
    auto rec = [&](auto&& self, std::size_t k, int left) -> void {
        if (k == d.size()) {
            out.push_back(m);
            return;
        }
        for (int mk = 0; mk * d[k] <= left; ++mk) {
            m[k] = mk;
            self(self, k + 1, left - mk * d[k]);
        }
        m[k] = 0;
    };
    rec(rec, 0, bound);
    return out;
}

} // namespace poincare
