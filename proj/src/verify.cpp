#include "poincare/verify.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "poincare/series.hpp"

namespace poincare {

namespace {

std::string describe(const std::vector<int>& m, int i)
{
    std::string out = "m=(";
    for (std::size_t k = 0; k < m.size(); ++k) {
        out += (k ? "," : "") + std::to_string(m[k]);
    }
    return out + ") i=" + std::to_string(i);
}

void record(OracleReport& report, const std::string& what)
{
    if (report.mismatches++ == 0) {
        report.first_mismatch = what;
    }
}

int max_total(const std::vector<std::vector<int>>& ms)
{
    int order = 0;
    for (const auto& m : ms) {
        order = std::max(order, std::accumulate(m.begin(), m.end(), 0));
    }
    return order;
}

} // namespace

OracleReport verify_covariants(const Multidegree& d, const RationalSeriesForm& series,
                               const std::vector<std::vector<int>>& ms, bool cross_check)
{
    OracleReport report;
    const TruncatedSeries s = expand(series, max_total(ms));
    std::unordered_set<Monomial> seen;
    std::unordered_set<std::vector<int>, boost::hash<std::vector<int>>> wanted(ms.begin(), ms.end());
    for (const auto& m : ms) {
        const DimensionQuery top(d, m, 0);
        const int w = top.weight_bound();
        for (int i = w % 2; i <= w; i += 2) {
            const DimensionQuery q(d, m, i);
            const Monomial mono = Monomial(m, i);
            seen.insert(mono);
            const Integer expected = dim_covariants(q);
            const Integer got = s.coefficient(mono);
            ++report.checked;
            if (got != expected) {
                record(report, describe(m, i) + ": series " + got.str() + ", oracle " + expected.str());
            } else if (cross_check) {
                const Integer other = dim_via_extraction(q);
                if (other != expected) {
                    record(report, describe(m, i) + ": extraction " + other.str() + ", omega " + expected.str());
                }
            }
        }
    }
    for (const auto& [mono, c] : s.terms()) {
        if (wanted.contains(mono.z_exponents()) && !seen.contains(mono)) {
            record(report, describe(mono.z_exponents(), mono.t()) + ": series " + c.str() + " outside the support");
        }
    }
    return report;
}

OracleReport verify_invariants(const Multidegree& d, const RationalSeriesForm& series,
                               const std::vector<std::vector<int>>& ms)
{
    OracleReport report;
    const TruncatedSeries s = expand(series, max_total(ms));
    std::unordered_set<std::vector<int>, boost::hash<std::vector<int>>> wanted(ms.begin(), ms.end());
    for (const auto& m : ms) {
        const Integer expected = dim_covariants(DimensionQuery(d, m, 0));
        const Integer got = s.coefficient(Monomial(m, 0));
        ++report.checked;
        if (got != expected) {
            record(report, describe(m, 0) + ": series " + got.str() + ", oracle " + expected.str());
        }
    }
    for (const auto& [mono, c] : s.terms()) {
        if (mono.t() != 0 && wanted.contains(mono.z_exponents())) {
            record(report, describe(mono.z_exponents(), mono.t()) + ": invariant series carries t");
        }
    }
    return report;
}

std::vector<std::vector<int>> multidegrees_of_total_degree(std::size_t n, int order)
{
    std::vector<std::vector<int>> out;
    std::vector<int> m(n, 0);
    auto rec = [&](auto& self, std::size_t k, int left) -> void {
        if (k == n) {
            out.push_back(m);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            m[k] = v;
            self(self, k + 1, left - v);
        }
        m[k] = 0;
    };
    rec(rec, 0, order);
    return out;
}

} // namespace poincare
