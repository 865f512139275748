#pragma once

// MacMahon Omega elimination of the auxiliary variable mu by Elliott
// reduction.
//
// Every factor (1 - B mu^a)^-1 denotes sum_{k>=0} B^k mu^{a k}, whatever the
// sign of a. Since each base B carries a z variable this is a well-defined
// z-adic expansion, and the Omega operators act on it coefficientwise:
//
//   omega_geq  keeps the mu^e terms with e >= 0, then sets mu = 1;
//   omega_eq   keeps the mu^0 terms.

#include <array>
#include <cstddef>
#include <vector>

#include "poincare/forms.hpp"

namespace poincare {

/// One application of
///   1/((1-A mu^p)(1-B mu^-q)) = 1/(1-AB mu^(p-q)) * [1/(1-A mu^p) + 1/(1-B mu^-q) - 1]
/// to the chosen pair. Throws std::invalid_argument if either factor is absent
/// or has the wrong sign.
std::array<ElliottTerm, 3> elliott_step(const ElliottTerm& term, const BinomialFactor& pos,
                                        const BinomialFactor& neg);

/// Which mixed pair elliott_reduce eliminates next. One member is always a
/// factor of largest |mu exponent|: then every step lowers
/// (max |exponent|, number of factors at the max, factors on the other side)
/// lexicographically and reduction terminates. The result does not depend on
/// the partner choice, only the amount of work does.
enum class PairRule {
    largest_partner,  ///< partner of largest |exponent| on the other side
    smallest_partner, ///< partner of smallest |exponent| on the other side
};

struct ReduceStats {
    std::size_t steps = 0;
    std::size_t merges = 0;
};

/// Splits a term into a sum of terms whose denominators are one-sided in mu.
/// Terms with identical denominators are merged; zero terms are dropped.
std::vector<ElliottTerm> elliott_reduce(const ElliottTerm& term, ReduceStats* stats = nullptr,
                                        PairRule rule = PairRule::largest_partner);
std::vector<ElliottTerm> elliott_reduce(const std::vector<ElliottTerm>& terms, ReduceStats* stats = nullptr,
                                        PairRule rule = PairRule::largest_partner);

/// Omega>=0 of a term whose denominator exponents are all >= 0.
RationalSeriesForm positive_part(const ElliottTerm& term);
/// Omega>=0 of a term whose denominator exponents are all <= 0.
RationalSeriesForm negative_side_part(const ElliottTerm& term);
/// Omega=0 of a one-sided term.
RationalSeriesForm mu_zero_part(const ElliottTerm& term);

/// Coefficient of mu^k in prod (1 - base mu^a)^-1, all a >= 0. Factors with
/// a = 0 stay in the result's denominator.
RationalSeriesForm mu_series_coefficient(const Denominator& den, int k, std::size_t num_z);

/// Full Omega>=0: reduce, apply the one-sided rule per term, and sum.
std::vector<RationalSeriesForm> omega_geq_parts(const ElliottTerm& term, ReduceStats* stats = nullptr,
                                                PairRule rule = PairRule::largest_partner);
RationalSeriesForm omega_geq(const ElliottTerm& term, ReduceStats* stats = nullptr,
                             PairRule rule = PairRule::largest_partner);
/// Full Omega=0.
std::vector<RationalSeriesForm> omega_eq_parts(const ElliottTerm& term, ReduceStats* stats = nullptr,
                                               PairRule rule = PairRule::largest_partner);
RationalSeriesForm omega_eq(const ElliottTerm& term, ReduceStats* stats = nullptr,
                            PairRule rule = PairRule::largest_partner);

} // namespace poincare
