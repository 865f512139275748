#pragma once

// Coefficientwise comparison of computed series with the dimension oracles.

#include <cstddef>
#include <string>
#include <vector>

#include "poincare/oracle.hpp"

namespace poincare {

struct OracleReport {
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    /// Description of the first disagreement, empty when there is none.
    std::string first_mismatch;

    bool passed() const { return mismatches == 0; }
};

/// For every listed m compares [z^m t^i] of `series` with dim_covariants for
/// all i of the right parity in [0, sum d_k m_k]; any other term of those
/// z-degrees counts as a mismatch. With cross_check the extraction oracle must
/// agree as well.
OracleReport verify_covariants(const Multidegree& d, const RationalSeriesForm& series,
                               const std::vector<std::vector<int>>& ms, bool cross_check = false);
/// Same for an invariant series: [z^m] against the order-zero dimension.
OracleReport verify_invariants(const Multidegree& d, const RationalSeriesForm& series,
                               const std::vector<std::vector<int>>& ms);

/// All m of length n with sum_k m_k <= order.
std::vector<std::vector<int>> multidegrees_of_total_degree(std::size_t n, int order);

} // namespace poincare
