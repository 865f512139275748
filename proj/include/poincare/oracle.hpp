#pragma once

// Brute-force dimension counts, independent of the Omega pipeline.
//
// omega_count(d, m, i) counts tuples alpha^(k) = (alpha_0, ..., alpha_{d_k})
// of nonnegative integers with sum_j alpha_j^(k) = m_k for every k and total
// weight sum_k sum_j (d_k - 2j) alpha_j^(k) = i. The covariant dimension of
// multidegree m and order i is omega(i) - omega(i + 2).

#include <vector>

#include "poincare/engine.hpp"

namespace poincare {

struct DimensionQuery {
    Multidegree d;
    std::vector<int> m;
    int i = 0;

    DimensionQuery(Multidegree d_, std::vector<int> m_, int i_);
    /// sum_k d_k m_k, the largest reachable weight.
    int weight_bound() const;
};

Integer omega_count(const DimensionQuery& q);
/// omega(i) - omega(i + 2); requires i >= 0.
Integer dim_covariants(const DimensionQuery& q);
/// [z^m t^(sum d_k m_k - i)] (1 - t^2) f_d(z_1 t^d_1, ..., z_n t^d_n, t); requires i >= 0.
Integer dim_via_extraction(const DimensionQuery& q);
/// sum_i omega(i) == prod_k C(m_k + d_k, d_k).
bool total_dimension_check(const Multidegree& d, const std::vector<int>& m);

/// All m with sum_k d_k m_k <= bound.
std::vector<std::vector<int>> multidegrees_up_to(const Multidegree& d, int bound);

} // namespace poincare
