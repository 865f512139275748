#pragma once

// Poincare series of joint covariants and joint invariants of binary forms.

#include <cstddef>
#include <string>
#include <vector>

#include "poincare/elliott.hpp"

namespace poincare {

/// Degrees (d_1, ..., d_n) of the binary forms, each >= 1.
class Multidegree {
public:
    explicit Multidegree(std::vector<int> degrees);

    std::size_t size() const { return degrees_.size(); }
    int operator[](std::size_t k) const { return degrees_[k]; }
    const std::vector<int>& degrees() const { return degrees_; }
    int total() const;
    std::string to_string() const;

    friend bool operator==(const Multidegree&, const Multidegree&) = default;

private:
    std::vector<int> degrees_;
};

/// 1 / prod_{k,j} (1 - z_k t^(d_k - 2j)).
ElliottTerm build_f(const Multidegree& d);

/// (1 - mu^-2) / prod_{k,j} (1 - z_k mu^(d_k - 2j)).
/// With include_order_factor = false the numerator is 1.
ElliottTerm build_covariant_operand(const Multidegree& d, bool include_order_factor = true);

/// Multiplies every mu^a by t^a, so that Omega>=0 (which sets mu = 1) keeps
/// the kept mu-exponent as the t-exponent.
ElliottTerm attach_order_variable(const ElliottTerm& term);

struct PipelineOptions {
    /// Include the (1 - mu^-2) numerator. Disabling it reproduces the
    /// operand without the order correction, which is wrong already for d = (1).
    bool include_order_factor = true;
    PairRule rule = PairRule::largest_partner;
};

RationalSeriesForm poincare_covariants(const Multidegree& d, const PipelineOptions& options = {});
RationalSeriesForm poincare_invariants(const Multidegree& d, const PipelineOptions& options = {});

} // namespace poincare
