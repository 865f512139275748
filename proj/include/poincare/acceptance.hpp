#pragma once

// The acceptance suite: printed closed forms, oracle agreement, property
// checks and the performance envelope. Shared by the acceptance test binary
// and the command-line selftest.

#include <functional>
#include <string>
#include <vector>

#include "poincare/verify.hpp"

namespace poincare {

/// A closed form as printed in the literature, transcribed to plain text.
struct PrintedForm {
    std::string label;
    std::vector<int> d;
    bool covariants;
    std::string text;
};

const std::vector<PrintedForm>& printed_forms();
/// The covariant series of d = (2,2) exactly as printed, with (1 - z1) twice.
const PrintedForm& printed_c22();
/// The same with the repeated (1 - z1)(1 - z1) read as (1 - z1^2).
const PrintedForm& symmetrized_c22();

struct Adjudication {
    int weight_bound = 0;
    OracleReport pipeline;
    OracleReport printed;
    OracleReport symmetrized;
};

/// Compares the d = (2,2) pipeline output and both readings of the printed
/// form with the oracle for all m with 2 m_1 + 2 m_2 <= weight_bound.
Adjudication adjudicate_c22(int weight_bound, const PipelineOptions& options = {});

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::vector<std::string> details;
    double seconds = 0;
};

struct AcceptanceOptions {
    /// When positive, caps every series order and weight bound.
    int order_cap = 0;
    PipelineOptions pipeline;
};

/// Runs criteria 1..7 in order; on_result is called as each one finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3  title  (1.2 s)" style line.
std::string summary_line(const CriterionResult& r);

} // namespace poincare
