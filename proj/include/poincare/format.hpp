#pragma once

// Plain-text and LaTeX renderings of rational forms, a parser for the plain
// text, and the structured JSON form.
//
// Text looks like (1 + z1*z2*t)/((1 - z1*t)*(1 - z2^2)^2). Variables are
// z1..zn and t.

#include <cstddef>
#include <string>

#include <json.hpp>

#include "poincare/forms.hpp"

namespace poincare {

std::string render_text(const LaurentPolynomial& p);
std::string render_text(const RationalSeriesForm& r);
std::string render_latex(const LaurentPolynomial& p);
std::string render_latex(const RationalSeriesForm& r);

/// Parses +, -, *, /, ^ (nonnegative integer powers), parentheses, integers
/// and the variables z1..zn, t. Every divisor must be a product of
/// binomials (1 - monomial), each monomial carrying a z variable.
/// Throws std::invalid_argument on malformed input.
RationalSeriesForm parse_form(const std::string& text, std::size_t num_z);

/// {"numerator": [{"coeff", "exponents"}], "denominator": [{"base_exponents", "multiplicity"}]}
/// with exponent vectors z_1..z_n, t. Coefficients outside the 64-bit range
/// are written as decimal strings.
nlohmann::json form_to_json(const RationalSeriesForm& r);
RationalSeriesForm form_from_json(const nlohmann::json& j, std::size_t num_z);

/// form_to_json plus "text" and "latex" renderings.
nlohmann::json result_json(const RationalSeriesForm& r);

} // namespace poincare
