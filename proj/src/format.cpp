#include "poincare/format.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>

namespace poincare {

namespace {

std::string text_monomial(const Monomial& m)
{
    std::string out;
    auto factor = [&](const std::string& name, int e) {
        if (e == 0) {
            return;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += name;
        if (e != 1) {
            out += '^' + std::to_string(e);
        }
    };
    for (std::size_t k = 0; k < m.num_z(); ++k) {
        factor("z" + std::to_string(k + 1), m.z(k));
    }
    factor("t", m.t());
    factor("mu", m.mu());
    return out;
}

std::string latex_monomial(const Monomial& m)
{
    std::string out;
    auto factor = [&](const std::string& name, int e) {
        if (e == 0) {
            return;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += name;
        if (e != 1) {
            out += "^{" + std::to_string(e) + '}';
        }
    };
    for (std::size_t k = 0; k < m.num_z(); ++k) {
        factor("z_{" + std::to_string(k + 1) + '}', m.z(k));
    }
    factor("t", m.t());
    factor("\\mu", m.mu());
    return out;
}

template <typename MonomialText>
std::string render_poly(const LaurentPolynomial& p, MonomialText mono, const char* times)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p) {
        const bool negative = c < 0;
        const Integer a = negative ? Integer(-c) : c;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += a.str();
        } else if (a == 1) {
            out += mono(m);
        } else {
            out += a.str() + times + mono(m);
        }
    }
    return out;
}

// Runs of equal factors in a canonical denominator.
std::vector<std::pair<BinomialFactor, int>> grouped(const Denominator& den)
{
    std::vector<std::pair<BinomialFactor, int>> out;
    for (const auto& f : den) {
        if (!out.empty() && out.back().first == f) {
            ++out.back().second;
        } else {
            out.emplace_back(f, 1);
        }
    }
    return out;
}

std::optional<Integer> parse_integer(const nlohmann::json& j)
{
    if (j.is_number_integer()) {
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos) {
            return std::nullopt;
        }
        return Integer(s);
    }
    return std::nullopt;
}

std::vector<int> exponent_vector(const Monomial& m)
{
    std::vector<int> e = m.z_exponents();
    e.push_back(m.t());
    return e;
}

Monomial monomial_from_json(const nlohmann::json& j, std::size_t num_z)
{
    if (!j.is_array() || j.size() != num_z + 1) {
        throw std::invalid_argument("exponent vector must list z_1..z_n then t");
    }
    std::vector<int> z;
    for (std::size_t k = 0; k < num_z; ++k) {
        if (!j[k].is_number_integer() || j[k].get<int>() < 0) {
            throw std::invalid_argument("z exponents must be nonnegative integers");
        }
        z.push_back(j[k].get<int>());
    }
    if (!j[num_z].is_number_integer()) {
        throw std::invalid_argument("t exponent must be an integer");
    }
    return Monomial(z, j[num_z].get<int>());
}

// Parser value: num / prod(den). When den is empty and num is a product of
// binomials (1 - m), `binomials` lists them so the value may be a divisor.
struct Value {
    LaurentPolynomial num;
    Denominator den;
    std::optional<Denominator> binomials;
};

class Parser {
public:
    Parser(const std::string& text, std::size_t num_z) : text_(text), num_z_(num_z) {}

    RationalSeriesForm run()
    {
        Value v = expression();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected character");
        }
        return {num_z_, std::move(v.num), std::move(v.den)};
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument(what + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value constant(Integer c) const
    {
        return polynomial(LaurentPolynomial::constant(num_z_, std::move(c)));
    }

    Value polynomial(LaurentPolynomial p) const
    {
        Value v{std::move(p), {}, std::nullopt};
        v.binomials = as_binomials(v.num);
        return v;
    }

    std::optional<Denominator> as_binomials(const LaurentPolynomial& p) const
    {
        if (p == LaurentPolynomial::constant(num_z_, 1)) {
            return Denominator{};
        }
        if (p.size() != 2) {
            return std::nullopt;
        }
        const auto& [lo, c_lo] = p.terms()[0];
        const auto& [hi, c_hi] = p.terms()[1];
        if (lo.is_one() && c_lo == 1 && c_hi == -1 && hi.has_z() && hi.mu() == 0) {
            return Denominator{BinomialFactor(hi, 0)};
        }
        return std::nullopt;
    }

    Value add(const Value& a, const Value& b) const
    {
        RationalSeriesForm s = RationalSeriesForm(num_z_, a.num, a.den) + RationalSeriesForm(num_z_, b.num, b.den);
        if (!s.denominator().empty()) {
            return {s.numerator(), s.denominator(), std::nullopt};
        }
        return polynomial(s.numerator());
    }

    Value multiply(const Value& a, const Value& b) const
    {
        Value v{a.num * b.num, a.den, std::nullopt};
        v.den.insert(v.den.end(), b.den.begin(), b.den.end());
        if (a.binomials && b.binomials) {
            v.binomials = *a.binomials;
            v.binomials->insert(v.binomials->end(), b.binomials->begin(), b.binomials->end());
        } else if (v.den.empty()) {
            v.binomials = as_binomials(v.num);
        }
        return v;
    }

    Value divide(const Value& a, const Value& b)
    {
        if (!b.binomials) {
            fail("divisor is not a product of binomials (1 - monomial)");
        }
        Value v{a.num, a.den, std::nullopt};
        v.den.insert(v.den.end(), b.binomials->begin(), b.binomials->end());
        if (v.den.empty()) {
            v.binomials = a.binomials;
        }
        return v;
    }

    Value expression()
    {
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        Value v = term();
        if (negate) {
            v = multiply(constant(-1), v);
        }
        while (true) {
            if (accept('+')) {
                v = add(v, term());
            } else if (accept('-')) {
                v = add(v, multiply(constant(-1), term()));
            } else {
                return v;
            }
        }
    }

    Value term()
    {
        Value v = power();
        while (true) {
            if (accept('*')) {
                v = multiply(v, power());
            } else if (accept('/')) {
                Value d = power();
                v = divide(v, d);
            } else {
                return v;
            }
        }
    }

    Value power()
    {
        Value base = atom();
        if (!accept('^')) {
            return base;
        }
        bool negative = accept('-');
        skip_space();
        std::string digits = read_digits();
        if (digits.empty()) {
            fail("expected an exponent");
        }
        if (digits.size() > 6) {
            fail("exponent too large");
        }
        int k = std::stoi(digits);
        if (negative) {
            if (base.num.size() != 1 || !base.den.empty() || base.num.terms()[0].second != 1 ||
                base.num.terms()[0].first.has_z()) {
                fail("negative powers apply only to powers of t");
            }
            Monomial m = Monomial(num_z_).with_t(-k * base.num.terms()[0].first.t());
            return polynomial(LaurentPolynomial(m));
        }
        Value v = constant(1);
        for (int i = 0; i < k; ++i) {
            v = multiply(v, base);
        }
        return v;
    }

    std::string read_digits()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    Value atom()
    {
        if (accept('(')) {
            Value v = expression();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return v;
        }
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return constant(Integer(read_digits()));
        }
        if (c == 't') {
            ++pos_;
            return polynomial(LaurentPolynomial(Monomial(num_z_).with_t(1)));
        }
        if (c == 'z') {
            ++pos_;
            std::string digits = read_digits();
            if (digits.empty() || digits.size() > 3) {
                fail("expected a variable index after z");
            }
            std::size_t k = std::stoul(digits);
            if (k < 1 || k > num_z_) {
                fail("variable index out of range");
            }
            return polynomial(LaurentPolynomial(Monomial::z_var(num_z_, k - 1)));
        }
        fail("unexpected character");
    }

    const std::string& text_;
    std::size_t num_z_;
    std::size_t pos_ = 0;
};

} // namespace

std::string render_text(const LaurentPolynomial& p)
{
    return render_poly(p, text_monomial, "*");
}

std::string render_latex(const LaurentPolynomial& p)
{
    return render_poly(p, latex_monomial, " ");
}

std::string render_text(const RationalSeriesForm& r)
{
    const std::string num = render_text(r.numerator());
    if (r.denominator().empty()) {
        return num;
    }
    const auto groups = grouped(r.denominator());
    std::string den;
    for (const auto& [f, k] : groups) {
        if (!den.empty()) {
            den += '*';
        }
        den += "(1 - " + text_monomial(f.base) + ')';
        if (k > 1) {
            den += '^' + std::to_string(k);
        }
    }
    const bool bare = r.numerator().size() == 1 && r.numerator().terms()[0].second > 0;
    const bool single = groups.size() == 1 && groups[0].second == 1;
    return (bare ? num : '(' + num + ')') + '/' + (single ? den : '(' + den + ')');
}

std::string render_latex(const RationalSeriesForm& r)
{
    const std::string num = render_latex(r.numerator());
    if (r.denominator().empty()) {
        return num;
    }
    std::string den;
    for (const auto& [f, k] : grouped(r.denominator())) {
        den += "\\left(1 - " + latex_monomial(f.base) + "\\right)";
        if (k > 1) {
            den += "^{" + std::to_string(k) + '}';
        }
    }
    return "\\frac{" + num + "}{" + den + '}';
}

RationalSeriesForm parse_form(const std::string& text, std::size_t num_z)
{
    return Parser(text, num_z).run();
}

nlohmann::json form_to_json(const RationalSeriesForm& r)
{
    nlohmann::json numerator = nlohmann::json::array();
    for (const auto& [m, c] : r.numerator()) {
        nlohmann::json coeff;
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
            coeff = static_cast<std::int64_t>(c);
        } else {
            coeff = c.str();
        }
        numerator.push_back({{"coeff", coeff}, {"exponents", exponent_vector(m)}});
    }
    nlohmann::json denominator = nlohmann::json::array();
    for (const auto& [f, k] : grouped(r.denominator())) {
        denominator.push_back({{"base_exponents", exponent_vector(f.base)}, {"multiplicity", k}});
    }
    return {{"numerator", numerator}, {"denominator", denominator}};
}

RationalSeriesForm form_from_json(const nlohmann::json& j, std::size_t num_z)
{
    if (!j.is_object() || !j.contains("numerator") || !j.contains("denominator") || !j["numerator"].is_array() ||
        !j["denominator"].is_array()) {
        throw std::invalid_argument("form needs numerator and denominator arrays");
    }
    std::vector<LaurentPolynomial::Term> terms;
    for (const auto& t : j["numerator"]) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exponents")) {
            throw std::invalid_argument("numerator entries need coeff and exponents");
        }
        auto c = parse_integer(t["coeff"]);
        if (!c) {
            throw std::invalid_argument("coefficient must be an integer");
        }
        terms.emplace_back(monomial_from_json(t["exponents"], num_z), std::move(*c));
    }
    Denominator den;
    for (const auto& f : j["denominator"]) {
        if (!f.is_object() || !f.contains("base_exponents") || !f.contains("multiplicity") ||
            !f["multiplicity"].is_number_integer() || f["multiplicity"].get<int>() < 1) {
            throw std::invalid_argument("denominator entries need base_exponents and a positive multiplicity");
        }
        const Monomial base = monomial_from_json(f["base_exponents"], num_z);
        for (int k = 0; k < f["multiplicity"].get<int>(); ++k) {
            den.emplace_back(base, 0);
        }
    }
    return {num_z, LaurentPolynomial::from_terms(std::move(terms)), std::move(den)};
}

nlohmann::json result_json(const RationalSeriesForm& r)
{
    nlohmann::json j = form_to_json(r);
    j["text"] = render_text(r);
    j["latex"] = render_latex(r);
    return j;
}

} // namespace poincare
