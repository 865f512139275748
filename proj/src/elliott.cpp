#include "poincare/elliott.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace poincare {

namespace {

struct WeightedBase {
    Monomial base;
    int weight; // > 0
};

// Sum over n >= 0 with sum weight_i n_i == target (or <= target) of
// prod base_i^n_i.
void collect_compositions(const std::vector<WeightedBase>& parts, std::size_t idx, int remaining, bool exact,
                          const Monomial& current, std::vector<LaurentPolynomial::Term>& out)
{
    if (idx == parts.size()) {
        if (!exact || remaining == 0) {
            out.emplace_back(current, 1);
        }
        return;
    }
    Monomial m = current;
    for (int used = 0; used <= remaining; used += parts[idx].weight) {
        collect_compositions(parts, idx + 1, remaining - used, exact, m, out);
        m = m * parts[idx].base;
    }
}

LaurentPolynomial compositions(const std::vector<WeightedBase>& parts, int target, bool exact, std::size_t num_z)
{
    if (target < 0) {
        return {};
    }
    std::vector<LaurentPolynomial::Term> out;
    collect_compositions(parts, 0, target, exact, Monomial(num_z), out);
    return LaurentPolynomial::from_terms(std::move(out));
}

struct Split {
    Denominator zero;
    std::vector<WeightedBase> positive;
    std::vector<WeightedBase> negative;
};

Split split(const Denominator& den)
{
    Split s;
    for (const auto& f : den) {
        if (f.mu_exp == 0) {
            s.zero.push_back(f);
        } else if (f.mu_exp > 0) {
            s.positive.push_back({f.base, f.mu_exp});
        } else {
            s.negative.push_back({f.base, -f.mu_exp});
        }
    }
    return s;
}

Denominator at_mu_one(const Denominator& den)
{
    Denominator out;
    out.reserve(den.size());
    for (const auto& f : den) {
        out.emplace_back(f.base, 0);
    }
    return out;
}

// Numerator terms grouped by mu exponent, with mu removed.
std::map<int, LaurentPolynomial> by_mu(const LaurentPolynomial& p)
{
    std::map<int, std::vector<LaurentPolynomial::Term>> groups;
    for (const auto& [m, c] : p) {
        groups[m.mu()].emplace_back(m.without_mu(), c);
    }
    std::map<int, LaurentPolynomial> out;
    for (auto& [e, terms] : groups) {
        out.emplace(e, LaurentPolynomial::from_terms(std::move(terms)));
    }
    return out;
}

int measure_count(const Denominator& den)
{
    return static_cast<int>(std::count_if(den.begin(), den.end(), [](const auto& f) { return f.mu_exp != 0; }));
}

int measure_weight(const Denominator& den)
{
    int w = 0;
    for (const auto& f : den) {
        w += std::abs(f.mu_exp);
    }
    return w;
}

std::pair<BinomialFactor, BinomialFactor> choose_pair(const Denominator& den, PairRule rule)
{
    // den is sorted by base, so strict comparisons keep the smallest base on ties.
    const BinomialFactor* anchor = nullptr;
    for (const auto& f : den) {
        if (f.mu_exp != 0 && (anchor == nullptr || std::abs(f.mu_exp) > std::abs(anchor->mu_exp) ||
                              (std::abs(f.mu_exp) == std::abs(anchor->mu_exp) && f.mu_exp > anchor->mu_exp))) {
            anchor = &f;
        }
    }
    const BinomialFactor* partner = nullptr;
    for (const auto& f : den) {
        if ((f.mu_exp > 0) == (anchor->mu_exp > 0) || f.mu_exp == 0) {
            continue;
        }
        if (partner == nullptr) {
            partner = &f;
        } else if (rule == PairRule::largest_partner ? std::abs(f.mu_exp) > std::abs(partner->mu_exp)
                                                     : std::abs(f.mu_exp) < std::abs(partner->mu_exp)) {
            partner = &f;
        }
    }
    if (anchor->mu_exp > 0) {
        return {*anchor, *partner};
    }
    return {*partner, *anchor};
}

} // namespace

std::array<ElliottTerm, 3> elliott_step(const ElliottTerm& term, const BinomialFactor& pos, const BinomialFactor& neg)
{
    if (pos.mu_exp <= 0 || neg.mu_exp >= 0) {
        throw std::invalid_argument("elliott_step needs a positive and a negative mu exponent");
    }
    const auto& den = term.denominator();
    auto pos_it = std::find(den.begin(), den.end(), pos);
    auto neg_it = std::find(den.begin(), den.end(), neg);
    if (pos_it == den.end() || neg_it == den.end()) {
        throw std::invalid_argument("elliott_step factor not present in the denominator");
    }
    const BinomialFactor merged(pos.base * neg.base, pos.mu_exp + neg.mu_exp);

    Denominator rest;
    rest.reserve(den.size());
    for (auto it = den.begin(); it != den.end(); ++it) {
        if (it != pos_it && it != neg_it) {
            rest.push_back(*it);
        }
    }
    Denominator keep_pos = rest;
    keep_pos.push_back(merged);
    keep_pos.push_back(pos);
    Denominator keep_neg = rest;
    keep_neg.push_back(merged);
    keep_neg.push_back(neg);
    Denominator keep_none = std::move(rest);
    keep_none.push_back(merged);

    const auto n = term.num_z();
    return {ElliottTerm(n, term.numerator(), std::move(keep_pos)),
            ElliottTerm(n, term.numerator(), std::move(keep_neg)),
            ElliottTerm(n, -term.numerator(), std::move(keep_none))};
}

std::vector<ElliottTerm> elliott_reduce(const std::vector<ElliottTerm>& terms, ReduceStats* stats, PairRule rule)
{
    if (terms.empty()) {
        return {};
    }
    const auto n = terms.front().num_z();
    // Larger denominators first: most terms sharing a denominator are then
    // merged before that denominator is split.
    using Key = std::tuple<int, int, Denominator>;
    std::map<Key, LaurentPolynomial> pending;
    std::map<Denominator, LaurentPolynomial> done;
    ReduceStats local;

    auto push = [&](const ElliottTerm& t) {
        if (t.numerator().is_zero()) {
            return;
        }
        if (!t.mixed()) {
            auto [it, inserted] = done.try_emplace(t.denominator(), t.numerator());
            if (!inserted) {
                it->second += t.numerator();
                ++local.merges;
            }
            return;
        }
        Key key{-measure_count(t.denominator()), -measure_weight(t.denominator()), t.denominator()};
        auto [it, inserted] = pending.try_emplace(std::move(key), t.numerator());
        if (!inserted) {
            it->second += t.numerator();
            ++local.merges;
        }
    };

    for (const auto& t : terms) {
        push(t);
    }
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        if (node.mapped().is_zero()) {
            continue;
        }
        ElliottTerm t(n, std::move(node.mapped()), std::get<2>(node.key()));
        auto [pos, neg] = choose_pair(t.denominator(), rule);
        for (const auto& child : elliott_step(t, pos, neg)) {
            push(child);
        }
        ++local.steps;
    }

    std::vector<ElliottTerm> out;
    out.reserve(done.size());
    for (auto& [den, num] : done) {
        if (!num.is_zero()) {
            out.emplace_back(n, std::move(num), den);
        }
    }
    if (stats != nullptr) {
        *stats = local;
    }
    return out;
}

std::vector<ElliottTerm> elliott_reduce(const ElliottTerm& term, ReduceStats* stats, PairRule rule)
{
    return elliott_reduce(std::vector<ElliottTerm>{term}, stats, rule);
}

RationalSeriesForm mu_series_coefficient(const Denominator& den, int k, std::size_t num_z)
{
    Split s = split(den);
    if (!s.negative.empty()) {
        throw std::invalid_argument("mu_series_coefficient needs nonnegative mu exponents");
    }
    return {num_z, compositions(s.positive, k, true, num_z), s.zero};
}

RationalSeriesForm positive_part(const ElliottTerm& term)
{
    if (term.has_negative()) {
        throw std::invalid_argument("positive_part needs nonnegative mu exponents");
    }
    const auto n = term.num_z();
    Split s = split(term.denominator());
    Denominator positive_den;
    for (const auto& f : term.denominator()) {
        if (f.mu_exp > 0) {
            positive_den.emplace_back(f.base, 0);
        }
    }
    const LaurentPolynomial positive_product = product(positive_den, n);

    // For mu^-s against F(mu) = prod (1 - B mu^a)^-1 the kept part is
    // F(1) - sum_{k<s} [mu^k]F, i.e. (1 - Dpos(1) * sum_{k<s} P_k) / D(1).
    LaurentPolynomial numerator;
    for (auto& [e, part] : by_mu(term.numerator())) {
        if (e >= 0) {
            numerator += part;
        } else {
            LaurentPolynomial head = compositions(s.positive, -e - 1, false, n);
            numerator += part * (LaurentPolynomial::constant(n, 1) - positive_product * head);
        }
    }
    return {n, std::move(numerator), at_mu_one(term.denominator())};
}

RationalSeriesForm negative_side_part(const ElliottTerm& term)
{
    if (term.has_positive()) {
        throw std::invalid_argument("negative_side_part needs nonpositive mu exponents");
    }
    const auto n = term.num_z();
    Split s = split(term.denominator());
    LaurentPolynomial numerator;
    for (auto& [e, part] : by_mu(term.numerator())) {
        if (e >= 0) {
            numerator += part * compositions(s.negative, e, false, n);
        }
    }
    return {n, std::move(numerator), s.zero};
}

RationalSeriesForm mu_zero_part(const ElliottTerm& term)
{
    if (term.mixed()) {
        throw std::invalid_argument("mu_zero_part needs a one-sided denominator");
    }
    const auto n = term.num_z();
    Split s = split(term.denominator());
    const bool positive_side = !term.has_negative();
    LaurentPolynomial numerator;
    for (auto& [e, part] : by_mu(term.numerator())) {
        // mu^e * mu^(a k) hits mu^0 when a k = -e.
        const int target = positive_side ? -e : e;
        const auto& parts = positive_side ? s.positive : s.negative;
        numerator += part * compositions(parts, target, true, n);
    }
    return {n, std::move(numerator), s.zero};
}

std::vector<RationalSeriesForm> omega_geq_parts(const ElliottTerm& term, ReduceStats* stats, PairRule rule)
{
    std::vector<RationalSeriesForm> parts;
    for (const auto& t : elliott_reduce(term, stats, rule)) {
        parts.push_back(t.has_negative() ? negative_side_part(t) : positive_part(t));
    }
    return parts;
}

RationalSeriesForm omega_geq(const ElliottTerm& term, ReduceStats* stats, PairRule rule)
{
    return sum(omega_geq_parts(term, stats, rule), term.num_z());
}

std::vector<RationalSeriesForm> omega_eq_parts(const ElliottTerm& term, ReduceStats* stats, PairRule rule)
{
    std::vector<RationalSeriesForm> parts;
    for (const auto& t : elliott_reduce(term, stats, rule)) {
        parts.push_back(mu_zero_part(t));
    }
    return parts;
}

RationalSeriesForm omega_eq(const ElliottTerm& term, ReduceStats* stats, PairRule rule)
{
    return sum(omega_eq_parts(term, stats, rule), term.num_z());
}

} // namespace poincare
