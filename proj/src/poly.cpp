#include "poincare/poly.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace poincare {

namespace {

void check_compatible(const Monomial& a, const Monomial& b)
{
    if (a.num_z() != b.num_z()) {
        throw std::invalid_argument("monomials over different numbers of z variables");
    }
}

// Sorts and merges equal monomials, dropping zero coefficients.
std::vector<LaurentPolynomial::Term> canonicalize(std::vector<LaurentPolynomial::Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<LaurentPolynomial::Term> out;
    out.reserve(terms.size());
    for (auto& term : terms) {
        if (!out.empty() && out.back().first == term.first) {
            out.back().second += term.second;
        } else {
            if (!out.empty() && out.back().second == 0) {
                out.pop_back();
            }
            out.push_back(std::move(term));
        }
    }
    if (!out.empty() && out.back().second == 0) {
        out.pop_back();
    }
    return out;
}

} // namespace

std::int16_t Monomial::narrow(long v)
{
    if (v < std::numeric_limits<std::int16_t>::min() || v > std::numeric_limits<std::int16_t>::max()) {
        throw std::overflow_error("monomial exponent out of range");
    }
    return static_cast<std::int16_t>(v);
}

Monomial::Monomial(std::size_t num_z) : num_z_(static_cast<std::uint8_t>(num_z))
{
    if (num_z > max_z) {
        throw std::invalid_argument("too many z variables");
    }
}

Monomial::Monomial(std::initializer_list<int> z, int t, int mu)
    : Monomial(std::vector<int>(z), t, mu)
{
}

Monomial::Monomial(const std::vector<int>& z, int t, int mu) : Monomial(z.size())
{
    long degree = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (z[k] < 0) {
            throw std::invalid_argument("negative z exponent");
        }
        lanes_[k] = narrow(z[k]);
        degree += z[k];
    }
    lanes_[num_z_] = narrow(t);
    lanes_[num_z_ + 1] = narrow(mu);
    degree_ = narrow(degree);
}

Monomial Monomial::z_var(std::size_t num_z, std::size_t k, int power)
{
    if (k >= num_z || power < 0) {
        throw std::invalid_argument("z variable index out of range");
    }
    Monomial m(num_z);
    m.lanes_[k] = narrow(power);
    m.degree_ = m.lanes_[k];
    return m;
}

bool Monomial::is_one() const
{
    return std::all_of(lanes_.begin(), lanes_.end(), [](int e) { return e == 0; });
}

Monomial Monomial::with_t(int t) const
{
    Monomial m = *this;
    m.lanes_[num_z_] = narrow(t);
    return m;
}

Monomial Monomial::with_mu(int mu) const
{
    Monomial m = *this;
    m.lanes_[num_z_ + 1] = narrow(mu);
    return m;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    check_compatible(*this, other);
    Monomial m = *this;
    for (std::size_t i = 0; i < lanes_.size(); ++i) {
        m.lanes_[i] = narrow(static_cast<long>(m.lanes_[i]) + other.lanes_[i]);
    }
    m.degree_ = narrow(static_cast<long>(degree_) + other.degree_);
    return m;
}

Monomial Monomial::pow(int k) const
{
    if (k < 0) {
        throw std::invalid_argument("negative monomial power");
    }
    Monomial m = *this;
    for (auto& e : m.lanes_) {
        e = narrow(static_cast<long>(e) * k);
    }
    m.degree_ = narrow(static_cast<long>(degree_) * k);
    return m;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const
{
    check_compatible(*this, other);
    Monomial m = *this;
    for (std::size_t i = 0; i < lanes_.size(); ++i) {
        m.lanes_[i] = static_cast<std::int16_t>(m.lanes_[i] - other.lanes_[i]);
        if (i < num_z_ && m.lanes_[i] < 0) {
            return std::nullopt;
        }
    }
    m.degree_ = static_cast<std::int16_t>(degree_ - other.degree_);
    return m;
}

std::size_t Monomial::hash() const
{
    std::uint64_t words[4];
    std::memcpy(words, lanes_.data(), sizeof(words));
    std::uint64_t h = num_z_;
    for (auto w : words) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
}

LaurentPolynomial::LaurentPolynomial(const Monomial& m, Integer c)
{
    if (c != 0) {
        terms_.emplace_back(m, std::move(c));
    }
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t num_z, Integer c)
{
    return LaurentPolynomial(Monomial(num_z), std::move(c));
}

LaurentPolynomial LaurentPolynomial::from_terms(std::vector<Term> terms)
{
    LaurentPolynomial p;
    p.terms_ = canonicalize(std::move(terms));
    return p;
}

Integer LaurentPolynomial::coefficient(const Monomial& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& term, const Monomial& key) { return term.first < key; });
    if (it != terms_.end() && it->first == m) {
        return it->second;
    }
    return 0;
}

int LaurentPolynomial::max_z_degree() const
{
    // Terms are graded by z-degree first.
    return terms_.empty() ? 0 : terms_.back().first.z_degree();
}

int LaurentPolynomial::min_mu() const
{
    int lo = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        lo = first ? m.mu() : std::min(lo, m.mu());
        first = false;
    }
    return lo;
}

int LaurentPolynomial::max_mu() const
{
    int hi = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        hi = first ? m.mu() : std::max(hi, m.mu());
        first = false;
    }
    return hi;
}

LaurentPolynomial LaurentPolynomial::operator-() const
{
    LaurentPolynomial out = *this;
    for (auto& term : out.terms_) {
        term.second = -term.second;
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& other) const
{
    LaurentPolynomial out;
    out.terms_.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.terms_.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            out.terms_.push_back(*b++);
        } else {
            Integer c = a->second + b->second;
            if (c != 0) {
                out.terms_.emplace_back(a->first, std::move(c));
            }
            ++a;
            ++b;
        }
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& other) const
{
    return *this + (-other);
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& other) const
{
    if (terms_.empty() || other.terms_.empty()) {
        return {};
    }
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    acc.reserve(terms_.size() * other.terms_.size());
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            acc[ma * mb] += ca * cb;
        }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (c != 0) {
            terms.emplace_back(m, std::move(c));
        }
    }
    return from_terms(std::move(terms));
}

LaurentPolynomial LaurentPolynomial::operator*(const Monomial& m) const
{
    LaurentPolynomial out;
    out.terms_.reserve(terms_.size());
    for (const auto& [mt, c] : terms_) {
        out.terms_.emplace_back(mt * m, c);
    }
    // A uniform exponent shift preserves the graded lex order.
    return out;
}

LaurentPolynomial LaurentPolynomial::filter(const std::function<bool(const Monomial&)>& keep) const
{
    LaurentPolynomial out;
    for (const auto& term : terms_) {
        if (keep(term.first)) {
            out.terms_.push_back(term);
        }
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::map_monomials(const std::function<Monomial(const Monomial&)>& f) const
{
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        terms.emplace_back(f(m), c);
    }
    return from_terms(std::move(terms));
}

LaurentPolynomial LaurentPolynomial::mul_truncated(const LaurentPolynomial& other, int order) const
{
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    for (const auto& [ma, ca] : terms_) {
        const int da = ma.z_degree();
        if (da > order) {
            break;
        }
        for (const auto& [mb, cb] : other.terms_) {
            if (da + mb.z_degree() > order) {
                break;
            }
            acc[ma * mb] += ca * cb;
        }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (c != 0) {
            terms.emplace_back(m, std::move(c));
        }
    }
    return from_terms(std::move(terms));
}

bool LaurentPolynomial::chain_classes_balance(const Monomial& m) const
{
    // w = (m.m) r - (r.m) m is orthogonal to m for a fixed generic r, so w.e
    // is constant along every chain e + k m.
    static constexpr std::array<std::int64_t, Monomial::max_z + 2> r = {
        982451, 611953, 746773, 319993, 868771, 524287, 700001, 433781,
        915611, 257687, 804157, 366547, 651023, 199999, 557093, 891719};
    const auto& ml = m.lanes();
    std::int64_t mm = 0;
    std::int64_t rm = 0;
    for (std::size_t i = 0; i < ml.size(); ++i) {
        mm += std::int64_t{ml[i]} * ml[i];
        rm += r[i] * ml[i];
    }
    std::array<std::int64_t, Monomial::max_z + 2> w{};
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = mm * r[i] - rm * ml[i];
    }
    // Every class sum C_s vanishes only if sum_s C_s h(s) does, for a
    // pseudo-random h modulo a Mersenne prime.
    constexpr std::uint64_t prime = (std::uint64_t{1} << 61) - 1;
    auto mulmod = [](std::uint64_t x, std::uint64_t y) {
        unsigned __int128 p = static_cast<unsigned __int128>(x) * y;
        std::uint64_t lo = static_cast<std::uint64_t>(p & prime);
        std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
        std::uint64_t r = lo + hi;
        return r >= prime ? r - prime : r;
    };
    std::uint64_t acc = 0;
    for (const auto& [e, c] : terms_) {
        const auto& el = e.lanes();
        std::int64_t s = 0;
        for (std::size_t k = 0; k < el.size(); ++k) {
            s += w[k] * el[k];
        }
        std::uint64_t h = static_cast<std::uint64_t>(s) + 0x9e3779b97f4a7c15ULL;
        h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
        h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
        h = (h ^ (h >> 31)) % prime;
        Integer reduced = c % prime;
        if (reduced < 0) {
            reduced += prime;
        }
        acc += mulmod(h, static_cast<std::uint64_t>(reduced));
        if (acc >= prime) {
            acc -= prime;
        }
    }
    return acc == 0;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_by_binomial(const Monomial& m) const
{
    if (m.is_one()) {
        return std::nullopt;
    }
    if (!m.has_z()) {
        throw std::invalid_argument("binomial divisor must involve a z variable");
    }
    if (terms_.empty()) {
        return LaurentPolynomial();
    }
    // Cheap necessary conditions first: the leading term is -m * lead(q), and
    // every chain has zero coefficient sum.
    if (!terms_.back().first.divide(m)) {
        return std::nullopt;
    }
    if (!chain_classes_balance(m)) {
        return std::nullopt;
    }
    // p = (1 - m) q gives q_{e - m} = q_e - p_e. Walk each chain e, e - m, ...
    // downward from its top term (where q = 0); q must vanish where the chain
    // leaves the nonnegative z range.
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    index.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        index.emplace(terms_[i].first, i);
    }
    std::vector<Integer> carry(terms_.size());
    std::vector<Term> quotient;
    for (std::size_t i = terms_.size(); i-- > 0;) {
        Integer q = carry[i] - terms_[i].second;
        Monomial e = terms_[i].first;
        while (q != 0) {
            auto next = e.divide(m);
            if (!next) {
                return std::nullopt;
            }
            e = *next;
            if (auto it = index.find(e); it != index.end()) {
                carry[it->second] = q;
                break;
            }
            quotient.emplace_back(e, q);
        }
    }
    // carry[i] is the quotient coefficient at the i-th term's own monomial.
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (carry[i] != 0) {
            quotient.emplace_back(terms_[i].first, std::move(carry[i]));
        }
    }
    return from_terms(std::move(quotient));
}

LaurentPolynomial poly_add(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    return a + b;
}

LaurentPolynomial poly_mul(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    return a * b;
}

Integer coefficient_of(const LaurentPolynomial& p, const Monomial& m)
{
    return p.coefficient(m);
}

} // namespace poincare
