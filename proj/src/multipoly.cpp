#include "cyq/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "cyq/errors.hpp"

namespace cyq {

namespace {

constexpr std::uint64_t kHighBits = 0x8080808080808080ull;

} // namespace

Monomial Monomial::var(int v, int e)
{
    if (v < 0 || v >= kNumVars || e < 0 || e > 127)
        throw std::out_of_range("Monomial::var");
    return Monomial(static_cast<std::uint64_t>(e) << shift(v));
}

Monomial Monomial::from_exponents(std::span<const int> exps)
{
    if (exps.size() > kNumVars)
        throw std::out_of_range("Monomial: too many variables");
    Monomial m;
    for (std::size_t v = 0; v < exps.size(); ++v)
        m = m * var(static_cast<int>(v), exps[v]);
    return m;
}

int Monomial::total_degree() const
{
    int d = 0;
    for (int v = 0; v < kNumVars; ++v)
        d += exponent(v);
    return d;
}

Monomial operator*(Monomial a, Monomial b)
{
    // exponents stay below 128, so byte-wise addition cannot carry
    if ((a.bits_ | b.bits_) & kHighBits)
        throw std::overflow_error("Monomial: exponent exceeds 127");
    Monomial r(a.bits_ + b.bits_);
    if (r.bits_ & kHighBits)
        throw std::overflow_error("Monomial: exponent exceeds 127");
    return r;
}

std::optional<Monomial> divide(Monomial a, Monomial b)
{
    for (int v = 0; v < kNumVars; ++v)
        if (a.exponent(v) < b.exponent(v))
            return std::nullopt;
    return Monomial(a.bits_ - b.bits_);
}

Monomial min_exponents(Monomial a, Monomial b)
{
    Monomial r;
    for (int v = 0; v < kNumVars; ++v)
        r = r * Monomial::var(v, std::min(a.exponent(v), b.exponent(v)));
    return r;
}

MultiPoly::MultiPoly(const Rational &c)
{
    if (!c.is_zero())
        terms_.emplace_back(Monomial(), c);
}

MultiPoly MultiPoly::var(int v)
{
    return MultiPoly({{Monomial::var(v), Rational(1)}});
}

MultiPoly MultiPoly::monomial(const Rational &c, Monomial m)
{
    if (c.is_zero())
        return {};
    return MultiPoly({{m, c}});
}

MultiPoly MultiPoly::from_unsorted(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.first > b.first; });
    std::vector<Term> out;
    for (auto &t : terms) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (out.back().second.is_zero())
            out.pop_back();
    }
    return MultiPoly(std::move(out));
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial());
}

Rational MultiPoly::constant_term() const
{
    if (!terms_.empty() && terms_.back().first == Monomial())
        return terms_.back().second;
    return Rational(0);
}

int MultiPoly::degree(int v) const
{
    int d = is_zero() ? -1 : 0;
    for (const auto &[m, c] : terms_)
        d = std::max(d, m.exponent(v));
    return d;
}

int MultiPoly::total_degree() const
{
    int d = is_zero() ? -1 : 0;
    for (const auto &[m, c] : terms_)
        d = std::max(d, m.total_degree());
    return d;
}

std::vector<int> MultiPoly::variables() const
{
    std::vector<int> out;
    for (int v = 0; v < kNumVars; ++v)
        if (degree(v) > 0)
            out.push_back(v);
    return out;
}

namespace {

std::vector<MultiPoly::Term> merge(const std::vector<MultiPoly::Term> &a, const std::vector<MultiPoly::Term> &b,
                                   bool subtract)
{
    std::vector<MultiPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first > a[i].first) {
            out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
            ++j;
        } else {
            Rational c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
            if (!c.is_zero())
                out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

MultiPoly &MultiPoly::operator+=(const MultiPoly &o)
{
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o)
{
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

MultiPoly &MultiPoly::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_)
        t.second *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const MultiPoly &single = a.terms_.size() == 1 ? a : b;
        const MultiPoly &other = a.terms_.size() == 1 ? b : a;
        const auto &[m, c] = single.terms_[0];
        std::vector<MultiPoly::Term> out;
        out.reserve(other.terms_.size());
        for (const auto &[mo, co] : other.terms_)
            out.emplace_back(m * mo, c * co);
        return MultiPoly(std::move(out)); // multiplying by a monomial keeps the order
    }
    std::unordered_map<std::uint64_t, mpq_class> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &[ma, ca] : a.terms_)
        for (const auto &[mb, cb] : b.terms_)
            acc[(ma * mb).bits()] += ca.value() * cb.value();
    std::vector<MultiPoly::Term> out;
    out.reserve(acc.size());
    for (auto &[bits, c] : acc) {
        if (sgn(c) == 0)
            continue;
        out.emplace_back(Monomial::from_bits(bits), Rational(mpq_class(c)));
    }
    std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.first > y.first; });
    return MultiPoly(std::move(out));
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto &t : r.terms_)
        t.second = -t.second;
    return r;
}

MultiPoly MultiPoly::pow(int e) const
{
    if (e < 0)
        throw std::domain_error("MultiPoly::pow: negative exponent");
    MultiPoly result(1), base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::derivative(int v) const
{
    std::vector<Term> out;
    Monomial dv = Monomial::var(v);
    for (const auto &[m, c] : terms_) {
        int e = m.exponent(v);
        if (e == 0)
            continue;
        out.emplace_back(*divide(m, dv), c * Rational(e));
    }
    return from_unsorted(std::move(out));
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const
{
    Rational r(0);
    for (const auto &[m, c] : terms_) {
        Rational t = c;
        for (int v = 0; v < kNumVars; ++v) {
            int e = m.exponent(v);
            if (e == 0)
                continue;
            if (static_cast<std::size_t>(v) >= point.size())
                throw std::out_of_range("MultiPoly::evaluate: no value for " + var_name(v));
            t *= point[static_cast<std::size_t>(v)].pow(e);
        }
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::substitute(int v, const Rational &value) const
{
    std::vector<Term> out;
    for (const auto &[m, c] : terms_) {
        int e = m.exponent(v);
        Monomial rest = e ? *divide(m, Monomial::var(v, e)) : m;
        Rational coef = e ? c * value.pow(e) : c;
        if (!coef.is_zero())
            out.emplace_back(rest, std::move(coef));
    }
    return from_unsorted(std::move(out));
}

MultiPoly MultiPoly::substitute(const std::array<std::optional<MultiPoly>, kNumVars> &values) const
{
    MultiPoly result;
    for (const auto &[m, c] : terms_) {
        MultiPoly t(c);
        Monomial kept;
        for (int v = 0; v < kNumVars; ++v) {
            int e = m.exponent(v);
            if (e == 0)
                continue;
            if (values[static_cast<std::size_t>(v)])
                t = t * values[static_cast<std::size_t>(v)]->pow(e);
            else
                kept = kept * Monomial::var(v, e);
        }
        result += t * MultiPoly::monomial(1, kept);
    }
    return result;
}

MultiPoly MultiPoly::scale_by_weights(std::span<const int> weights, int aux) const
{
    std::vector<Term> out;
    for (const auto &[m, c] : terms_) {
        int w = 0;
        for (std::size_t v = 0; v < weights.size(); ++v)
            w += weights[v] * m.exponent(static_cast<int>(v));
        out.emplace_back(m * Monomial::var(aux, w), c);
    }
    return from_unsorted(std::move(out));
}

std::optional<int> MultiPoly::weighted_degree(std::span<const int> weights) const
{
    std::optional<int> deg;
    for (const auto &[m, c] : terms_) {
        int w = 0;
        for (int v = 0; v < kNumVars; ++v) {
            int e = m.exponent(v);
            if (e == 0)
                continue;
            if (static_cast<std::size_t>(v) >= weights.size())
                return std::nullopt;
            w += weights[static_cast<std::size_t>(v)] * e;
        }
        if (deg && *deg != w)
            return std::nullopt;
        deg = w;
    }
    return deg;
}

Monomial MultiPoly::monomial_content() const
{
    if (terms_.empty())
        return Monomial();
    Monomial g = terms_[0].first;
    for (const auto &[m, c] : terms_)
        g = min_exponents(g, m);
    return g;
}

MultiPoly MultiPoly::divide_monomial(Monomial d) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &[m, c] : terms_) {
        auto q = divide(m, d);
        if (!q)
            throw std::domain_error("MultiPoly::divide_monomial: not divisible");
        out.emplace_back(*q, c);
    }
    return MultiPoly(std::move(out));
}

std::string var_name(int v)
{
    return v == kAuxVar ? std::string("s") : "t" + std::to_string(v);
}

std::string MultiPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        bool neg = c.sign() < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        Rational a = c.abs();
        bool unit_monomial = m == Monomial();
        if (!a.is_one() || unit_monomial)
            os << a << (unit_monomial ? "" : "*");
        bool first_var = true;
        for (int v = 0; v < kNumVars; ++v) {
            int e = m.exponent(v);
            if (e == 0)
                continue;
            if (!first_var)
                os << "*";
            first_var = false;
            os << var_name(v);
            if (e > 1)
                os << "^" << e;
        }
    }
    return os.str();
}

std::optional<MultiPoly> divide_exact(const MultiPoly &a, const MultiPoly &b)
{
    if (b.is_zero())
        throw DivisionByZeroPolynomial("divide_exact");
    if (a.is_zero())
        return MultiPoly();
    const auto &[lm, lc] = b.leading();
    Rational lc_inv = lc.inverse();
    MultiPoly r = a;
    std::vector<MultiPoly::Term> q;
    while (!r.is_zero()) {
        const auto &[rm, rc] = r.leading();
        auto m = divide(rm, lm);
        if (!m)
            return std::nullopt;
        Rational c = rc * lc_inv;
        q.emplace_back(*m, c);
        r -= MultiPoly::monomial(c, *m) * b;
    }
    return MultiPoly(std::move(q)); // quotient terms arrive in decreasing order
}

} // namespace cyq
