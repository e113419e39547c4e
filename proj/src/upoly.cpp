#include "cyq/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyq {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

void UPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Rational UPoly::operator()(const Rational &x) const
{
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + *it;
    return r;
}

UPoly UPoly::derivative() const
{
    std::vector<Rational> d;
    for (int i = 1; i <= degree(); ++i)
        d.push_back(c_[static_cast<std::size_t>(i)] * Rational(i));
    return UPoly(std::move(d));
}

int UPoly::x_valuation() const
{
    for (int i = 0; i <= degree(); ++i)
        if (!c_[static_cast<std::size_t>(i)].is_zero())
            return i;
    return -1;
}

UPoly &UPoly::operator+=(const UPoly &o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly &UPoly::operator-=(const UPoly &o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly &a, const UPoly &b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
}

UPoly UPoly::operator-() const
{
    UPoly r = *this;
    for (auto &c : r.c_)
        c = -c;
    return r;
}

UPoly UPoly::scale_variable(const Rational &s) const
{
    UPoly r = *this;
    Rational p(1);
    for (auto &c : r.c_) {
        c *= p;
        p *= s;
    }
    r.trim();
    return r;
}

std::string UPoly::str(const std::string &var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational &c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c << ")";
        if (i > 0)
            os << "*" << var << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly &a, const UPoly &b)
{
    if (b.is_zero())
        throw std::domain_error("UPoly: division by zero polynomial");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0)
        return {UPoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(dq) + 1);
    Rational lc_inv = b.leading().inverse();
    for (int k = dq; k >= 0; --k) {
        Rational f = r[static_cast<std::size_t>(k + db)] * lc_inv;
        q[static_cast<std::size_t>(k)] = f;
        if (f.is_zero())
            continue;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(k + j)] -= f * b.coeff(j);
    }
    r.resize(static_cast<std::size_t>(db));
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly &a, const UPoly &b)
{
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero())
        return x;
    Rational lc_inv = x.leading().inverse();
    std::vector<Rational> c = x.coeffs();
    for (auto &v : c)
        v *= lc_inv;
    return UPoly(std::move(c));
}

UPoly exact_div(const UPoly &a, const UPoly &b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw std::domain_error("UPoly: inexact division");
    return q;
}

namespace {

// Scaled to integer coefficients with content 1.
UPoly primitive_integer(const UPoly &p)
{
    mpz_class l = 1, g = 0;
    for (const auto &c : p.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto &c : p.coeffs()) {
        mpz_class v = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    std::vector<Rational> out;
    for (auto &v : ints)
        out.emplace_back(mpz_class(v / g));
    return UPoly(std::move(out));
}

int sign_changes(const std::vector<UPoly> &chain, const Rational &x)
{
    int changes = 0, last = 0;
    for (const auto &p : chain) {
        int s = p(x).sign();
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

// Simplest (smallest denominator) rational in the open interval (a, b).
Rational simplest_between(const Rational &a, const Rational &b)
{
    Rational fl(floor(a));
    if (fl + Rational(1) < b)
        return fl + Rational(1);
    if (a == fl) {
        Rational y(mpz_class(floor((b - fl).inverse()) + 1));
        return fl + y.inverse();
    }
    return fl + simplest_between((b - fl).inverse(), (a - fl).inverse()).inverse();
}

} // namespace

std::vector<Rational> rational_roots(const UPoly &p)
{
    if (p.is_zero())
        throw std::domain_error("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    UPoly g = p;
    int v = g.x_valuation();
    if (v > 0) {
        roots.emplace_back(0);
        g = UPoly(std::vector<Rational>(g.coeffs().begin() + v, g.coeffs().end()));
    }
    if (g.degree() >= 1) {
        UPoly d = gcd(g, g.derivative());
        g = primitive_integer(exact_div(g, d));
    }
    if (g.degree() >= 1) {
        std::vector<UPoly> chain{g, g.derivative()};
        while (chain.back().degree() > 0) {
            UPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
            if (r.is_zero())
                break;
            chain.push_back(-r);
        }
        // Cauchy bound
        Rational bound(1);
        for (int i = 0; i < g.degree(); ++i)
            bound = std::max(bound, Rational(1) + (g.coeff(i) / g.leading()).abs());
        Rational lc = g.leading().abs();
        Rational width_target = (lc * lc * Rational(2)).inverse();

        std::vector<std::pair<Rational, Rational>> work{{-bound, bound}}, isolated;
        while (!work.empty()) {
            auto [a, b] = work.back();
            work.pop_back();
            int count = sign_changes(chain, a) - sign_changes(chain, b);
            if (count == 0)
                continue;
            if (count == 1 && b - a < width_target) {
                isolated.emplace_back(a, b);
                continue;
            }
            Rational mid = (a + b) * Rational(1, 2);
            work.emplace_back(a, mid);
            work.emplace_back(mid, b);
        }
        for (auto &[a, b] : isolated) {
            // the root lies in (a, b]
            if (g(b).is_zero()) {
                roots.push_back(b);
                continue;
            }
            Rational c = simplest_between(a, b);
            if (g(c).is_zero())
                roots.push_back(c);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

UPoly interpolate(const std::vector<Rational> &xs, const std::vector<Rational> &ys)
{
    if (xs.size() != ys.size())
        throw std::invalid_argument("interpolate: size mismatch");
    UPoly result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UPoly basis(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i)
                continue;
            basis = basis * UPoly({-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        result += basis * UPoly(ys[i] / denom);
    }
    return result;
}

} // namespace cyq
