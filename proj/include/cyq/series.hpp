#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "cyq/errors.hpp"
#include "cyq/rational.hpp"

namespace cyq {

inline bool is_unit(const Rational &r) { return !r.is_zero(); }

/// Dense truncated power series c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}) over a
/// commutative ring R of characteristic zero. N is the truncation order; binary
/// operations take the smaller order so no unknown coefficient is ever produced.
///
/// R needs +, -, *, construction from int, is_zero() and a free is_unit(R);
/// inversion additionally needs R::inverse().
template <class R>
class Series {
public:
    explicit Series(int order = 0) : c_(static_cast<std::size_t>(checked(order)) + 1, R(0)) {}
    explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs))
    {
        if (c_.empty())
            throw std::invalid_argument("Series: empty coefficient list");
    }

    static Series constant(const R &c, int order)
    {
        Series s(order);
        s.c_[0] = c;
        return s;
    }
    /// c * x^k truncated at `order`.
    static Series monomial(const R &c, int k, int order)
    {
        Series s(order);
        if (k <= order)
            s.c_[static_cast<std::size_t>(k)] = c;
        return s;
    }
    static Series variable(int order) { return monomial(R(1), 1, order); }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const R &operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    R &operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<R> &coeffs() const { return c_; }

    Series truncate(int n) const
    {
        if (n > order())
            throw std::invalid_argument("Series::truncate: cannot raise the order");
        return Series(std::vector<R>(c_.begin(), c_.begin() + n + 1));
    }

    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const R &r) { return r.is_zero(); });
    }
    /// Index of the first nonzero coefficient, or -1.
    int valuation() const
    {
        for (int i = 0; i <= order(); ++i)
            if (!c_[static_cast<std::size_t>(i)].is_zero())
                return i;
        return -1;
    }

    Series &operator+=(const Series &o)
    {
        shrink_to(o.order());
        for (int i = 0; i <= order(); ++i)
            (*this)[i] += o[i];
        return *this;
    }
    Series &operator-=(const Series &o)
    {
        shrink_to(o.order());
        for (int i = 0; i <= order(); ++i)
            (*this)[i] -= o[i];
        return *this;
    }
    Series &operator*=(const R &s)
    {
        for (auto &c : c_)
            c *= s;
        return *this;
    }

    friend Series operator+(Series a, const Series &b) { return a += b; }
    friend Series operator-(Series a, const Series &b) { return a -= b; }
    friend Series operator*(Series a, const R &s) { return a *= s; }
    friend Series operator*(const R &s, Series a) { return a *= s; }
    Series operator-() const
    {
        Series r = *this;
        for (auto &c : r.c_)
            c = -c;
        return r;
    }

    /// Cauchy product, schoolbook.
    friend Series operator*(const Series &a, const Series &b)
    {
        int n = std::min(a.order(), b.order());
        int va = a.valuation(), vb = b.valuation();
        Series r(n);
        if (va < 0 || vb < 0)
            return r;
        for (int k = va + vb; k <= n; ++k) {
            R acc(0);
            for (int i = va; i <= k - vb; ++i)
                if (!a[i].is_zero() && !b[k - i].is_zero())
                    acc += a[i] * b[k - i];
            r[k] = std::move(acc);
        }
        return r;
    }
    Series &operator*=(const Series &o) { return *this = *this * o; }

    friend bool operator==(const Series &a, const Series &b) { return a.c_ == b.c_; }

    /// Divides by x^k; the first k coefficients must vanish. Order drops by k.
    Series shift_down(int k) const
    {
        for (int i = 0; i < k && i <= order(); ++i)
            if (!c_[static_cast<std::size_t>(i)].is_zero())
                throw BadLowOrderTerms("shift_down: coefficient " + std::to_string(i) + " is nonzero");
        if (k > order())
            throw std::invalid_argument("shift_down: shift exceeds order");
        return Series(std::vector<R>(c_.begin() + k, c_.end()));
    }
    /// Multiplies by x^k. Order rises by k.
    Series shift_up(int k) const
    {
        std::vector<R> v(static_cast<std::size_t>(k), R(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return Series(std::move(v));
    }

    /// d/dx; order drops by one (order 0 gives the zero series of order 0).
    Series derivative() const
    {
        if (order() == 0)
            return Series(0);
        Series r(order() - 1);
        for (int i = 1; i <= order(); ++i)
            r[i - 1] = c_[static_cast<std::size_t>(i)] * R(i);
        return r;
    }
    /// Antiderivative with zero constant term; order rises by one.
    Series integral() const
    {
        Series r(order() + 1);
        for (int i = 0; i <= order(); ++i)
            r[i + 1] = c_[static_cast<std::size_t>(i)] * R(Rational(1, i + 1));
        return r;
    }

private:
    static int checked(int order)
    {
        if (order < 0)
            throw std::invalid_argument("Series: negative order");
        return order;
    }
    void shrink_to(int n)
    {
        if (n < order())
            c_.resize(static_cast<std::size_t>(n) + 1);
    }

    std::vector<R> c_;
};

using QSeries = Series<Rational>;

/// Multiplicative inverse; the constant term must be a unit of R.
template <class R>
Series<R> inv(const Series<R> &a)
{
    if (!is_unit(a[0]))
        throw NonUnitConstantTerm("series_inv: constant term is not invertible");
    int n = a.order();
    Series<R> r(n);
    R c0inv = a[0].inverse();
    r[0] = c0inv;
    for (int k = 1; k <= n; ++k) {
        R acc(0);
        for (int i = 1; i <= k; ++i)
            if (!a[i].is_zero())
                acc += a[i] * r[k - i];
        r[k] = -(acc * c0inv);
    }
    return r;
}

template <class R>
Series<R> operator/(const Series<R> &a, const Series<R> &b)
{
    return a * inv(b);
}

/// θ = λ·x·d/dx, applied termwise: coefficient n becomes λ·n·c_n.
template <class R>
Series<R> theta(const Series<R> &a, const Rational &lambda)
{
    Series<R> r = a;
    for (int n = 0; n <= a.order(); ++n)
        r[n] = a[n] * R(lambda * Rational(n));
    return r;
}

/// exp(a) for a with zero constant term, from f' = a'·f solved term by term.
template <class R>
Series<R> exp(const Series<R> &a)
{
    if (!a[0].is_zero())
        throw NonzeroConstantTerm("series_exp: constant term must be zero");
    int n = a.order();
    Series<R> f(n);
    f[0] = R(1);
    for (int m = 1; m <= n; ++m) {
        R acc(0);
        for (int k = 1; k <= m; ++k)
            if (!a[k].is_zero())
                acc += R(k) * a[k] * f[m - k];
        f[m] = acc * R(Rational(1, m));
    }
    return f;
}

/// log(a) for a with constant term 1, from a·b' = a' solved term by term.
template <class R>
Series<R> log(const Series<R> &a)
{
    if (!(a[0] == R(1)))
        throw NonUnitConstantTerm("series_log: constant term must be 1");
    int n = a.order();
    Series<R> b(n);
    for (int m = 1; m <= n; ++m) {
        R acc = R(m) * a[m];
        for (int k = 1; k < m; ++k)
            if (!a[m - k].is_zero())
                acc -= R(k) * b[k] * a[m - k];
        b[m] = acc * R(Rational(1, m));
    }
    return b;
}

template <class R>
Series<R> pow(const Series<R> &a, unsigned e)
{
    Series<R> result = Series<R>::constant(R(1), a.order());
    Series<R> base = a;
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1u;
        if (e)
            base *= base;
    }
    return result;
}

/// f(g(x)) for g with zero constant term (Horner scheme).
template <class R>
Series<R> compose(const Series<R> &f, const Series<R> &g)
{
    if (!g[0].is_zero())
        throw BadLowOrderTerms("compose: inner series must have zero constant term");
    int n = std::min(f.order(), g.order());
    Series<R> r = Series<R>::constant(f[n], n);
    Series<R> gt = g.truncate(n);
    for (int k = n - 1; k >= 0; --k) {
        r = r * gt;
        r[0] += f[k];
    }
    return r;
}

/// Functional inverse b with a(b(x)) = x, via Lagrange inversion
/// b_n = (1/n)·[x^{n-1}] (x/a(x))^n.
template <class R>
Series<R> revert(const Series<R> &a)
{
    if (a.order() < 1 || !a[0].is_zero() || !is_unit(a[1]))
        throw BadLowOrderTerms("series_revert: need zero constant term and invertible linear term");
    int n = a.order();
    Series<R> phi = inv(a.shift_down(1)); // x / a(x), order n-1
    Series<R> b(n);
    Series<R> p = Series<R>::constant(R(1), n - 1);
    for (int k = 1; k <= n; ++k) {
        p *= phi;
        b[k] = p[k - 1] * R(Rational(1, k));
    }
    return b;
}

/// a^{1/k} for a with a k-th power rational constant term, normalized so the
/// constant term is the real rational root.
QSeries nth_root(const QSeries &a, unsigned k);

std::string to_string(const QSeries &s, const std::string &var = "q");

} // namespace cyq
