#include "cyq/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace cyq {

Rational::Rational(long n, long d) : v_(n, d)
{
    if (d == 0)
        throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class &n, const mpz_class &d) : v_(n, d)
{
    if (d == 0)
        throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v))
{
    v_.canonicalize();
}

static bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view n = text.substr(0, slash);
    std::string_view d = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(n) || !is_integer_literal(d) || d[0] == '-' || d[0] == '+')
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    std::string ns(n[0] == '+' ? n.substr(1) : n);
    mpz_class num(ns, 10), den(std::string(d), 10);
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string Rational::str() const
{
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(int e) const
{
    if (e < 0)
        return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.str();
}

mpz_class floor(const Rational &r)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.value().get_num_mpz_t(), r.value().get_den_mpz_t());
    return q;
}

Rational exact_root(const Rational &r, unsigned k)
{
    if (k == 0)
        throw std::domain_error("exact_root: k = 0");
    if (r.sign() < 0 && k % 2 == 0)
        throw std::domain_error("exact_root: even root of a negative number");
    mpz_class n = r.num(), d = r.den(), rn, rd;
    bool neg = n < 0;
    if (neg)
        n = -n;
    if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k) || !mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k))
        throw std::domain_error("exact_root: " + r.str() + " is not a perfect power");
    return Rational(neg ? mpz_class(-rn) : rn, rd);
}

} // namespace cyq
