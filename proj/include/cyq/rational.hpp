#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cyq {

/// Arbitrary-precision exact fraction. Always kept in canonical form:
/// positive denominator, numerator and denominator coprime.
class Rational {
public:
    Rational() = default;
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(long n, long d);
    explicit Rational(const mpz_class &n) : v_(n) {}
    Rational(const mpz_class &n, const mpz_class &d);
    explicit Rational(mpq_class v);

    /// Parses "p", "-p", "p/q" (decimal integers). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    /// "p/q", "-p/q", or "p" when the denominator is 1.
    std::string str() const;

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class &value() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational inverse() const;
    Rational pow(int e) const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
    Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
    Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

/// floor(r) as an integer.
mpz_class floor(const Rational &r);

/// Exact k-th root if r is the k-th power of a rational; throws std::domain_error otherwise.
Rational exact_root(const Rational &r, unsigned k);

} // namespace cyq
