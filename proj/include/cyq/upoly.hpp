#pragma once

#include <string>
#include <vector>

#include "cyq/rational.hpp"

namespace cyq {

/// Dense univariate polynomial over ℚ, coefficients in increasing degree,
/// no trailing zeros (the zero polynomial has no coefficients).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    UPoly(const Rational &c) : UPoly(std::vector<Rational>{c}) {}
    static UPoly x() { return UPoly({Rational(0), Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; } ///< -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : Rational(0); }
    const Rational &leading() const { return c_.back(); }
    const std::vector<Rational> &coeffs() const { return c_; }

    Rational operator()(const Rational &x) const;
    UPoly derivative() const;
    /// Multiplicity of the root 0.
    int x_valuation() const;

    UPoly &operator+=(const UPoly &o);
    UPoly &operator-=(const UPoly &o);
    friend UPoly operator+(UPoly a, const UPoly &b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly &b) { return a -= b; }
    friend UPoly operator*(const UPoly &a, const UPoly &b);
    UPoly operator-() const;
    friend bool operator==(const UPoly &a, const UPoly &b) { return a.c_ == b.c_; }

    /// Polynomial (a(s·x)): substitution x ↦ s·x.
    UPoly scale_variable(const Rational &s) const;

    std::string str(const std::string &var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly &a, const UPoly &b);
/// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly &a, const UPoly &b);
/// Exact quotient; throws std::domain_error when b does not divide a.
UPoly exact_div(const UPoly &a, const UPoly &b);

/// All distinct rational roots, in increasing order.
std::vector<Rational> rational_roots(const UPoly &p);

/// Interpolating polynomial through (x_i, y_i) with distinct x_i.
UPoly interpolate(const std::vector<Rational> &xs, const std::vector<Rational> &ys);

} // namespace cyq
