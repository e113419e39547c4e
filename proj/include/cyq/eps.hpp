#pragma once

#include <array>
#include <string>
#include <vector>

#include "cyq/rational.hpp"

namespace cyq {

/// Element c0 + c1ε + c2ε² + c3ε³ of ℚ[ε]/(ε⁴).
class EpsElement {
public:
    static constexpr int kDegree = 4;

    EpsElement() = default;
    EpsElement(int c) : c_{Rational(c), 0, 0, 0} {}
    EpsElement(const Rational &c) : c_{c, 0, 0, 0} {}
    EpsElement(Rational c0, Rational c1, Rational c2, Rational c3) : c_{c0, c1, c2, c3} {}

    static EpsElement eps() { return {0, 1, 0, 0}; }

    const Rational &operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

    bool is_zero() const;
    EpsElement inverse() const; ///< throws NonUnitConstantTerm when c0 = 0

    EpsElement &operator+=(const EpsElement &o);
    EpsElement &operator-=(const EpsElement &o);
    EpsElement &operator*=(const EpsElement &o);

    friend EpsElement operator+(EpsElement a, const EpsElement &b) { return a += b; }
    friend EpsElement operator-(EpsElement a, const EpsElement &b) { return a -= b; }
    friend EpsElement operator*(EpsElement a, const EpsElement &b) { return a *= b; }
    friend EpsElement operator/(const EpsElement &a, const EpsElement &b) { return a * b.inverse(); }
    EpsElement operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

    friend bool operator==(const EpsElement &a, const EpsElement &b) { return a.c_ == b.c_; }

    std::string str() const;

private:
    std::array<Rational, kDegree> c_{};
};

inline bool is_unit(const EpsElement &e) { return !e[0].is_zero(); }

/// c_n(ε) = ∏_{j=1}^{5n}(j+5ε) / (∏_{k=1}^{n}(k+ε))⁵ in ℚ[ε]/(ε⁴).
EpsElement frobenius_coefficient(int n);

/// c_0(ε) .. c_N(ε), computed incrementally.
std::vector<EpsElement> frobenius_coefficients(int max_n);

} // namespace cyq
