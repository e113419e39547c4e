#include "cyq/eps.hpp"

#include <stdexcept>

#include "cyq/errors.hpp"

namespace cyq {

bool EpsElement::is_zero() const
{
    for (const auto &c : c_)
        if (!c.is_zero())
            return false;
    return true;
}

EpsElement &EpsElement::operator+=(const EpsElement &o)
{
    for (int i = 0; i < kDegree; ++i)
        c_[i] += o.c_[i];
    return *this;
}

EpsElement &EpsElement::operator-=(const EpsElement &o)
{
    for (int i = 0; i < kDegree; ++i)
        c_[i] -= o.c_[i];
    return *this;
}

EpsElement &EpsElement::operator*=(const EpsElement &o)
{
    std::array<Rational, kDegree> r{};
    for (int i = 0; i < kDegree; ++i) {
        if (c_[i].is_zero())
            continue;
        for (int j = 0; i + j < kDegree; ++j)
            if (!o.c_[j].is_zero())
                r[i + j] += c_[i] * o.c_[j];
    }
    c_ = r;
    return *this;
}

EpsElement EpsElement::inverse() const
{
    if (c_[0].is_zero())
        throw NonUnitConstantTerm("EpsElement: constant part is zero");
    // x = c0(1 + n) with n nilpotent: x⁻¹ = (1 - n + n² - n³)/c0
    Rational c0inv = c_[0].inverse();
    EpsElement n{0, c_[1] * c0inv, c_[2] * c0inv, c_[3] * c0inv};
    EpsElement n2 = n * n;
    EpsElement r = EpsElement(1) - n + n2 - n2 * n;
    return r * EpsElement(c0inv);
}

std::string EpsElement::str() const
{
    return "[" + c_[0].str() + ", " + c_[1].str() + ", " + c_[2].str() + ", " + c_[3].str() + "]";
}

std::vector<EpsElement> frobenius_coefficients(int max_n)
{
    if (max_n < 0)
        throw std::invalid_argument("frobenius_coefficients: negative index");
    std::vector<EpsElement> out;
    out.reserve(static_cast<std::size_t>(max_n) + 1);
    EpsElement c(1);
    out.push_back(c);
    for (int n = 1; n <= max_n; ++n) {
        EpsElement numer(1);
        for (int j = 5 * n - 4; j <= 5 * n; ++j)
            numer *= EpsElement(j, 5, 0, 0);
        EpsElement lin(n, 1, 0, 0);
        EpsElement lin2 = lin * lin;
        EpsElement denom = lin2 * lin2 * lin;
        c = c * numer / denom;
        out.push_back(c);
    }
    return out;
}

EpsElement frobenius_coefficient(int n)
{
    return frobenius_coefficients(n).back();
}

} // namespace cyq
