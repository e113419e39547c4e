#pragma once

#include <random>

#include "cyq/multipoly.hpp"
#include "cyq/series.hpp"

// Hand-rolled generators for property tests. Fixed seeds keep failures reproducible.
namespace gen {

inline std::mt19937_64 &rng()
{
    static std::mt19937_64 r(0x5eed'c0ffeeULL);
    return r;
}

inline int integer(int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline cyq::Rational rational(int span = 9)
{
    int d = integer(1, span);
    return cyq::Rational(integer(-span, span), d);
}

inline cyq::Rational nonzero_rational(int span = 9)
{
    cyq::Rational r;
    do
        r = rational(span);
    while (r.is_zero());
    return r;
}

inline cyq::QSeries series(int order, int span = 9)
{
    cyq::QSeries s(order);
    for (int i = 0; i <= order; ++i)
        s[i] = rational(span);
    return s;
}

// sparse polynomial in t0..t(nvars-1)
inline cyq::MultiPoly poly(int nvars = 4, int terms = 4, int max_exp = 3)
{
    cyq::MultiPoly p;
    for (int k = 0; k < terms; ++k) {
        std::array<int, cyq::kNumVars> e{};
        for (int v = 0; v < nvars; ++v)
            e[static_cast<std::size_t>(v)] = integer(0, max_exp);
        p += cyq::MultiPoly::monomial(rational(), cyq::Monomial::from_exponents(e));
    }
    return p;
}

inline cyq::MultiPoly nonzero_poly(int nvars = 4, int terms = 4, int max_exp = 3)
{
    cyq::MultiPoly p;
    do
        p = poly(nvars, terms, max_exp);
    while (p.is_zero());
    return p;
}

} // namespace gen
