#include "cyq/matrix.hpp"

namespace cyq {

MultiPoly exact_quotient(const MultiPoly &a, const MultiPoly &b)
{
    auto q = divide_exact(a, b);
    if (!q)
        throw DivisionByZeroPolynomial("inexact polynomial division in elimination");
    return std::move(*q);
}

namespace {

// A common multiple of the denominators in a row, as a product of their factors.
MultiPoly row_denominator(const RatMatrix &m, int i)
{
    std::vector<MultiRat::Factor> lcm;
    for (int j = 0; j < m.cols(); ++j)
        for (const auto &[f, e] : m(i, j).den_factors()) {
            bool found = false;
            for (auto &[g, ge] : lcm)
                if (g == f) {
                    ge = std::max(ge, e);
                    found = true;
                }
            if (!found)
                lcm.emplace_back(f, e);
        }
    MultiPoly r(1);
    for (const auto &[f, e] : lcm)
        r = r * f.pow(e);
    return r;
}

} // namespace

RatMatrix inverse(const RatMatrix &m)
{
    int n = m.rows();
    if (n != m.cols())
        throw DimensionMismatch("inverse of " + m.shape());
    PolyMatrix p(n, n);
    std::vector<MultiPoly> scale(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        scale[static_cast<std::size_t>(i)] = row_denominator(m, i);
        MultiRat s(scale[static_cast<std::size_t>(i)]);
        for (int j = 0; j < n; ++j) {
            MultiRat e = m(i, j) * s;
            if (!e.is_polynomial())
                throw DivisionByZeroPolynomial("row denominator did not clear entry");
            p(i, j) = e.num();
        }
    }
    auto [adj, d] = adjugate_det(p);
    // m = S⁻¹·p  ⇒  m⁻¹ = p⁻¹·S, i.e. column j of p⁻¹ scaled by s_j
    MultiRat dinv(MultiPoly(1), d);
    RatMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out(i, j) = MultiRat(adj(i, j) * scale[static_cast<std::size_t>(j)]) * dinv;
    return out;
}

Rref rref(QMatrix m)
{
    Rref out;
    int row = 0;
    for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
        int p = row;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        for (int j = 0; j < m.cols(); ++j)
            std::swap(m(row, j), m(p, j));
        Rational inv = m(row, c).inverse();
        for (int j = c; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, c).is_zero())
                continue;
            Rational f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(row, j);
        }
        out.pivots.push_back(c);
        ++row;
    }
    out.m = std::move(m);
    return out;
}

RatMatrix derivative(const RatMatrix &m, int v)
{
    return m.map([v](const MultiRat &x) { return x.derivative(v); });
}

RatMatrix to_rat(const QMatrix &m)
{
    return m.map([](const Rational &x) { return MultiRat(x); });
}

RatMatrix to_rat(const PolyMatrix &m)
{
    return m.map([](const MultiPoly &x) { return MultiRat(x); });
}

QMatrix evaluate(const RatMatrix &m, std::span<const Rational> point)
{
    return m.map([point](const MultiRat &x) { return x.evaluate(point); });
}

} // namespace cyq
