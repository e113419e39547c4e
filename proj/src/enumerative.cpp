#include "cyq/enumerative.hpp"

#include <stdexcept>

#include "cyq/errors.hpp"
#include "cyq/reference.hpp"

namespace cyq {

namespace {

Rational divisor_sum(const InstantonTable &t, int m, int weight)
{
    Rational s(0);
    for (int d = 1; d <= m; ++d)
        if (m % d == 0)
            s += t.n[static_cast<std::size_t>(d)] * Rational(d).pow(weight);
    return s;
}

} // namespace

QSeries yukawa_from_solution(const SeriesSolution &sol)
{
    QSeries d = sol[4] - pow(sol[0], 5);
    return -(d * d) * inv(pow(sol[5], 3)) * Rational(1, 625);
}

InstantonTable lambert_extract(const QSeries &y, int weight)
{
    if (y.order() < 1)
        throw std::invalid_argument("lambert_extract: need order at least 1");
    InstantonTable t;
    t.constant = y[0];
    t.max_degree = y.order();
    t.n.assign(static_cast<std::size_t>(t.max_degree) + 1, Rational(0));
    for (int m = 1; m <= t.max_degree; ++m) {
        Rational rest = y[m];
        for (int d = 1; d < m; ++d)
            if (m % d == 0)
                rest -= t.n[static_cast<std::size_t>(d)] * Rational(d).pow(weight);
        t.n[static_cast<std::size_t>(m)] = rest / Rational(m).pow(weight);
    }
    return t;
}

QSeries lambert_compose(const InstantonTable &t, int order, int weight)
{
    if (order > t.max_degree)
        throw std::invalid_argument("lambert_compose: table too short");
    QSeries y(order);
    y[0] = t.constant;
    for (int m = 1; m <= order; ++m)
        y[m] = divisor_sum(t, m, weight);
    return y;
}

GWTable gw_from_instanton(const InstantonTable &t)
{
    GWTable g;
    g.N.assign(t.n.size(), Rational(0));
    for (int d = 1; d <= t.max_degree; ++d)
        for (int k = 1; k <= d; ++k)
            if (d % k == 0)
                g.N[static_cast<std::size_t>(d)] += t.n[static_cast<std::size_t>(d / k)] / Rational(k).pow(3);
    return g;
}

int mobius(int n)
{
    if (n < 1)
        throw std::invalid_argument("mobius: n must be positive");
    int mu = 1;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            mu = -mu;
        }
    return n > 1 ? -mu : mu;
}

std::vector<Rational> instanton_from_gw(const GWTable &g)
{
    std::vector<Rational> n(g.N.size(), Rational(0));
    for (int d = 1; d < static_cast<int>(g.N.size()); ++d)
        for (int k = 1; k <= d; ++k)
            if (d % k == 0 && mobius(k) != 0)
                n[static_cast<std::size_t>(d)] +=
                    Rational(mobius(k)) * g.N[static_cast<std::size_t>(d / k)] / Rational(k).pow(3);
    return n;
}

JExpansion j_expansion(const QSeries &t0, const QSeries &t4)
{
    if (t4.order() < 2)
        throw BadPoleStructure("t4 needs order at least 2");
    if (!t4[0].is_zero())
        throw BadPoleStructure("t4 has a nonzero constant term");
    if (t4[1].is_zero())
        throw BadPoleStructure("t4 vanishes to order two or more");
    int n = std::min(t0.order(), t4.order() - 1);
    QSeries ratio = Rational(3125) * pow(t0.truncate(n), 5) * inv(t4.shift_down(1).truncate(n));
    JExpansion j;
    j.pole = ratio[0];
    j.regular = QSeries(std::vector<Rational>(ratio.coeffs().begin() + 1, ratio.coeffs().end()));
    return j;
}

JExpansion j_expansion(const SeriesSolution &sol)
{
    return j_expansion(sol[0], sol[4]);
}

bool ConjectureReport::integral() const
{
    for (const auto &e : entries)
        if (!e.integral)
            return false;
    return true;
}

bool ConjectureReport::positive() const
{
    for (const auto &e : entries)
        if (!e.positive)
            return false;
    return true;
}

ConjectureReport conjecture_check(const SeriesSolution &sol, int order)
{
    if (order > sol.order())
        throw std::invalid_argument("conjecture_check: solution order too low");
    ConjectureReport rep;
    rep.order = order;
    for (const auto &tab : reference::quintic_tables()) {
        QSeries s = sol[tab.var] * tab.scale;
        s[0] -= tab.shift;
        ConjectureEntry e;
        e.label = tab.label;
        for (int k = 1; k <= order; ++k) {
            bool integral = s[k].is_integer(), positive = s[k].sign() > 0;
            e.integral = e.integral && integral;
            e.positive = e.positive && positive;
            if ((!integral || !positive) && e.first_violation < 0) {
                e.first_violation = k;
                e.violating_value = s[k];
            }
        }
        rep.entries.push_back(e);
    }
    return rep;
}

AccessoryCheck q31_q14_check(const AccessoryFunctions &acc, const InstantonTable &t, int order)
{
    if (order > t.max_degree || order > acc.q31.order() || order > acc.q14.order())
        throw std::invalid_argument("q31_q14_check: inputs too short");
    AccessoryCheck c;
    c.q31 = acc.q31[0].is_zero();
    c.q14 = acc.q14_log_degree <= 0 && acc.q14[0].is_zero();
    c.q14_negated = c.q14;
    for (int n = 1; n <= order; ++n) {
        Rational a = divisor_sum(t, n, 3);
        c.q31 = c.q31 && acc.q31[n] == a / Rational(5 * n * n);
        Rational expect = Rational(2) * a / (Rational(5) * Rational(n).pow(3));
        if (!(acc.q14[n] == expect)) {
            c.q14 = false;
            if (c.q14_first_mismatch < 0)
                c.q14_first_mismatch = n;
        }
        c.q14_negated = c.q14_negated && acc.q14[n] == -expect;
    }
    return c;
}

} // namespace cyq
