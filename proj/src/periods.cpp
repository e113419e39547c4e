#include "cyq/periods.hpp"

#include <stdexcept>

#include "cyq/constants.hpp"
#include "cyq/eps.hpp"

namespace cyq {

namespace {

const Rational kZScale(3125); // z = 5⁵ z̃

QSeries as_series(const UPoly &p, int order)
{
    QSeries s(order);
    for (int i = 0; i <= p.degree() && i <= order; ++i)
        s[i] = p.coeff(i);
    return s;
}

UPoly lcm(const UPoly &a, const UPoly &b)
{
    return exact_div(a * b, gcd(a, b));
}

UPoly monomial(int k)
{
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
    c.back() = 1;
    return UPoly(std::move(c));
}

// The LogSeries in z̃ re-expressed with log q as the log variable, then composed with z(q).
LogSeries to_q(const LogSeries &f, const QSeries &u, const QSeries &z_of_q)
{
    LogSeries shifted = f.shift_log(-u);
    std::array<QSeries, 4> parts;
    for (int j = 0; j < 4; ++j)
        parts[static_cast<std::size_t>(j)] = compose(shifted.part(j), z_of_q);
    return LogSeries(parts);
}

} // namespace

FrobeniusBasis build_frobenius(int order)
{
    if (order < 1)
        throw std::invalid_argument("build_frobenius: order must be at least 1");
    FrobeniusBasis b;
    b.order = order;
    auto c = frobenius_coefficients(order);
    for (int a = 0; a < 4; ++a) {
        QSeries g(order);
        for (int n = 0; n <= order; ++n)
            g[n] = c[static_cast<std::size_t>(n)][a];
        b.g[static_cast<std::size_t>(a)] = g;
    }
    for (int i = 0; i < 4; ++i) {
        std::array<QSeries, 4> parts{QSeries(order), QSeries(order), QSeries(order), QSeries(order)};
        for (int j = 0; j <= i; ++j)
            parts[static_cast<std::size_t>(j)] = b.g[static_cast<std::size_t>(i - j)];
        b.psi[static_cast<std::size_t>(i)] = LogSeries(parts);
    }

    b.psi0_closed = QSeries(order);
    b.psi1_tilde = QSeries(order);
    Rational term(1), harmonic(0);
    b.psi0_closed[0] = 1;
    for (int m = 1; m <= order; ++m) {
        for (int j = 5 * m - 4; j <= 5 * m; ++j)
            term *= Rational(j);
        term /= Rational(m).pow(5);
        // Σ_{k=m+1}^{5m} 1/k from the previous m
        harmonic -= Rational(1, m);
        for (int k = 5 * m - 4; k <= 5 * m; ++k)
            harmonic += Rational(1, k);
        b.psi0_closed[m] = term;
        b.psi1_tilde[m] = term * harmonic;
    }
    if (!(b.g[0] == b.psi0_closed))
        throw std::logic_error("build_frobenius: ε-route ψ0 differs from the closed form");
    if (!(b.g[1] == b.psi1_tilde * Rational(5)))
        throw std::logic_error("build_frobenius: ε-route g1 differs from 5ψ̃1");
    return b;
}

PicardFuchs quintic_picard_fuchs()
{
    auto P = [](std::initializer_list<long> c) {
        std::vector<Rational> v;
        for (long x : c)
            v.emplace_back(x);
        return UPoly(v);
    };
    PicardFuchs pf;
    pf.num = {P({-24}), P({5, -24}), P({35, -72}), P({6, -8})};
    pf.den = {P({0, 0, 0, -625, 625}), P({0, 0, 0, -5, 5}), P({0, 0, -5, 5}), P({0, -1, 1})};
    return pf;
}

std::array<UPoly, 5> theta_form(const PicardFuchs &pf)
{
    UPoly L = pf.den[0];
    for (int k = 1; k < 4; ++k)
        L = lcm(L, pf.den[static_cast<std::size_t>(k)]);
    // Σ_{k=0}^{4} c_k(z)·d^k/dz^k with c_4 = L
    std::array<UPoly, 5> c;
    c[4] = L;
    for (int k = 0; k < 4; ++k)
        c[static_cast<std::size_t>(k)] = -(pf.num[static_cast<std::size_t>(k)] * exact_div(L, pf.den[static_cast<std::size_t>(k)]));
    // z^k d^k/dz^k = θ(θ−1)…(θ−k+1); pick the least s with z^k | c_k·z^s
    int s = 0;
    for (int k = 0; k <= 4; ++k)
        if (!c[static_cast<std::size_t>(k)].is_zero())
            s = std::max(s, k - c[static_cast<std::size_t>(k)].x_valuation());
    std::array<UPoly, 5> r;
    for (int k = 0; k <= 4; ++k) {
        UPoly ck = c[static_cast<std::size_t>(k)] * monomial(s);
        r[static_cast<std::size_t>(k)] = exact_div(ck, monomial(k)).scale_variable(kZScale);
    }
    return r;
}

LogSeries apply_picard_fuchs(const std::array<UPoly, 5> &ops, const LogSeries &f)
{
    int n = f.order();
    LogSeries h = f, out(n);
    for (int k = 0; k <= 4; ++k) {
        if (k > 0)
            h = h.theta() - h * Rational(k - 1);
        out += h * as_series(ops[static_cast<std::size_t>(k)], n);
    }
    return out;
}

bool AnnihilationReport::clean() const
{
    for (int k : first_nonzero)
        if (k >= 0)
            return false;
    return true;
}

AnnihilationReport pf_annihilation_check(const FrobeniusBasis &basis)
{
    auto ops = theta_form(quintic_picard_fuchs());
    AnnihilationReport rep;
    rep.order = basis.order;
    for (int i = 0; i < 4; ++i) {
        LogSeries res = apply_picard_fuchs(ops, basis.psi[static_cast<std::size_t>(i)]);
        int first = -1;
        for (int j = 0; j < 4; ++j) {
            int v = res.part(j).valuation();
            if (v >= 0 && (first < 0 || v < first))
                first = v;
        }
        rep.first_nonzero[static_cast<std::size_t>(i)] = first;
    }
    return rep;
}

MirrorMap build_mirror_map(const FrobeniusBasis &basis)
{
    int n = basis.order;
    QSeries u = basis.g[1] / basis.g[0];
    MirrorMap m;
    m.q_of_z = exp(u).shift_up(1).truncate(n);
    m.z_of_q = revert(m.q_of_z);
    return m;
}

PeriodT0T4 t0_t4_from_periods(const FrobeniusBasis &basis, const MirrorMap &map)
{
    int n = basis.order;
    QSeries t0z = basis.g[0] * Rational(1, 5);
    QSeries t4z = pow(basis.g[0], 5).shift_up(1).truncate(n);
    return {compose(t0z, map.z_of_q), compose(t4z, map.z_of_q)};
}

QSeries yukawa_from_periods(const FrobeniusBasis &basis, const MirrorMap &map)
{
    int n = basis.order;
    const QSeries &g0 = basis.g[0];
    QSeries u = basis.g[1] / g0;
    // θ log q = 1 + θu
    QSeries dlogq = QSeries::constant(1, n) + theta(u, Rational(1));
    QSeries conifold = QSeries::constant(1, n) - QSeries::monomial(kZScale, 1, n);
    QSeries yz = Rational(5) * inv(conifold * g0 * g0 * pow(dlogq, 3));
    return compose(yz, map.z_of_q);
}

AccessoryFunctions accessory_functions(const FrobeniusBasis &basis, const MirrorMap &map)
{
    const QSeries &g0 = basis.g[0];
    QSeries u = basis.g[1] / g0;
    LogSeries P1 = basis.psi[1] / g0, P2 = basis.psi[2] / g0, P3 = basis.psi[3] / g0;

    LogSeries q31 = P2 - P1 * P1 * Rational(1, 2);
    LogSeries q14 = P1 * P1 * P1 * Rational(1, 3) - P1 * P2 + P3;

    LogSeries q31q = to_q(q31, u, map.z_of_q);
    LogSeries q14q = to_q(q14, u, map.z_of_q);
    if (q31q.log_degree() > 0)
        throw std::logic_error("accessory_functions: q31 keeps a log q term");

    AccessoryFunctions out;
    out.q31 = q31q.part(0);
    out.q14 = q14q.part(0);
    out.q14_log_degree = q14q.log_degree();
    return out;
}

MonodromyReport monodromy_check(const FrobeniusBasis &basis)
{
    QMatrix M = constants::monodromy_zero();
    const int factorial[4] = {1, 1, 2, 6};
    bool direct = true, transposed = true;
    for (const Rational &c : {Rational(1), Rational(2), Rational(-1, 3), Rational(5, 7)}) {
        QSeries shift = QSeries::constant(c, basis.order);
        std::array<LogSeries, 4> P, Pt;
        for (int i = 0; i < 4; ++i) {
            Rational w = c.pow(3 - i) * Rational(factorial[i]);
            P[static_cast<std::size_t>(i)] = basis.psi[static_cast<std::size_t>(i)] * w;
            Pt[static_cast<std::size_t>(i)] = basis.psi[static_cast<std::size_t>(i)].shift_log(shift) * w;
        }
        for (int i = 0; i < 4; ++i) {
            LogSeries a(basis.order), b(basis.order);
            for (int j = 0; j < 4; ++j) {
                a += P[static_cast<std::size_t>(j)] * M(i, j);
                b += P[static_cast<std::size_t>(j)] * M(j, i);
            }
            direct = direct && a == Pt[static_cast<std::size_t>(i)];
            transposed = transposed && b == Pt[static_cast<std::size_t>(i)];
        }
    }
    MonodromyReport rep;
    if (direct != transposed)
        rep.convention = direct ? "P~ = M P" : "P~ = M^T P";
    rep.passed = direct != transposed;
    return rep;
}

} // namespace cyq
