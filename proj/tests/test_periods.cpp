#include <doctest.h>

#include "cyq/constants.hpp"
#include "cyq/ode.hpp"
#include "cyq/periods.hpp"
#include "cyq/reference.hpp"

using namespace cyq;

namespace {

const FrobeniusBasis &basis20()
{
    static const FrobeniusBasis b = build_frobenius(20);
    return b;
}

// a_n = Σ_{d|n} n_d d³ from the reference instanton list
Rational divisor_sum(int n)
{
    auto inst = reference::instanton_list();
    Rational s(0);
    for (int d = 1; d <= n; ++d)
        if (n % d == 0)
            s += inst[static_cast<std::size_t>(d)] * Rational(d).pow(3);
    return s;
}

} // namespace

TEST_CASE("frobenius basis")
{
    const auto &b = basis20();
    CHECK(b.g[0][0] == Rational(1));
    CHECK(b.g[0][1] == Rational(120));
    CHECK(b.g[0][2] == Rational(113400));
    CHECK(b.psi1_tilde[1] == Rational(120) * (Rational(1, 2) + Rational(1, 3) + Rational(1, 4) + Rational(1, 5)));
    CHECK(b.psi1_tilde[1] == Rational(154));
    CHECK(b.g[0] == b.psi0_closed);

    // ψ1 = log z̃·ψ0 + 5ψ̃1
    LogSeries expect = LogSeries::log_x(20) * b.g[0] + LogSeries(b.psi1_tilde * Rational(5));
    CHECK(b.psi[1] == expect);
    CHECK(b.psi[3].log_degree() == 3);
}

TEST_CASE("picard-fuchs operator")
{
    auto ops = theta_form(quintic_picard_fuchs());
    for (const auto &r : ops)
        CHECK(r.degree() <= 1);
    auto ff = [](int m, int k) {
        Rational r(1);
        for (int i = 0; i < k; ++i)
            r *= Rational(m - i);
        return r;
    };
    // 625z⁴(z−1)D⁴ − 625z³(6−8z)D³ − 125z²(35−72z)D² − 125z(5−24z)D + 24z on z^m
    // gives z^m·(lo + hi·z); the θ-form on z̃^m must be proportional with z = 3125z̃
    for (int m = 0; m < 8; ++m) {
        Rational hi = Rational(625) * ff(m, 4) + Rational(5000) * ff(m, 3) + Rational(9000) * ff(m, 2) +
                      Rational(3000) * ff(m, 1) + Rational(24);
        Rational lo = Rational(-625) * ff(m, 4) - Rational(3750) * ff(m, 3) - Rational(4375) * ff(m, 2) -
                      Rational(625) * ff(m, 1);
        Rational thi(0), tlo(0);
        for (int k = 0; k <= 4; ++k) {
            thi += ops[static_cast<std::size_t>(k)].coeff(1) * ff(m, k);
            tlo += ops[static_cast<std::size_t>(k)].coeff(0) * ff(m, k);
        }
        CHECK(thi * lo == Rational(3125) * hi * tlo);
        CHECK(!(thi.is_zero() && tlo.is_zero()));
    }
}

TEST_CASE("picard-fuchs annihilates the basis")
{
    auto rep = pf_annihilation_check(build_frobenius(12));
    CHECK(rep.clean());
    CHECK(rep.order == 12);

    auto ops = theta_form(quintic_picard_fuchs());
    auto b = build_frobenius(10);
    CHECK(apply_picard_fuchs(ops, b.psi[1]).is_zero());

    QSeries bad = b.g[0];
    bad[4] += Rational(1);
    CHECK(!apply_picard_fuchs(ops, LogSeries(bad)).is_zero());
}

TEST_CASE("mirror map")
{
    const auto &b = basis20();
    auto m = build_mirror_map(b);
    CHECK(m.q_of_z.truncate(2) == QSeries({Rational(0), Rational(1), Rational(770)}));
    CHECK(m.z_of_q.truncate(2) == QSeries({Rational(0), Rational(1), Rational(-770)}));
    CHECK(compose(m.q_of_z.truncate(15), m.z_of_q.truncate(15)) == QSeries::variable(15));
}

TEST_CASE("t0 and t4 from periods match the ODE route")
{
    auto b = build_frobenius(50);
    auto m = build_mirror_map(b);
    auto p = t0_t4_from_periods(b, m);
    CHECK(p.t0.truncate(2) == QSeries({Rational(1, 5), Rational(24), Rational(4200)}));
    CHECK(p.t4.truncate(2) == QSeries({Rational(0), Rational(1), Rational(-170)}));
    auto sol = solve_default(quintic_system(), 50);
    CHECK(p.t0 == sol[0]);
    CHECK(p.t4 == sol[4]);
}

TEST_CASE("yukawa from periods")
{
    const auto &b = basis20();
    auto y = yukawa_from_periods(b, build_mirror_map(b));
    CHECK(y[0] == Rational(5));
    CHECK(y[1] == Rational(2875));

    auto sol = solve_default(quintic_system(), 20);
    QSeries d = sol[4] - pow(sol[0], 5);
    QSeries theorem = -(d * d) * inv(pow(sol[5], 3)) * Rational(1, 625);
    CHECK(y == theorem);
}

TEST_CASE("accessory functions")
{
    auto b = build_frobenius(15);
    auto acc = accessory_functions(b, build_mirror_map(b));
    CHECK(acc.q14_log_degree == 0);
    CHECK(acc.q31[1] == Rational(575));
    CHECK(acc.q31[2] == (Rational(2875) + Rational(609250 * 8)) / Rational(5 * 4));
    for (int n = 1; n <= 10; ++n) {
        CHECK(acc.q31[n] == divisor_sum(n) / Rational(5 * n * n));
        // q14 = −(2/5)·Σ n_d Li₃(q^d): the prepotential term enters with a minus sign
        CHECK(acc.q14[n] == Rational(-2) * divisor_sum(n) / Rational(5 * n * n * n));
    }
    CHECK(acc.q31[0].is_zero());
}

TEST_CASE("monodromy around z = 0")
{
    auto rep = monodromy_check(build_frobenius(8));
    CHECK(rep.passed);
    CHECK(rep.convention == "P~ = M P");

    // M preserves the intersection form as M Ψ Mᵀ, not as Mᵀ Ψ M
    QMatrix M = constants::monodromy_zero(), Psi = constants::intersection_psi();
    CHECK(M * Psi * M.transpose() == Psi);
    CHECK(!(M.transpose() * Psi * M == Psi));
    QMatrix T = constants::monodromy_conifold();
    CHECK(T * Psi * T.transpose() == Psi);
}
