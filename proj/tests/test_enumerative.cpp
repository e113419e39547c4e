#include <doctest.h>

#include "cyq/enumerative.hpp"
#include "cyq/errors.hpp"
#include "cyq/reference.hpp"
#include "support/gen.hpp"

using namespace cyq;

namespace {

QSeries yukawa_ode(const SeriesSolution &sol)
{
    QSeries d = sol[4] - pow(sol[0], 5);
    return -(d * d) * inv(pow(sol[5], 3)) * Rational(1, 625);
}

} // namespace

TEST_CASE("lambert extraction")
{
    QSeries y({Rational(5), Rational(2875), Rational(4876875)});
    auto t = lambert_extract(y);
    CHECK(t.constant == Rational(5));
    CHECK(t.n[1] == Rational(2875));
    CHECK(t.n[2] == Rational(609250));
    CHECK(Rational(2875) + Rational(609250 * 8) == Rational(4876875));

    auto z = lambert_extract(QSeries(6));
    for (int d = 1; d <= 6; ++d)
        CHECK(z.n[static_cast<std::size_t>(d)].is_zero());

    // q/(1−q) expanded directly: n_1 = 1, everything else 0
    QSeries geo(8);
    for (int k = 1; k <= 8; ++k)
        geo[k] = 1;
    auto g = lambert_extract(geo);
    CHECK(g.n[1] == Rational(1));
    for (int d = 2; d <= 8; ++d)
        CHECK(g.n[static_cast<std::size_t>(d)].is_zero());
}

TEST_CASE("lambert round trip on random tables")
{
    for (int trial = 0; trial < 30; ++trial) {
        int order = gen::integer(1, 20);
        InstantonTable t;
        t.constant = gen::rational();
        t.max_degree = order;
        t.n.assign(static_cast<std::size_t>(order) + 1, Rational(0));
        for (int d = 1; d <= order; ++d)
            t.n[static_cast<std::size_t>(d)] = gen::rational(50);
        auto back = lambert_extract(lambert_compose(t, order));
        CHECK(back.constant == t.constant);
        CHECK(back.n == t.n);

        QSeries y = gen::series(order);
        CHECK(lambert_compose(lambert_extract(y), order) == y);
    }
}

TEST_CASE("gromov-witten values and mobius inversion")
{
    InstantonTable t;
    t.constant = 5;
    t.max_degree = 10;
    t.n = reference::instanton_list();
    t.n[0] = 0;
    auto g = gw_from_instanton(t);
    CHECK(g.N[1] == Rational(2875));
    CHECK(g.N[2] == Rational(4876875, 8));
    CHECK(g.N[3] == Rational(317206375) + Rational(2875, 27));
    CHECK(instanton_from_gw(g) == t.n);

    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(mobius(7) == -1);
}

TEST_CASE("instanton numbers from both routes")
{
    auto sol = solve_default(quintic_system(), 10);
    auto b = build_frobenius(10);
    auto ode = lambert_extract(yukawa_ode(sol));
    auto per = lambert_extract(yukawa_from_periods(b, build_mirror_map(b)));
    const auto &list = reference::instanton_list();
    CHECK(ode.constant == list[0]);
    for (int d = 1; d <= 10; ++d) {
        CHECK(ode.n[static_cast<std::size_t>(d)] == list[static_cast<std::size_t>(d)]);
        CHECK(per.n[static_cast<std::size_t>(d)] == list[static_cast<std::size_t>(d)]);
    }
}

TEST_CASE("3125 j expansion")
{
    auto sol = solve_default(quintic_system(), 11);
    auto j = j_expansion(sol);
    CHECK(j.pole == Rational(1));
    CHECK(j.regular.order() == 9);
    CHECK(j.regular[0] == Rational(770));
    CHECK(j.regular[1] == Rational(421375));
    const auto &c = reference::j_coefficients();
    for (int k = 0; k <= 8; ++k)
        CHECK(j.regular[k] == c[static_cast<std::size_t>(k)]);
    // the tabulated q⁹ value is what comes out when t4 is cut off after q¹⁰
    CHECK(j.regular[9] == Rational::parse("1251589997037399017354527578093"));
    QSeries t4cut = sol[4];
    t4cut[11] = 0;
    CHECK(j_expansion(sol[0], t4cut).regular[9] == c[9]);
    CHECK(j_expansion(sol[0], sol[4].truncate(10)).regular.order() == 8);

    auto b = build_frobenius(11);
    auto p = t0_t4_from_periods(b, build_mirror_map(b));
    auto jp = j_expansion(p.t0, p.t4);
    CHECK(jp.pole == j.pole);
    CHECK(jp.regular == j.regular);

    QSeries t0 = sol[0];
    QSeries t4 = sol[4];
    t4[0] = 1;
    CHECK_THROWS_AS(j_expansion(t0, t4), BadPoleStructure);
    t4[0] = 0;
    t4[1] = 0;
    CHECK_THROWS_AS(j_expansion(t0, t4), BadPoleStructure);
}

TEST_CASE("normalized series: integrality and positivity")
{
    auto sol = solve_default(quintic_system(), 50);
    auto rep = conjecture_check(sol, 10);
    REQUIRE(rep.entries.size() == 7);
    CHECK(rep.integral());
    // −t4 and 15625t6 start with −q and −15q
    for (const auto &e : rep.entries) {
        INFO(e.label);
        if (e.label == "-t4" || e.label == "15625t6") {
            CHECK(!e.positive);
            CHECK(e.first_violation == 1);
        } else {
            CHECK(e.positive);
            CHECK(e.first_violation == -1);
        }
    }
    CHECK(rep.entries[4].violating_value == Rational(-1));
    CHECK(rep.entries[6].violating_value == Rational(-15));

    auto rep50 = conjecture_check(sol, 50);
    CHECK(rep50.integral());

    auto bad = sol;
    bad.series[2][7] += Rational(1, 3);
    auto rep_bad = conjecture_check(bad, 10);
    CHECK(!rep_bad.entries[2].integral);
    CHECK(rep_bad.entries[2].first_violation == 7);
    CHECK(rep_bad.entries[2].label == "(-1/50)t2");
}

TEST_CASE("q31 and q14 against the instanton table")
{
    auto b = build_frobenius(15);
    auto acc = accessory_functions(b, build_mirror_map(b));
    auto sol = solve_default(quintic_system(), 15);
    auto t = lambert_extract(yukawa_ode(sol));
    auto c = q31_q14_check(acc, t, 15);
    CHECK(c.q31);
    CHECK(!c.q14);
    CHECK(c.q14_negated);
    CHECK(c.q14_first_mismatch == 1);
    CHECK(!c.passed());
}
