#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "cyq/enumerative.hpp"
#include "cyq/ode.hpp"
#include "cyq/periods.hpp"
#include "cyq/reference.hpp"
#include "cyq/suites.hpp"

using namespace cyq;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

std::string qpow(int k) { return "q^" + std::to_string(k); }

// Records the first coefficient where a and b differ through `order`.
void series_equal(Outcome &o, const std::string &what, const QSeries &a, const QSeries &b, int order)
{
    if (!o.passed)
        return;
    if (a.order() < order || b.order() < order) {
        o = {false, what + ": order too low"};
        return;
    }
    for (int k = 0; k <= order; ++k)
        if (!(a[k] == b[k])) {
            o = {false, what + " differs at " + qpow(k) + ": " + a[k].str() + " vs " + b[k].str()};
            return;
        }
}

QSeries divisor_eisenstein(int k, long a, long b, int order)
{
    QSeries s(order);
    s[0] = Rational(a);
    for (int n = 1; n <= order; ++n) {
        mpz_class sigma = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) {
                mpz_class p;
                mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(2 * k - 1));
                sigma += p;
            }
        s[n] = Rational(a * b) * Rational(sigma);
    }
    return s;
}

Outcome tables()
{
    Outcome o;
    auto sol = solve_default(quintic_system(), 10);
    for (const auto &tab : reference::quintic_tables())
        series_equal(o, tab.label, sol[tab.var] * tab.scale, QSeries(tab.coeffs), 10);
    if (o.passed)
        o.detail = "seven normalized series equal through q^10";
    return o;
}

Outcome instanton_list()
{
    auto t = lambert_extract(yukawa_from_solution(solve_default(quintic_system(), 10)));
    const auto &list = reference::instanton_list();
    if (!(t.constant == list[0]))
        return {false, "constant " + t.constant.str()};
    for (int d = 1; d <= 10; ++d)
        if (!(t.n[static_cast<std::size_t>(d)] == list[static_cast<std::size_t>(d)]))
            return {false, "n_" + std::to_string(d) + " = " + t.n[static_cast<std::size_t>(d)].str()};
    return {true, "constant 5 and n_1..n_10 equal"};
}

Outcome yukawa_dual()
{
    Outcome o;
    auto b = build_frobenius(20);
    series_equal(o, "Y", yukawa_from_periods(b, build_mirror_map(b)),
                 yukawa_from_solution(solve_default(quintic_system(), 20)), 20);
    if (o.passed)
        o.detail = "period and ODE routes equal through q^20";
    return o;
}

Outcome period_route_t()
{
    Outcome o;
    auto sol = solve_default(quintic_system(), 50);
    auto b = build_frobenius(50);
    auto map = build_mirror_map(b);
    auto p = t0_t4_from_periods(b, map);
    series_equal(o, "t0", p.t0, sol[0], 50);
    series_equal(o, "t4", p.t4, sol[4], 50);

    auto b20 = build_frobenius(20);
    auto map20 = build_mirror_map(b20);
    auto p20 = t0_t4_from_periods(b20, map20);
    QSeries d = p20.t4 - pow(p20.t0, 5);
    QSeries cube = -(d * d) * inv(yukawa_from_periods(b20, map20)) * Rational(1, 625);
    series_equal(o, "t5^3", pow(sol[5], 3), cube, 20);
    series_equal(o, "t6", sol[6], sol[5] * theta(sol[5], Rational(5)), 50);
    if (o.passed)
        o.detail = "t0, t4 through q^50; t5^3 through q^20; t6 = t5 theta(t5) through q^50";
    return o;
}

Outcome accessory()
{
    auto b = build_frobenius(15);
    auto acc = accessory_functions(b, build_mirror_map(b));
    auto table = lambert_extract(yukawa_from_solution(solve_default(quintic_system(), 15)));
    auto c = q31_q14_check(acc, table, 15);
    if (c.passed())
        return {true, "q31 and q14 identities hold through q^15"};
    std::string d = std::string("q31 ") + (c.q31 ? "holds" : "fails") + "; q14 ";
    if (c.q14)
        d += "holds";
    else
        d += "differs at " + qpow(c.q14_first_mismatch) +
             (c.q14_negated ? " and holds exactly with the opposite overall sign" : "");
    return {false, d};
}

Outcome jfunction()
{
    const auto &c = reference::j_coefficients();
    auto sol = solve_default(quintic_system(), 11);
    auto b = build_frobenius(11);
    auto p = t0_t4_from_periods(b, build_mirror_map(b));
    std::vector<std::pair<std::string, JExpansion>> routes = {{"ODE", j_expansion(sol)},
                                                               {"periods", j_expansion(p.t0, p.t4)}};
    const auto &[ode, per] = std::pair{routes[0].second, routes[1].second};
    bool routes_agree = ode.pole == per.pole && ode.regular.truncate(9) == per.regular.truncate(9);
    for (const auto &[name, j] : routes) {
        if (!(j.pole == Rational(1)))
            return {false, name + " pole " + j.pole.str()};
        for (int k = 0; k <= 9; ++k)
            if (!(j.regular[k] == c[static_cast<std::size_t>(k)]))
                return {false, (routes_agree ? std::string("both routes give") : name + " route gives") + " c_" +
                                   std::to_string(k) + " = " + j.regular[k].str() + ", printed " +
                                   c[static_cast<std::size_t>(k)].str()};
    }
    return {true, "pole and c_0..c_9 equal from both routes"};
}

Outcome ramanujan()
{
    Outcome o;
    auto sol = solve_default(ramanujan_system(), 50);
    series_equal(o, "t1", sol[0], divisor_eisenstein(1, 1, -24, 50), 50);
    series_equal(o, "t2", sol[1], divisor_eisenstein(2, 12, 240, 50), 50);
    series_equal(o, "t3", sol[2], divisor_eisenstein(3, 8, -504, 50), 50);
    if (o.passed)
        o.detail = "E2, 12 E4, 8 E6 through q^50";
    return o;
}

Outcome conjecture()
{
    auto rep = conjecture_check(solve_default(quintic_system(), 50), 50);
    if (rep.integral() && rep.positive())
        return {true, "integral and positive through q^50"};
    std::string d = std::string("integrality ") + (rep.integral() ? "holds" : "fails") + "; positivity " +
                    (rep.positive() ? "holds" : "fails");
    for (const auto &e : rep.entries)
        if (!e.integral || !e.positive)
            d += "; " + e.label + " at " + qpow(e.first_violation) + " (" + e.violating_value.str() + ")";
    return {false, d};
}

Outcome picard_fuchs()
{
    auto rep = pf_annihilation_check(build_frobenius(12));
    if (rep.clean())
        return {true, "psi_0..psi_3 annihilated through order 12"};
    std::ostringstream d;
    d << "first nonzero residual orders";
    for (int k : rep.first_nonzero)
        d << " " << k;
    return {false, d.str()};
}

Outcome symbolic()
{
    auto entries = run_suite("symbolic", 0, [](int n) { return solve_default(quintic_system(), n); });
    for (const auto &e : entries)
        if (!e.check.passed)
            return {false, e.check.name + ": " + e.check.detail};
    return {true, std::to_string(entries.size()) + " exact identities hold"};
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"acceptance criteria"};
    std::vector<int> expect_fail;
    app.add_option("--expect-fail", expect_fail, "criteria known to fail")->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"normalized tables at order 10", tables},
        {"instanton list", instanton_list},
        {"Yukawa dual route at order 20", yukawa_dual},
        {"period-route t0, t4, t5, t6", period_route_t},
        {"q31/q14 identities at order 15", accessory},
        {"3125j through q^9 from both routes", jfunction},
        {"Ramanujan system vs Eisenstein series at order 50", ramanujan},
        {"integrality and positivity at order 50", conjecture},
        {"Picard-Fuchs annihilation at order 12", picard_fuchs},
        {"symbolic Gauss-Manin suite", symbolic},
    };
    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("error: ") + e.what()};
        }
        int id = static_cast<int>(i) + 1;
        if (!o.passed)
            failed.insert(id);
        std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << id << " (" << criteria[i].first
                  << "): " << o.detail << "\n";
    }
    std::set<int> expected(expect_fail.begin(), expect_fail.end());
    if (failed == expected)
        return 0;
    std::cout << "failing set differs from the expected set\n";
    return 1;
}
