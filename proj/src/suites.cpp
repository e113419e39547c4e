#include "cyq/suites.hpp"

#include <chrono>
#include <stdexcept>

#include "cyq/enumerative.hpp"
#include "cyq/periods.hpp"
#include "cyq/reference.hpp"

namespace cyq {

namespace {

std::string qpow(int k) { return "q^" + std::to_string(k); }

// First index where two series differ, or -1.
int first_difference(const QSeries &a, const QSeries &b)
{
    int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k)
        if (!(a[k] == b[k]))
            return k;
    return a.order() == b.order() ? -1 : n + 1;
}

struct Builder {
    std::string suite;
    std::vector<ReportEntry> out;

    void add(std::string name, std::string anchor, const std::function<void(ReportEntry &)> &body)
    {
        ReportEntry e;
        e.suite = suite;
        e.check.name = std::move(name);
        e.check.anchor = std::move(anchor);
        auto start = std::chrono::steady_clock::now();
        try {
            body(e);
        } catch (const std::exception &ex) {
            e.check.passed = false;
            e.check.detail = std::string("error: ") + ex.what();
        }
        e.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (e.check.detail.empty())
            e.check.detail = e.check.passed ? "holds" : "fails";
        out.push_back(std::move(e));
    }

    // Series equality through the shorter order, with the first differing power recorded.
    void series_equal(std::string name, std::string anchor, const std::function<std::pair<QSeries, QSeries>()> &f)
    {
        add(std::move(name), std::move(anchor), [&](ReportEntry &e) {
            auto [a, b] = f();
            int k = first_difference(a, b);
            e.check.passed = k < 0;
            if (k >= 0) {
                e.first_failure = qpow(k);
                e.check.detail = k <= std::min(a.order(), b.order())
                                     ? "coefficient of " + qpow(k) + ": " + a[k].str() + " vs " + b[k].str()
                                     : "orders differ";
            } else {
                e.check.detail = "equal through " + qpow(a.order());
            }
        });
    }
};

QSeries eisenstein(int k, long a, long b, int order)
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

std::vector<ReportEntry> tables_suite(int order, const SolutionSource &source)
{
    Builder b{"tables", {}};
    int n = std::min(order, 10);
    SeriesSolution sol = source(std::max(order, 2)).truncate(std::max(n, 2));
    for (const auto &tab : reference::quintic_tables())
        b.series_equal("table " + tab.label, "normalized q-expansion table", [&] {
            QSeries printed(std::vector<Rational>(tab.coeffs.begin(), tab.coeffs.begin() + n + 1));
            return std::pair{(sol[tab.var] * tab.scale).truncate(n), printed};
        });
    b.add("instanton list", "Lambert form of the Yukawa coupling", [&](ReportEntry &e) {
        auto t = lambert_extract(yukawa_from_solution(sol).truncate(std::max(n, 1)));
        const auto &list = reference::instanton_list();
        e.check.passed = t.constant == list[0];
        for (int d = 1; d <= n && e.check.passed; ++d)
            if (!(t.n[static_cast<std::size_t>(d)] == list[static_cast<std::size_t>(d)])) {
                e.check.passed = false;
                e.first_failure = "n_" + std::to_string(d);
                e.check.detail = "n_" + std::to_string(d) + ": " + t.n[static_cast<std::size_t>(d)].str() + " vs " +
                                 list[static_cast<std::size_t>(d)].str();
            }
        if (e.check.passed)
            e.check.detail = "constant and n_1..n_" + std::to_string(n) + " equal";
    });
    return b.out;
}

std::vector<ReportEntry> oracle_suite(int order, const SolutionSource &source)
{
    Builder b{"oracle", {}};
    int n = std::max(order, 2);
    SeriesSolution sol = source(n);
    FrobeniusBasis basis = build_frobenius(n);
    MirrorMap map = build_mirror_map(basis);

    b.add("picard-fuchs annihilation", "the fourth-order operator kills psi_0..psi_3", [&](ReportEntry &e) {
        auto rep = pf_annihilation_check(basis);
        e.check.passed = rep.clean();
        for (int i = 0; i < 4 && e.first_failure.empty(); ++i)
            if (rep.first_nonzero[static_cast<std::size_t>(i)] >= 0)
                e.first_failure = "psi_" + std::to_string(i) + " " + qpow(rep.first_nonzero[static_cast<std::size_t>(i)]);
        e.check.detail = e.check.passed ? "residual zero through order " + std::to_string(rep.order) : "residual nonzero";
    });
    b.series_equal("mirror map inversion", "q(z(q)) = q",
                   [&] { return std::pair{compose(map.q_of_z, map.z_of_q), QSeries::variable(n)}; });
    auto periods = t0_t4_from_periods(basis, map);
    b.series_equal("t0 dual route", "t0 from psi_0 and the mirror map", [&] { return std::pair{periods.t0, sol[0]}; });
    b.series_equal("t4 dual route", "t4 = z psi_0^5 in q", [&] { return std::pair{periods.t4, sol[4]}; });
    QSeries y_periods = yukawa_from_periods(basis, map);
    b.series_equal("yukawa dual route", "Y from periods = -(t4-t0^5)^2/(625 t5^3)",
                   [&] { return std::pair{y_periods, yukawa_from_solution(sol)}; });
    b.series_equal("t5 cube", "t5^3 = -(t4-t0^5)^2/(625 Y)", [&] {
        QSeries d = periods.t4 - pow(periods.t0, 5);
        return std::pair{pow(sol[5], 3), -(d * d) * inv(y_periods) * Rational(1, 625)};
    });
    b.series_equal("t6 = t5 theta(t5)", "t6 = t5 theta t5",
                   [&] { return std::pair{sol[6], sol[5] * theta(sol[5], Rational(5))}; });

    JExpansion j_ode = j_expansion(sol);
    b.add("3125j dual route", "3125 t0^5/t4 from both routes", [&](ReportEntry &e) {
        JExpansion j_per = j_expansion(periods.t0, periods.t4);
        int k = first_difference(j_ode.regular, j_per.regular);
        e.check.passed = j_ode.pole == j_per.pole && k < 0;
        if (k >= 0)
            e.first_failure = qpow(k);
        e.check.detail = e.check.passed ? "equal through " + qpow(j_ode.regular.order()) : "routes differ";
    });
    b.add("3125j printed", "3125 j = 1/q + 770 + 421375 q + ...", [&](ReportEntry &e) {
        const auto &c = reference::j_coefficients();
        int m = std::min(j_ode.regular.order(), static_cast<int>(c.size()) - 1);
        e.check.passed = j_ode.pole == Rational(1);
        for (int k = 0; k <= m && e.check.passed; ++k)
            if (!(j_ode.regular[k] == c[static_cast<std::size_t>(k)])) {
                e.check.passed = false;
                e.first_failure = qpow(k);
                e.check.detail = "coefficient of " + qpow(k) + ": " + j_ode.regular[k].str() + " vs printed " +
                                 c[static_cast<std::size_t>(k)].str();
            }
        if (e.check.passed)
            e.check.detail = "pole 1 and c_0..c_" + std::to_string(m) + " equal";
    });

    auto acc = accessory_functions(basis, map);
    auto inst = lambert_extract(yukawa_from_solution(sol));
    auto qc = q31_q14_check(acc, inst, n);
    b.add("q31 identity", "psi2/psi0 - (psi1/psi0)^2/2 = (1/5) sum a_n q^n/n^2", [&](ReportEntry &e) {
        e.check.passed = qc.q31;
        e.check.detail = qc.q31 ? "holds through " + qpow(n) : "fails";
    });
    b.add("q14 identity", "(psi1/psi0)^3/3 - (psi1/psi0)(psi2/psi0) + psi3/psi0 = (2/5) sum a_n q^n/n^3",
          [&](ReportEntry &e) {
              e.check.passed = qc.q14;
              if (!qc.q14) {
                  e.first_failure = qpow(qc.q14_first_mismatch);
                  e.check.detail = qc.q14_negated ? "holds only with the opposite overall sign, -(2/5) sum a_n q^n/n^3"
                                                  : "fails";
              } else {
                  e.check.detail = "holds through " + qpow(n);
              }
          });
    b.add("monodromy", "log z -> log z + c acts on the period vector by M", [&](ReportEntry &e) {
        auto rep = monodromy_check(build_frobenius(std::min(n, 8)));
        e.check.passed = rep.passed;
        e.check.convention = rep.convention;
        e.check.detail = rep.passed ? "holds as " + rep.convention : "no unique convention";
    });
    b.add("ramanujan eisenstein", "Ramanujan system solved by E2, E4, E6", [&](ReportEntry &e) {
        auto r = solve_default(ramanujan_system(), n);
        std::array<QSeries, 3> closed = {eisenstein(1, 1, -24, n), eisenstein(2, 12, 240, n), eisenstein(3, 8, -504, n)};
        e.check.passed = true;
        for (int i = 0; i < 3 && e.check.passed; ++i) {
            int k = first_difference(r[i], closed[static_cast<std::size_t>(i)]);
            if (k >= 0) {
                e.check.passed = false;
                e.first_failure = r.names[static_cast<std::size_t>(i)] + " " + qpow(k);
            }
        }
        e.check.detail = e.check.passed ? "equal through " + qpow(n) : "differs";
    });
    return b.out;
}

std::vector<ReportEntry> conjecture_suite(int order, const SolutionSource &source)
{
    Builder b{"conjecture", {}};
    int n = std::max(order, 2);
    auto rep = conjecture_check(source(n), n);
    auto describe = [&](bool integrality, ReportEntry &e) {
        e.check.passed = true;
        for (const auto &en : rep.entries) {
            bool ok = integrality ? en.integral : en.positive;
            if (ok)
                continue;
            // earliest failure of this kind within the series
            if (e.check.passed) {
                e.check.passed = false;
                e.first_failure = en.label;
                e.check.detail = "";
            }
            e.check.detail += (e.check.detail.empty() ? "" : "; ") + en.label + " first violation at " +
                              qpow(en.first_violation) + " (" + en.violating_value.str() + ")";
        }
        if (e.check.passed)
            e.check.detail = "all seven series through " + qpow(n);
    };
    b.add("integrality", "normalized shifted series have integer coefficients",
          [&](ReportEntry &e) { describe(true, e); });
    b.add("positivity", "normalized shifted series have positive coefficients",
          [&](ReportEntry &e) { describe(false, e); });
    return b.out;
}

std::vector<ReportEntry> symbolic_suite()
{
    Builder b{"symbolic", {}};
    const std::vector<std::pair<std::string, std::function<CheckResult()>>> checks = {
        {"compatibility", [] { return verify_compatibility(); }},
        {"ra_annihilation", [] { return verify_ra_annihilation(); }},
        {"prop2_basis", [] { return verify_prop2_basis(); }},
        {"hat_basis", [] { return verify_hat_basis(); }},
        {"constant_matrices", [] { return verify_constant_matrices(); }},
        {"theorem1_algebra", [] { return verify_theorem1_algebra(); }},
        {"weighted_degrees", [] { return verify_weighted_degrees(); }},
    };
    for (const auto &[name, f] : checks)
        b.add(name, "", [&](ReportEntry &e) {
            e.check = f();
            if (!e.check.passed)
                e.first_failure = e.check.detail;
        });
    return b.out;
}

} // namespace

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names = {"tables", "oracle", "conjecture", "symbolic"};
    return names;
}

std::vector<ReportEntry> run_suite(const std::string &suite, int order, const SolutionSource &source)
{
    if (suite == "tables")
        return tables_suite(order, source);
    if (suite == "oracle")
        return oracle_suite(order, source);
    if (suite == "conjecture")
        return conjecture_suite(order, source);
    if (suite == "symbolic")
        return symbolic_suite();
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

} // namespace cyq
