#include <doctest.h>

#include "cyq/errors.hpp"
#include "cyq/ode.hpp"
#include "cyq/reference.hpp"

using namespace cyq;

namespace {

// a(1 + b·Σ σ_{2k−1}(n) qⁿ) by direct divisor sums
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

const Branch &admissible_branch(const BranchAnalysis &a)
{
    for (const auto &b : a.branches)
        if (b.admissible)
            return b;
    throw std::runtime_error("no admissible branch");
}

} // namespace

TEST_CASE("quintic low-order branches")
{
    auto sys = quintic_system();
    auto a = solve_branch_constraints(sys, default_seed(sys));
    // only t5,0 survives the order-0 equations
    REQUIRE(a.free_after_order0 == std::vector<int>{5});
    REQUIRE(a.branches.size() == 2);
    std::vector<Rational> t50;
    for (const auto &b : a.branches)
        t50.push_back(*b.order0[5]);
    std::sort(t50.begin(), t50.end());
    CHECK(t50 == std::vector<Rational>{Rational(-1, 3125), Rational(0)});

    const Branch &b = admissible_branch(a);
    CHECK(*b.order0[5] == Rational(-1, 3125));
    CHECK(!b.degenerate);
    // (6/5)t00^5 + (1/3125)t00·t30 − (1/5)t40 = 0 with t00 = 1/5, t40 = 0
    Rational t00(1, 5);
    Rational t30 = -(Rational(6, 5) * t00.pow(5)) / (Rational(1, 3125) * t00);
    CHECK(*b.order0[3] == t30);
    CHECK(*b.order0[3] == Rational(-6));
    CHECK(*b.order0[1] == Rational(-25));
    CHECK(*b.order0[2] == Rational(-35));
    CHECK(*b.order0[6] == Rational(0));
    CHECK(b.order1_rank == 6);
    CHECK(b.order1_unknowns == 6);
    CHECK(*b.order1[4] == Rational(1));
    CHECK(*b.order1[5] == Rational(3, 5));

    for (const auto &other : a.branches)
        if (!other.admissible) {
            CHECK(other.degenerate);
            CHECK_THROWS_AS(solve_qseries(sys, other, 5), DegenerateBranch);
        }
}

TEST_CASE("quintic low orders")
{
    auto sys = quintic_system();
    auto sol = solve_default(sys, 3);
    CHECK(sol[0] == QSeries({Rational(1, 5), Rational(24), Rational(4200), Rational(2823000)}));
    CHECK(sol[4].truncate(2) == QSeries({Rational(0), Rational(1), Rational(-170)}));
}

TEST_CASE("quintic reproduces the normalized tables")
{
    auto sol = solve_default(quintic_system(), 10);
    for (const auto &tab : reference::quintic_tables()) {
        INFO(tab.label);
        QSeries scaled = sol[tab.var] * tab.scale;
        for (int n = 0; n <= 10; ++n)
            CHECK(scaled[n] == tab.coeffs[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("residuals and perturbation")
{
    auto sys = quintic_system();
    auto sol = solve_default(sys, 20);
    auto rep = residual_check(sys, sol);
    CHECK(rep.clean());
    CHECK(rep.order == 20);

    auto bad = sol;
    bad.series[0][5] += Rational(1);
    auto rep2 = residual_check(sys, bad);
    CHECK(!rep2.clean());
    int first = 100;
    for (int k : rep2.first_nonzero)
        if (k >= 0)
            first = std::min(first, k);
    CHECK(first <= 5);
}

TEST_CASE("solver determinism and truncation coherence")
{
    auto sys = quintic_system();
    auto a = solve_default(sys, 14);
    auto b = solve_default(sys, 14);
    CHECK(a.series == b.series);
    for (int m : {2, 5, 9})
        CHECK(a.truncate(m).series == solve_default(sys, m).series);
}

TEST_CASE("t6 = t5 · θ(t5)")
{
    auto sol = solve_default(quintic_system(), 15);
    CHECK(sol[6] == sol[5] * theta(sol[5], Rational(5)));
}

TEST_CASE("ramanujan system")
{
    auto sys = ramanujan_system();
    auto a = solve_branch_constraints(sys, default_seed(sys));
    REQUIRE(a.branches.size() == 1);
    CHECK(a.free_after_order0.empty());
    const auto &b = a.branches[0];
    CHECK(*b.order0[1] == Rational(12));
    CHECK(*b.order0[2] == Rational(8));
    CHECK(b.order1_rank == 2);

    auto sol = solve_default(sys, 50);
    CHECK(sol[0] == eisenstein(1, 1, -24, 50));
    CHECK(sol[1] == eisenstein(2, 12, 240, 50));
    CHECK(sol[2] == eisenstein(3, 8, -504, 50));
    CHECK(sol[1].truncate(2) == QSeries({Rational(12), Rational(2880), Rational(25920)}));

    SeriesSolution closed{"ramanujan", sys.var_names,
                          {eisenstein(1, 1, -24, 30), eisenstein(2, 12, 240, 30), eisenstein(3, 8, -504, 30)}};
    CHECK(residual_check(sys, closed).clean());
}

TEST_CASE("weighted homogeneity")
{
    CHECK(check_weighted_homogeneity(quintic_system()).homogeneous);
    CHECK(check_weighted_homogeneity(ramanujan_system()).homogeneous);

    auto r = ramanujan_system();
    r.weights = {1, 2, 3};
    r.theta_weight = 1;
    CHECK(check_weighted_homogeneity(r).homogeneous);

    auto q = quintic_system();
    q.weights[5] = 12;
    auto rep = check_weighted_homogeneity(q);
    CHECK(!rep.homogeneous);
}

TEST_CASE("inconsistent seeds")
{
    auto sys = quintic_system();
    SeedData seed = default_seed(sys);
    seed.pins[2].value = Rational(1); // t4,0 = 1
    CHECK_THROWS_AS(solve_branch_constraints(sys, seed), NoConsistentBranch);
    CHECK_THROWS_AS(system_by_name("k3"), UnsupportedSystem);
}
