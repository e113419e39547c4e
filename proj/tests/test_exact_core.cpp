#include <doctest.h>

#include "cyq/eps.hpp"
#include "cyq/log_series.hpp"
#include "cyq/upoly.hpp"
#include "support/gen.hpp"

using namespace cyq;

namespace {

QSeries from_ints(std::initializer_list<long> v)
{
    std::vector<Rational> c;
    for (long x : v)
        c.emplace_back(x);
    return QSeries(std::move(c));
}

mpz_class factorial(unsigned long n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// c_n(ε) through its logarithm: Σ_j log(1 + 5ε/j) − 5 Σ_k log(1 + ε/k),
// expanded to ε³ and exponentiated, times the ε = 0 value (5n)!/(n!)^5.
EpsElement frobenius_oracle(int n)
{
    Rational l1, l2, l3;
    auto add = [&](const Rational &a, const Rational &w) {
        l1 += w * a;
        l2 -= w * a * a * Rational(1, 2);
        l3 += w * a * a * a * Rational(1, 3);
    };
    for (int j = 1; j <= 5 * n; ++j)
        add(Rational(5, j), Rational(1));
    for (int k = 1; k <= n; ++k)
        add(Rational(1, k), Rational(-5));
    QSeries ex = exp(QSeries({Rational(0), l1, l2, l3}));
    Rational c0(factorial(5ul * static_cast<unsigned long>(n)),
                factorial(static_cast<unsigned long>(n)) * factorial(static_cast<unsigned long>(n)) *
                    factorial(static_cast<unsigned long>(n)) * factorial(static_cast<unsigned long>(n)) *
                    factorial(static_cast<unsigned long>(n)));
    return EpsElement(c0 * ex[0], c0 * ex[1], c0 * ex[2], c0 * ex[3]);
}

} // namespace

TEST_CASE("rational arithmetic and parsing")
{
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational::parse("-14/21") == Rational(-2, 3));
    CHECK(Rational::parse("-14/21").str() == "-2/3");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(exact_root(Rational(-32, 243), 5) == Rational(-2, 3));
    CHECK_THROWS_AS(exact_root(Rational(2), 2), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK(floor(Rational(-7, 2)) == -4);
}

TEST_CASE("series inverse")
{
    QSeries one_minus_q = from_ints({1, -1, 0, 0, 0, 0});
    CHECK(inv(one_minus_q) == from_ints({1, 1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(inv(from_ints({0, 1, 2})), NonUnitConstantTerm);
}

TEST_CASE("series exp and log")
{
    QSeries q = QSeries::variable(6);
    QSeries e = exp(q);
    for (int n = 0; n <= 6; ++n)
        CHECK(e[n] == Rational(mpz_class(1), factorial(static_cast<unsigned long>(n))));
    CHECK_THROWS_AS(exp(from_ints({1, 1})), NonzeroConstantTerm);
    CHECK_THROWS_AS(log(from_ints({2, 1})), NonUnitConstantTerm);
}

TEST_CASE("series reversion")
{
    // q = z + z^2 has z = q - q^2 + 2q^3 - 5q^4 + 14q^5 (signed Catalan numbers)
    QSeries a = from_ints({0, 1, 1, 0, 0, 0});
    CHECK(revert(a) == from_ints({0, 1, -1, 2, -5, 14}));
    CHECK_THROWS_AS(revert(from_ints({0, 0, 1})), BadLowOrderTerms);
}

TEST_CASE("series properties on random inputs")
{
    for (int trial = 0; trial < 25; ++trial) {
        int n = gen::integer(1, 9);
        QSeries a = gen::series(n), b = gen::series(n), c = gen::series(n);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);

        a[0] = gen::nonzero_rational();
        CHECK(a * inv(a) == QSeries::constant(Rational(1), n));

        QSeries x = gen::series(n);
        x[0] = 0;
        QSeries y = gen::series(n);
        y[0] = 0;
        CHECK(log(exp(x)) == x);
        CHECK(exp(x + y) == exp(x) * exp(y));

        x[1] = gen::nonzero_rational();
        CHECK(compose(x, revert(x)) == QSeries::variable(n));
        CHECK(compose(revert(x), x) == QSeries::variable(n));

        // θ is a derivation
        CHECK(theta(a * b, Rational(5)) == theta(a, Rational(5)) * b + a * theta(b, Rational(5)));
    }
}

TEST_CASE("nth root")
{
    QSeries s = from_ints({32, 7, -3, 11, 2, 0, 5});
    QSeries r = nth_root(s, 5);
    CHECK(r[0] == Rational(2));
    CHECK(pow(r, 5) == s);
}

TEST_CASE("frobenius coefficients: closed form")
{
    EpsElement c1 = frobenius_coefficient(1);
    CHECK(c1[0] == Rational(120));
    CHECK(c1[1] == Rational(770));
    CHECK(c1[2] == Rational(575));
    CHECK(frobenius_coefficient(2)[0] == Rational(113400));
    auto all = frobenius_coefficients(12);
    for (int n = 0; n <= 12; ++n) {
        CHECK(all[static_cast<std::size_t>(n)] == frobenius_oracle(n));
        CHECK(all[static_cast<std::size_t>(n)] == frobenius_coefficient(n));
    }
}

TEST_CASE("eps ring inverse")
{
    EpsElement a(Rational(3), Rational(-2), Rational(1, 2), Rational(7));
    CHECK(a * a.inverse() == EpsElement(1));
    CHECK_THROWS_AS(EpsElement::eps().inverse(), NonUnitConstantTerm);
}

TEST_CASE("log series: theta and logarithm")
{
    int n = 5;
    LogSeries L = LogSeries::log_x(n);
    CHECK(L.log_degree() == 1);
    CHECK(L.theta() == LogSeries(QSeries::constant(Rational(1), n)));
    // (log x)^3 = 6 · [ (log x)^3 / 3! ]
    LogSeries L3 = L * L * L;
    CHECK(L3.log_degree() == 3);
    CHECK(L3.part(3) == QSeries::constant(Rational(6), n));
    CHECK_THROWS_AS(L3 * L, LogDegreeOverflow);
}

TEST_CASE("log series properties")
{
    for (int trial = 0; trial < 15; ++trial) {
        int n = gen::integer(2, 7);
        std::array<QSeries, 4> pa{gen::series(n), gen::series(n), QSeries(n), QSeries(n)};
        std::array<QSeries, 4> pb{gen::series(n), gen::series(n), QSeries(n), QSeries(n)};
        LogSeries a(pa), b(pb);
        CHECK((a * b).theta() == a.theta() * b + a * b.theta());

        QSeries s = gen::series(n), t = gen::series(n);
        CHECK(a.shift_log(s).shift_log(t) == a.shift_log(s + t));
        CHECK((a * b).shift_log(s) == a.shift_log(s) * b.shift_log(s));
        // a constant shift of log x commutes with θ
        QSeries c = QSeries::constant(gen::rational(), n);
        CHECK(a.shift_log(c).theta() == a.theta().shift_log(c));
    }
}

TEST_CASE("univariate rational roots")
{
    // (x - 1/3)(x + 2)^2 (5x - 7) x
    UPoly p = UPoly({Rational(-1, 3), Rational(1)}) * UPoly({Rational(2), Rational(1)}) *
              UPoly({Rational(2), Rational(1)}) * UPoly({Rational(-7), Rational(5)}) * UPoly::x();
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 4);
    CHECK(roots[0] == Rational(-2));
    CHECK(roots[1] == Rational(0));
    CHECK(roots[2] == Rational(1, 3));
    CHECK(roots[3] == Rational(7, 5));
    // x^2 - 2 has no rational roots
    CHECK(rational_roots(UPoly({Rational(-2), Rational(0), Rational(1)})).empty());
}

TEST_CASE("rational roots of random split polynomials")
{
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> rs;
        UPoly p(Rational(1));
        int k = gen::integer(1, 5);
        for (int i = 0; i < k; ++i) {
            Rational r = gen::rational(30);
            rs.push_back(r);
            p = p * UPoly({-r, Rational(1)});
        }
        // an irreducible quadratic factor should not add roots
        p = p * UPoly({Rational(3), Rational(0), Rational(1)});
        std::sort(rs.begin(), rs.end());
        rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
        CHECK(rational_roots(p) == rs);
    }
}

TEST_CASE("worked small examples")
{
    CHECK(from_ints({1, 1, 0}) * from_ints({1, -1, 0}) == from_ints({1, 0, -1}));
    CHECK(pow(from_ints({1, 120}), 2) == from_ints({1, 240}));
    CHECK(inv(QSeries::constant(Rational(2), 3)) == QSeries::constant(Rational(1, 2), 3));

    CHECK(theta(QSeries::constant(Rational(7), 4), Rational(5)).is_zero());
    CHECK(theta(from_ints({0, 1, -170}), Rational(5)) == from_ints({0, 5, -1700}));
    CHECK(theta(from_ints({0, 1}), Rational(12)) == from_ints({0, 12}));

    CHECK(exp(QSeries(4)) == QSeries::constant(Rational(1), 4));
    CHECK(exp(from_ints({0, 770, 0})) == from_ints({1, 770, 296450}));

    CHECK(revert(QSeries::variable(5)) == QSeries::variable(5));
    CHECK(revert(from_ints({0, 1, 770})).truncate(2) == from_ints({0, 1, -770}));

    CHECK(frobenius_coefficient(0) == EpsElement(1));
    EpsElement e = EpsElement::eps();
    CHECK(e * e * e * e == EpsElement(0));
    CHECK(!(e * e * e == EpsElement(0)));
}
