#include <doctest.h>

#include "cyq/matrix.hpp"
#include "support/gen.hpp"

using namespace cyq;

namespace {

MultiPoly t(int i) { return MultiPoly::var(i); }
MultiRat rt(int i) { return MultiRat::var(i); }

std::vector<Rational> random_point()
{
    std::vector<Rational> p;
    for (int v = 0; v < kNumVars; ++v)
        p.push_back(gen::nonzero_rational(13));
    return p;
}

} // namespace

TEST_CASE("polynomial derivative and expansion")
{
    CHECK((t(0).pow(5) - t(4)).derivative(0) == Rational(5) * t(0).pow(4));
    // b4 = -(t0^5 - t4)^2 / 5^7, term by term
    MultiPoly b4 = Rational(-1, 78125) * (t(0).pow(5) - t(4)).pow(2);
    MultiPoly expanded = Rational(-1, 78125) * t(0).pow(10) + Rational(2, 78125) * t(0).pow(5) * t(4) -
                         Rational(1, 78125) * t(4).pow(2);
    CHECK(b4 == expanded);
    CHECK(b4.terms().size() == 3);
}

TEST_CASE("rational function equality by cross multiplication")
{
    MultiPoly d = t(4) - t(0).pow(5);
    CHECK(MultiRat(d, d) == MultiRat(1));
    CHECK(MultiRat(d * t(1), d * t(2)) == MultiRat(t(1), t(2)));
    CHECK(!(MultiRat(t(1), t(2)) == MultiRat(t(2), t(1))));
    CHECK_THROWS_AS(MultiRat(t(1), MultiPoly()), DivisionByZeroPolynomial);
}

TEST_CASE("perfect powers in denominators are split")
{
    MultiPoly d = t(0).pow(5) - t(4);
    MultiRat r(MultiPoly(1), Rational(7) * d.pow(4) * t(4).pow(2));
    REQUIRE(r.den_factors().size() == 2);
    MultiRat s = r * MultiRat(d.pow(3));
    CHECK(s == MultiRat(MultiPoly(1), Rational(7) * d * t(4).pow(2)));
    CHECK(s.den().total_degree() == 7);
}

TEST_CASE("ring axioms on random polynomials")
{
    for (int trial = 0; trial < 30; ++trial) {
        MultiPoly a = gen::poly(), b = gen::poly(), c = gen::poly();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        // Leibniz and symmetry of mixed partials
        int i = gen::integer(0, 3), j = gen::integer(0, 3);
        CHECK((a * b).derivative(i) == a.derivative(i) * b + a * b.derivative(i));
        CHECK(a.derivative(i).derivative(j) == a.derivative(j).derivative(i));
        if (!b.is_zero()) {
            auto q = divide_exact(a * b, b);
            REQUIRE(q);
            CHECK(*q == a);
        }
    }
}

TEST_CASE("rational functions agree with pointwise evaluation")
{
    for (int trial = 0; trial < 20; ++trial) {
        MultiRat x(gen::poly(3, 3, 2), gen::nonzero_poly(3, 2, 2));
        MultiRat y(gen::poly(3, 3, 2), gen::nonzero_poly(3, 2, 2));
        auto p = random_point();
        try {
            Rational xv = x.evaluate(p), yv = y.evaluate(p);
            CHECK((x + y).evaluate(p) == xv + yv);
            CHECK((x * y).evaluate(p) == xv * yv);
            CHECK((x - y).evaluate(p) == xv - yv);
            if (!y.is_zero() && !yv.is_zero())
                CHECK((x / y).evaluate(p) == xv / yv);
        } catch (const DivisionByZeroPolynomial &) {
            // the random point hit a pole; nothing to compare
        }
        CHECK((x * y).derivative(1) == x.derivative(1) * y + x * y.derivative(1));
        CHECK(x.derivative(0).derivative(2) == x.derivative(2).derivative(0));
    }
}

TEST_CASE("inverse of the intersection matrix")
{
    QMatrix psi{{0, 0, 0, Rational(-6, 5)},
                {0, 0, Rational(2, 5), 0},
                {0, Rational(-2, 5), 0, 2},
                {Rational(6, 5), 0, -2, 0}};
    CHECK(inverse(psi) * psi == QMatrix::identity(4));
    CHECK(psi.transpose() == -psi);
}

TEST_CASE("Z^-1 dZ/dtau = D")
{
    MultiRat tau = rt(kAuxVar);
    RatMatrix z{{1, 0, 0, 0},
                {tau, 1, 0, 0},
                {tau * tau, Rational(2) * tau, 2, 0},
                {tau.pow(3), Rational(3) * tau * tau, Rational(6) * tau, 6}};
    RatMatrix d{{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
    CHECK(inverse(z) * derivative(z, kAuxVar) == d);
}

TEST_CASE("companion determinant")
{
    RatMatrix a{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {rt(0), rt(1), rt(2), rt(3)}};
    CHECK(det(a) == -rt(0));
    CHECK_THROWS_AS(inverse(RatMatrix{{rt(0), rt(1)}, {rt(0), rt(1)}}), SingularMatrix);
    CHECK_THROWS_AS(a * RatMatrix(3, 3), DimensionMismatch);
}

TEST_CASE("double inverse of random invertible matrices")
{
    for (int trial = 0; trial < 6; ++trial) {
        int n = gen::integer(2, 3);
        RatMatrix b(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                b(i, j) = MultiRat(gen::poly(3, 2, 2), gen::nonzero_poly(3, 1, 2));
        if (det(b).is_zero())
            continue;
        RatMatrix bi = inverse(b);
        CHECK(bi * b == RatMatrix::identity(n));
        CHECK(inverse(bi) == b);
    }
}

TEST_CASE("polynomial determinant by Bareiss matches cofactor expansion")
{
    for (int trial = 0; trial < 10; ++trial) {
        PolyMatrix m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                m(i, j) = gen::poly(3, 2, 2);
        MultiPoly cof = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                        m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                        m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        CHECK(det(m) == cof);
    }
}
