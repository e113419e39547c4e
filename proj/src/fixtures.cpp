#include "cyq/gm_verify.hpp"

namespace cyq {

namespace {

MultiPoly t(int i, int e = 1) { return MultiPoly::var(i).pow(e); }
Rational r(long n, long d = 1) { return Rational(n, d); }
MultiRat f(const MultiPoly &num, const MultiPoly &den) { return MultiRat(num, den); }

ConnectionData build()
{
    ConnectionData d;
    MultiPoly D = t(4) - t(0, 5); // t4 − t0⁵
    MultiPoly E = t(0, 5) - t(4); // t0⁵ − t4

    for (auto &a : d.A)
        a = RatMatrix(4, 4);
    RatMatrix &A0 = d.A[0];
    A0(0, 1) = 1;
    A0(1, 2) = 1;
    A0(2, 3) = 1;
    A0(3, 0) = f(-t(0), E);
    A0(3, 1) = f(r(-15) * t(0, 2), E);
    A0(3, 2) = f(r(-25) * t(0, 3), E);
    A0(3, 3) = f(r(-10) * t(0, 4), E);

    RatMatrix &A4 = d.A[4];
    MultiPoly t4x5 = r(5) * t(4);
    A4(0, 0) = f(MultiPoly(-1), t4x5);
    A4(0, 1) = f(-t(0), t4x5);
    A4(1, 1) = f(MultiPoly(-2), t4x5);
    A4(1, 2) = f(-t(0), t4x5);
    A4(2, 2) = f(MultiPoly(-3), t4x5);
    A4(2, 3) = f(-t(0), t4x5);
    MultiPoly den5 = r(5) * t(0, 5) * t(4) - r(5) * t(4, 2);
    MultiPoly den1 = t(0, 5) * t(4) - t(4, 2);
    A4(3, 0) = f(t(0, 2), den5);
    A4(3, 1) = f(r(3) * t(0, 3), den1);
    A4(3, 2) = f(r(5) * t(0, 4), den1);
    A4(3, 3) = f(r(6) * t(0, 5) + r(4) * t(4), den5);

    d.omega = RatMatrix(4, 4);
    d.omega(0, 3) = f(MultiPoly(r(1, 625)), D);
    d.omega(1, 2) = f(MultiPoly(r(-1, 625)), D);
    d.omega(1, 3) = f(r(-1, 125) * t(0, 4), D.pow(2));
    d.omega(2, 3) = f(r(1, 125) * t(0, 3), D.pow(2));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j)
            d.omega(i, j) = -d.omega(j, i);

    d.ra = {
        r(6, 5) * t(0, 5) + r(1, 3125) * t(0) * t(3) - r(1, 5) * t(4),
        r(-125) * t(0, 6) + t(0, 4) * t(1) + r(125) * t(0) * t(4) + r(1, 3125) * t(1) * t(3),
        r(-1875) * t(0, 7) - r(1, 5) * t(0, 5) * t(1) + r(2) * t(0, 4) * t(2) + r(1875) * t(0, 2) * t(4) +
            r(1, 5) * t(1) * t(4) + r(2, 3125) * t(2) * t(3),
        r(-3125) * t(0, 8) - r(1, 5) * t(0, 5) * t(2) + r(3) * t(0, 4) * t(3) + r(3125) * t(0, 3) * t(4) +
            r(1, 5) * t(2) * t(4) + r(3, 3125) * t(3, 2),
        r(5) * t(0, 4) * t(4) + r(1, 625) * t(3) * t(4),
    };

    MultiPoly alpha_den = D * t(4);
    d.alpha = {f(r(-5) * t(4), alpha_den), 0, 0, 0, f(t(0), alpha_den)};

    d.b2 = r(-72, 5) * t(0, 8) - r(24, 3125) * t(0, 4) * t(3) - r(3, 5) * t(0, 3) * t(4) - r(2, 1953125) * t(3, 2);
    d.b3 = r(12) * t(0, 4) + r(2, 625) * t(3);
    d.b4 = r(-1, 78125) * E.pow(2);

    d.tilde = RatMatrix(4, 4);
    d.tilde(0, 0) = 1;
    d.tilde(1, 0) = -t(0, 4) - r(1, 3125) * t(3);
    d.tilde(1, 1) = r(1, 5) * t(0, 5) - r(1, 5) * t(4);
    d.tilde(2, 0) = r(-14, 5) * t(0, 8) + r(1, 15625) * t(0, 5) * t(2) - r(1, 625) * t(0, 4) * t(3) -
                    r(1, 5) * t(0, 3) * t(4) - r(1, 15625) * t(2) * t(4) - r(2, 9765625) * t(3, 2);
    d.tilde(2, 1) = r(3, 5) * t(0, 9) + r(2, 15625) * t(0, 5) * t(3) - r(3, 5) * t(0, 4) * t(4) -
                    r(2, 15625) * t(3) * t(4);
    d.tilde(2, 2) = r(1, 25) * t(0, 10) - r(2, 25) * t(0, 5) * t(4) + r(1, 25) * t(4, 2);
    // ω̃_4 = ω = t1ω1 + t2ω2 + t3ω3 + ω4/⟨ω1,ω4⟩
    d.tilde(3, 0) = t(1);
    d.tilde(3, 1) = t(2);
    d.tilde(3, 2) = t(3);
    d.tilde(3, 3) = r(625) * D;

    d.hat = RatMatrix(4, 4);
    d.hat(0, 0) = 1;
    d.hat(1, 1) = f(MultiPoly(1), t(5));
    d.hat(2, 1) = f(r(-78125) * t(6), D.pow(2));
    d.hat(2, 2) = f(r(78125) * t(5), D.pow(2));
    d.hat(3, 3) = 1;

    d.hat_intersection = {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}};
    d.hat_connection = RatMatrix(4, 4);
    d.hat_connection(0, 1) = 1;
    d.hat_connection(1, 2) = f(D.pow(2), r(78125) * t(5, 3));
    d.hat_connection(2, 3) = -1;
    return d;
}

} // namespace

const ConnectionData &quintic_connection()
{
    static const ConnectionData d = build();
    return d;
}

} // namespace cyq
