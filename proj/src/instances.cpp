#include "cyq/errors.hpp"
#include "cyq/ode.hpp"

namespace cyq {

namespace {

MultiPoly t(int i, int e = 1) { return MultiPoly::var(i).pow(e); }
Rational r(long n, long d = 1) { return Rational(n, d); }

} // namespace

VectorFieldInstance quintic_system()
{
    VectorFieldInstance s;
    s.name = "quintic";
    s.lambda = 5;
    s.var_names = {"t0", "t1", "t2", "t3", "t4", "t5", "t6"};
    s.weights = {3, 6, 9, 12, 15, 11, 23};
    s.theta_weight = 1;

    MultiPoly t5 = t(5);
    MultiPoly b2 = r(-72, 5) * t(0, 8) - r(24, 3125) * t(0, 4) * t(3) - r(3, 5) * t(0, 3) * t(4) -
                   r(2, 1953125) * t(3, 2);
    MultiPoly b3 = r(12) * t(0, 4) + r(2, 625) * t(3);

    // every line is multiplied through by t5
    s.eqs = {
        {t5, r(6, 5) * t(0, 5) + r(1, 3125) * t(0) * t(3) - r(1, 5) * t(4)},
        {t5, r(-125) * t(0, 6) + t(0, 4) * t(1) + r(125) * t(0) * t(4) + r(1, 3125) * t(1) * t(3)},
        {t5, r(-1875) * t(0, 7) - r(1, 5) * t(0, 5) * t(1) + r(2) * t(0, 4) * t(2) + r(1875) * t(0, 2) * t(4) +
                 r(1, 5) * t(1) * t(4) + r(2, 3125) * t(2) * t(3)},
        {t5, r(-3125) * t(0, 8) - r(1, 5) * t(0, 5) * t(2) + r(3) * t(0, 4) * t(3) + r(3125) * t(0, 3) * t(4) +
                 r(1, 5) * t(2) * t(4) + r(3, 3125) * t(3, 2)},
        {t5, r(5) * t(0, 4) * t(4) + r(1, 625) * t(3) * t(4)},
        {t5, t(6)},
        {t5, t5 * b2 + t(6) * b3},
    };
    return s;
}

VectorFieldInstance ramanujan_system()
{
    VectorFieldInstance s;
    s.name = "ramanujan";
    s.lambda = 12;
    s.var_names = {"t1", "t2", "t3"};
    // modular weights; θ raises weight by 2
    s.weights = {2, 4, 6};
    s.theta_weight = 2;
    MultiPoly one(1);
    s.eqs = {
        {one, t(0, 2) - r(1, 12) * t(1)},
        {one, r(4) * t(0) * t(1) - r(6) * t(2)},
        {one, r(6) * t(0) * t(2) - r(1, 3) * t(1, 2)},
    };
    return s;
}

VectorFieldInstance system_by_name(std::string_view name)
{
    if (name == "quintic")
        return quintic_system();
    if (name == "ramanujan")
        return ramanujan_system();
    throw UnsupportedSystem("unknown system '" + std::string(name) + "'");
}

SeedData default_seed(const VectorFieldInstance &sys)
{
    if (sys.name == "quintic")
        return {{{0, 0, Rational(1, 5)}, {0, 1, Rational(24)}, {4, 0, Rational(0)}}, {5}};
    if (sys.name == "ramanujan")
        return {{{0, 0, Rational(1)}, {0, 1, Rational(-24)}}, {}};
    throw UnsupportedSystem("no default seed for '" + sys.name + "'");
}

} // namespace cyq
