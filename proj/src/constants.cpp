#include "cyq/constants.hpp"

namespace cyq::constants {

QMatrix intersection_psi()
{
    return {{0, 0, 0, Rational(-6, 5)}, {0, 0, Rational(2, 5), 0}, {0, Rational(-2, 5), 0, 2}, {Rational(6, 5), 0, -2, 0}};
}

QMatrix monodromy_zero()
{
    return {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
}

QMatrix monodromy_conifold()
{
    return {{1, Rational(-25, 6), 0, Rational(-5, 6)}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
}

QMatrix literature_basis_change()
{
    return {{0, Rational(25, 6), 0, Rational(5, 6)}, {Rational(25, 6), 0, Rational(5, 2), 0}, {0, 5, 0, 0}, {5, 0, 0, 0}};
}

QMatrix omega1_periods()
{
    return {{0}, {0}, {0}, {Rational(-6, 5)}};
}

QMatrix hat_intersection()
{
    return {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}};
}

} // namespace cyq::constants
