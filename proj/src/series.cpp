#include "cyq/series.hpp"

#include <sstream>

namespace cyq {

QSeries nth_root(const QSeries &a, unsigned k)
{
    if (a[0].is_zero())
        throw NonUnitConstantTerm("nth_root: constant term is zero");
    Rational c = a[0];
    Rational r = exact_root(c, k);
    QSeries unit = a * c.inverse();
    QSeries l = log(unit) * Rational(1, static_cast<long>(k));
    return exp(l) * r;
}

std::string to_string(const QSeries &s, const std::string &var)
{
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= s.order(); ++i) {
        if (s[i].is_zero())
            continue;
        std::string c = s[i].str();
        if (!first)
            os << (s[i].sign() < 0 ? " - " : " + ");
        else if (s[i].sign() < 0)
            os << "-";
        if (s[i].sign() < 0)
            c = c.substr(1);
        first = false;
        if (i == 0)
            os << c;
        else {
            if (c != "1")
                os << c << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    if (first)
        os << "0";
    os << " + O(" << var << "^" << s.order() + 1 << ")";
    return os.str();
}

} // namespace cyq
