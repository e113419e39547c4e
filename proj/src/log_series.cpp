#include "cyq/log_series.hpp"

namespace cyq {

namespace {

const long kBinom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
const long kFactorial[4] = {1, 1, 2, 6};

} // namespace

LogSeries::LogSeries(int order)
    : parts_{QSeries(order), QSeries(order), QSeries(order), QSeries(order)}
{
}

LogSeries::LogSeries(const QSeries &f0)
    : parts_{f0, QSeries(f0.order()), QSeries(f0.order()), QSeries(f0.order())}
{
}

LogSeries::LogSeries(std::array<QSeries, kMaxLogDegree + 1> parts) : parts_(std::move(parts))
{
    int n = parts_[0].order();
    for (auto &p : parts_)
        n = std::min(n, p.order());
    for (auto &p : parts_)
        p = p.truncate(n);
}

LogSeries LogSeries::log_x(int order)
{
    LogSeries r(order);
    r.parts_[1] = QSeries::constant(1, order);
    return r;
}

int LogSeries::log_degree() const
{
    for (int j = kMaxLogDegree; j >= 0; --j)
        if (!parts_[static_cast<std::size_t>(j)].is_zero())
            return j;
    return -1;
}

LogSeries &LogSeries::operator+=(const LogSeries &o)
{
    for (std::size_t j = 0; j < parts_.size(); ++j)
        parts_[j] += o.parts_[j];
    return *this;
}

LogSeries &LogSeries::operator-=(const LogSeries &o)
{
    for (std::size_t j = 0; j < parts_.size(); ++j)
        parts_[j] -= o.parts_[j];
    return *this;
}

LogSeries LogSeries::operator-() const
{
    LogSeries r = *this;
    for (auto &p : r.parts_)
        p = -p;
    return r;
}

LogSeries operator*(const LogSeries &a, const LogSeries &b)
{
    int n = std::min(a.order(), b.order());
    LogSeries r(n);
    int da = a.log_degree(), db = b.log_degree();
    if (da < 0 || db < 0)
        return r;
    if (da + db > LogSeries::kMaxLogDegree)
        throw LogDegreeOverflow("product has log-degree " + std::to_string(da + db));
    for (int i = 0; i <= da; ++i)
        for (int j = 0; j <= db; ++j)
            r.parts_[static_cast<std::size_t>(i + j)] +=
                (a.part(i) * b.part(j)) * Rational(kBinom[i + j][i]);
    return r;
}

LogSeries operator*(const LogSeries &a, const QSeries &s)
{
    LogSeries r = a;
    for (auto &p : r.parts_)
        p = p * s;
    return r;
}

LogSeries operator*(const LogSeries &a, const Rational &c)
{
    LogSeries r = a;
    for (auto &p : r.parts_)
        p *= c;
    return r;
}

LogSeries LogSeries::theta() const
{
    LogSeries r = *this;
    for (int j = 0; j <= kMaxLogDegree; ++j) {
        QSeries t = cyq::theta(parts_[static_cast<std::size_t>(j)], Rational(1));
        if (j < kMaxLogDegree)
            t += parts_[static_cast<std::size_t>(j + 1)];
        r.parts_[static_cast<std::size_t>(j)] = std::move(t);
    }
    return r;
}

LogSeries LogSeries::shift_log(const QSeries &s) const
{
    int n = std::min(order(), s.order());
    std::array<QSeries, kMaxLogDegree + 1> spow{QSeries::constant(1, n), s.truncate(n), QSeries(n), QSeries(n)};
    spow[2] = spow[1] * spow[1];
    spow[3] = spow[2] * spow[1];
    LogSeries r(n);
    for (int i = 0; i <= kMaxLogDegree; ++i)
        for (int j = i; j <= kMaxLogDegree; ++j)
            r.parts_[static_cast<std::size_t>(i)] +=
                parts_[static_cast<std::size_t>(j)] * spow[static_cast<std::size_t>(j - i)] *
                Rational(1, kFactorial[j - i]);
    return r;
}

LogSeries LogSeries::truncate(int n) const
{
    LogSeries r = *this;
    for (auto &p : r.parts_)
        p = p.truncate(n);
    return r;
}

} // namespace cyq
