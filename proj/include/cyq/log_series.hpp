#pragma once

#include <array>

#include "cyq/series.hpp"

namespace cyq {

/// Σ_{j=0}^{3} f_j(x)·(log x)^j / j!  with each f_j a truncated series over ℚ.
/// Log-degree is capped at 3; products that would exceed it throw LogDegreeOverflow.
class LogSeries {
public:
    static constexpr int kMaxLogDegree = 3;

    explicit LogSeries(int order = 0);
    LogSeries(const QSeries &f0); // log-free
    explicit LogSeries(std::array<QSeries, kMaxLogDegree + 1> parts);

    /// log(x) itself, at the given order.
    static LogSeries log_x(int order);

    int order() const { return parts_[0].order(); }
    const QSeries &part(int j) const { return parts_[static_cast<std::size_t>(j)]; }
    /// Highest j with f_j ≠ 0, or -1 for the zero element.
    int log_degree() const;
    bool is_zero() const { return log_degree() < 0; }

    LogSeries &operator+=(const LogSeries &o);
    LogSeries &operator-=(const LogSeries &o);
    friend LogSeries operator+(LogSeries a, const LogSeries &b) { return a += b; }
    friend LogSeries operator-(LogSeries a, const LogSeries &b) { return a -= b; }
    LogSeries operator-() const;

    friend LogSeries operator*(const LogSeries &a, const LogSeries &b);
    friend LogSeries operator*(const LogSeries &a, const QSeries &s);
    friend LogSeries operator*(const QSeries &s, const LogSeries &a) { return a * s; }
    friend LogSeries operator*(const LogSeries &a, const Rational &c);
    friend LogSeries operator/(const LogSeries &a, const QSeries &s) { return a * inv(s); }

    friend bool operator==(const LogSeries &a, const LogSeries &b) { return a.parts_ == b.parts_; }

    /// θ = x·d/dx. Termwise θ(f_j (log x)^j / j!) = θ(f_j)(log x)^j/j! + f_j (log x)^{j-1}/(j-1)!.
    LogSeries theta() const;

    /// Substitutes log x ↦ log x + s, for a log-free series s (a constant series
    /// realizes analytic continuation around x = 0 when s = 2πi is treated formally).
    LogSeries shift_log(const QSeries &s) const;

    LogSeries truncate(int n) const;

private:
    std::array<QSeries, kMaxLogDegree + 1> parts_;
};

} // namespace cyq
