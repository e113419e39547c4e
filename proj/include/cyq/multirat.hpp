#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyq/multipoly.hpp"

namespace cyq {

/// Rational function num / den over ℚ in t0..t6 (+ aux).
///
/// The denominator is held as a product ∏ f_i^{e_i} of non-constant factors, each
/// normalized to leading coefficient 1; any scalar lives in the numerator. Sums use
/// the factor-wise lcm and every result is cancelled by exact trial division of the
/// numerator by its denominator factors. The factors are not guaranteed irreducible,
/// so the representation is not canonical: equality is decided by subtraction.
class MultiRat {
public:
    using Factor = std::pair<MultiPoly, int>;

    MultiRat() = default;
    MultiRat(int c) : num_(c) {}
    MultiRat(const Rational &c) : num_(c) {}
    MultiRat(MultiPoly p) : num_(std::move(p)) {}
    /// Throws DivisionByZeroPolynomial when den is zero.
    MultiRat(const MultiPoly &num, const MultiPoly &den);

    static MultiRat var(int v) { return MultiRat(MultiPoly::var(v)); }

    const MultiPoly &num() const { return num_; }
    const std::vector<Factor> &den_factors() const { return den_; }
    MultiPoly den() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    MultiRat &operator+=(const MultiRat &o) { return *this = *this + o; }
    MultiRat &operator-=(const MultiRat &o) { return *this = *this - o; }
    MultiRat &operator*=(const MultiRat &o) { return *this = *this * o; }
    MultiRat &operator/=(const MultiRat &o) { return *this = *this / o; }

    friend MultiRat operator+(const MultiRat &a, const MultiRat &b);
    friend MultiRat operator-(const MultiRat &a, const MultiRat &b);
    friend MultiRat operator*(const MultiRat &a, const MultiRat &b);
    friend MultiRat operator/(const MultiRat &a, const MultiRat &b);
    MultiRat operator-() const;
    MultiRat inverse() const;
    MultiRat pow(int e) const;

    /// a/b = c/d iff a·d − c·b = 0.
    friend bool operator==(const MultiRat &a, const MultiRat &b) { return (a - b).is_zero(); }

    MultiRat derivative(int v) const;
    /// Throws DivisionByZeroPolynomial when the denominator vanishes at the point.
    Rational evaluate(std::span<const Rational> point) const;
    MultiRat substitute(const std::array<std::optional<MultiRat>, kNumVars> &values) const;

    std::string str() const;

private:
    void cancel();
    MultiPoly num_;
    std::vector<Factor> den_;
};

inline bool is_unit(const MultiRat &r) { return !r.is_zero(); }

} // namespace cyq
