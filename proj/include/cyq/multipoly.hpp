#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyq/rational.hpp"

namespace cyq {

/// Variables t0..t6 plus one auxiliary formal variable (a scaling parameter or τ).
inline constexpr int kNumVars = 8;
inline constexpr int kAuxVar = 7;

/// Exponent vector packed into one word, 8 bits per variable, t0 in the top byte
/// so integer order is lexicographic order with t0 > t1 > ... > aux.
class Monomial {
public:
    constexpr Monomial() = default;
    static Monomial var(int v, int e = 1);
    static Monomial from_exponents(std::span<const int> exps);
    static constexpr Monomial from_bits(std::uint64_t b) { return Monomial(b); }

    int exponent(int v) const { return static_cast<int>((bits_ >> shift(v)) & 0xffu); }
    int total_degree() const;
    std::uint64_t bits() const { return bits_; }

    friend Monomial operator*(Monomial a, Monomial b);
    /// a / b when b divides a.
    friend std::optional<Monomial> divide(Monomial a, Monomial b);
    friend Monomial min_exponents(Monomial a, Monomial b);

    friend bool operator==(Monomial a, Monomial b) = default;
    friend auto operator<=>(Monomial a, Monomial b) { return a.bits_ <=> b.bits_; }

private:
    explicit constexpr Monomial(std::uint64_t b) : bits_(b) {}
    static constexpr int shift(int v) { return 8 * (kNumVars - 1 - v); }
    std::uint64_t bits_ = 0;
};

/// Sparse multivariate polynomial over ℚ. Terms are sorted by decreasing monomial
/// (lex), zero coefficients are never stored.
class MultiPoly {
public:
    using Term = std::pair<Monomial, Rational>;

    MultiPoly() = default;
    MultiPoly(const Rational &c);
    MultiPoly(int c) : MultiPoly(Rational(c)) {}
    static MultiPoly var(int v);
    static MultiPoly monomial(const Rational &c, Monomial m);

    const std::vector<Term> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    const Term &leading() const { return terms_.front(); }
    int degree(int v) const;
    int total_degree() const;
    /// Variables with nonzero exponent somewhere.
    std::vector<int> variables() const;

    MultiPoly &operator+=(const MultiPoly &o);
    MultiPoly &operator-=(const MultiPoly &o);
    MultiPoly &operator*=(const Rational &c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational &c) { return a *= c; }
    friend MultiPoly operator*(const Rational &c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
    MultiPoly operator-() const;
    MultiPoly pow(int e) const;

    friend bool operator==(const MultiPoly &a, const MultiPoly &b) { return a.terms_ == b.terms_; }

    MultiPoly derivative(int v) const;
    /// Full evaluation; `point` supplies one value per variable index that occurs.
    Rational evaluate(std::span<const Rational> point) const;
    /// Substitutes a value for a single variable.
    MultiPoly substitute(int v, const Rational &value) const;
    /// Substitutes polynomials for variables (nullopt keeps the variable).
    MultiPoly substitute(const std::array<std::optional<MultiPoly>, kNumVars> &values) const;
    /// Each monomial m picks up aux^{Σ w_i·e_i(m)} for t_i ↦ aux^{w_i}·t_i.
    MultiPoly scale_by_weights(std::span<const int> weights, int aux = kAuxVar) const;
    /// Whether every monomial has the same weighted degree; returns that degree.
    std::optional<int> weighted_degree(std::span<const int> weights) const;

    /// Largest monomial dividing every term (1 for the zero polynomial).
    Monomial monomial_content() const;
    MultiPoly divide_monomial(Monomial m) const;

    std::string str() const;

private:
    explicit MultiPoly(std::vector<Term> terms) : terms_(std::move(terms)) {}
    static MultiPoly from_unsorted(std::vector<Term> terms);
    friend std::optional<MultiPoly> divide_exact(const MultiPoly &a, const MultiPoly &b);
    std::vector<Term> terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a. Throws on b = 0.
std::optional<MultiPoly> divide_exact(const MultiPoly &a, const MultiPoly &b);

std::string var_name(int v);

} // namespace cyq
