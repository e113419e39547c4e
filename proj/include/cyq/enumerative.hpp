#pragma once

#include <string>
#include <vector>

#include "cyq/ode.hpp"
#include "cyq/periods.hpp"

namespace cyq {

/// n_d for d = 1..max_degree (n[0] is unused and zero) plus the degree-0 term.
struct InstantonTable {
    Rational constant;
    std::vector<Rational> n;
    int max_degree = 0;
};

/// Y = −(t4 − t0⁵)²/(625·t5³) from the quintic solution.
QSeries yukawa_from_solution(const SeriesSolution &sol);

/// Solves a_m = Σ_{d|m} n_d·d^w for the coefficients a_m of y.
InstantonTable lambert_extract(const QSeries &y, int weight = 3);
/// constant + Σ n_d·d^w·q^d/(1 − q^d) through `order`.
QSeries lambert_compose(const InstantonTable &t, int order, int weight = 3);

struct GWTable {
    std::vector<Rational> N; ///< N[d], d = 1..max; N[0] unused
};
/// N_d = Σ_{k|d} n_{d/k}/k³.
GWTable gw_from_instanton(const InstantonTable &t);
/// n_d = Σ_{k|d} μ(k)·N_{d/k}/k³.
std::vector<Rational> instanton_from_gw(const GWTable &g);
int mobius(int n);

/// 3125·j = pole/q + regular(q).
struct JExpansion {
    Rational pole;
    QSeries regular;
};
/// 3125·t0⁵/t4 with the simple zero of t4 factored out; the regular part reaches
/// q^{min(ord t0, ord t4 − 1) − 1}. Throws BadPoleStructure unless t4 = a·q + O(q²), a ≠ 0.
JExpansion j_expansion(const QSeries &t0, const QSeries &t4);
JExpansion j_expansion(const SeriesSolution &sol);

struct ConjectureEntry {
    std::string label;
    bool integral = true;
    bool positive = true;
    /// First order n ≥ 1 failing integrality or positivity, or -1.
    int first_violation = -1;
    Rational violating_value;
};
struct ConjectureReport {
    int order = 0;
    std::vector<ConjectureEntry> entries;
    bool integral() const;
    bool positive() const;
};
/// Applies the seven normalizations and constant shifts and inspects q¹..q^order.
ConjectureReport conjecture_check(const SeriesSolution &sol, int order);

struct AccessoryCheck {
    bool q31 = false;
    bool q14 = false;
    /// q14 equals the divisor sum with the opposite overall sign.
    bool q14_negated = false;
    /// First order where the q14 comparison fails, or -1.
    int q14_first_mismatch = -1;
    bool passed() const { return q31 && q14; }
};
/// Compares q31 with (1/5)Σ a_n qⁿ/n² and q14 with (2/5)Σ a_n qⁿ/n³, a_n = Σ_{d|n} n_d d³,
/// for n = 1..order.
AccessoryCheck q31_q14_check(const AccessoryFunctions &acc, const InstantonTable &t, int order);

} // namespace cyq
