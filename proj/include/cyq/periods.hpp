#pragma once

#include <array>
#include <string>
#include <vector>

#include "cyq/log_series.hpp"
#include "cyq/upoly.hpp"

namespace cyq {

/// ψ_0..ψ_3 in z̃ = z/5⁵: the ε⁰..ε³ parts of Σ c_n(ε) z̃^{n+ε}, each a LogSeries
/// whose part b is g_{i−b} where g_a = Σ_n [ε^a]c_n(ε) z̃ⁿ.
struct FrobeniusBasis {
    int order = 0;
    std::array<LogSeries, 4> psi;
    /// g_0 .. g_3, the log-free parts.
    std::array<QSeries, 4> g;
    /// Σ (5m)!/(m!)⁵ z̃^m and Σ (5m)!/(m!)⁵ (Σ_{k=m+1}^{5m} 1/k) z̃^m, from their closed forms.
    QSeries psi0_closed;
    QSeries psi1_tilde;
};

/// Builds ψ_i through the ε-ring and cross-checks ψ_0 and g_1 = 5ψ̃_1 against the
/// closed forms; throws std::logic_error if the two routes ever disagree.
FrobeniusBasis build_frobenius(int order);

/// The fourth-order operator in z with d/dz, as I'''' = a1·I + a2·I' + a3·I'' + a4·I'''.
struct PicardFuchs {
    /// a_k = num[k] / den[k], k = 0..3 (a1..a4).
    std::array<UPoly, 4> num, den;
};
PicardFuchs quintic_picard_fuchs();

/// The operator cleared to Σ_k r_k(z̃)·θ(θ−1)…(θ−k+1) with polynomial r_k, θ = z̃ d/dz̃.
std::array<UPoly, 5> theta_form(const PicardFuchs &pf);

/// Applies the cleared operator to a LogSeries in z̃.
LogSeries apply_picard_fuchs(const std::array<UPoly, 5> &ops, const LogSeries &f);

struct AnnihilationReport {
    /// Per ψ_i: first order with a nonzero residual part, or -1 when clean.
    std::array<int, 4> first_nonzero{-1, -1, -1, -1};
    int order = 0;
    bool clean() const;
};
AnnihilationReport pf_annihilation_check(const FrobeniusBasis &basis);

struct MirrorMap {
    QSeries q_of_z;
    QSeries z_of_q;
};
/// q = z̃·exp(g_1/g_0) and its reversion.
MirrorMap build_mirror_map(const FrobeniusBasis &basis);

struct PeriodT0T4 {
    QSeries t0, t4;
};
/// t0 = ψ_0/5 and t4 = z̃·ψ_0⁵, both composed with z(q).
PeriodT0T4 t0_t4_from_periods(const FrobeniusBasis &basis, const MirrorMap &map);

/// Y = 5 / ((1 − 5⁵z̃)·ψ_0²) · (θ log q)^{−3}, composed with z(q).
QSeries yukawa_from_periods(const FrobeniusBasis &basis, const MirrorMap &map);

struct AccessoryFunctions {
    /// ψ_2/ψ_0 − ½(ψ_1/ψ_0)², as a series in q.
    QSeries q31;
    /// (1/3)(ψ_1/ψ_0)³ − (ψ_1/ψ_0)(ψ_2/ψ_0) + ψ_3/ψ_0 with log z̃ = log q − g_1/g_0, as a series in q.
    QSeries q14;
    /// Highest log q power left in q14 after the substitution (−1 for the zero series).
    int q14_log_degree = -1;
};
AccessoryFunctions accessory_functions(const FrobeniusBasis &basis, const MirrorMap &map);

struct MonodromyReport {
    /// "P~ = M P" when the log shift acts on the period vector by M from the left,
    /// "P~ = M^T P" for the transpose; empty when neither or both hold.
    std::string convention;
    bool passed = false;
};
/// Shifts log z̃ by a formal constant c and compares the period vector
/// P_i = c^{4−i}(i−1)!ψ_{i−1} with M·P at several rational values of c.
MonodromyReport monodromy_check(const FrobeniusBasis &basis);

} // namespace cyq
