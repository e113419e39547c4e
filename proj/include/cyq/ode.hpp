#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyq/multipoly.hpp"
#include "cyq/series.hpp"

namespace cyq {

/// One line den·θ(t_i) = num of a polynomial vector field in cleared-denominator form.
struct Equation {
    MultiPoly den;
    MultiPoly num;
};

/// A vector field θ(t_i) = num_i/den_i with θ = λ·q·d/dq.
///
/// `weights` and `theta_weight` encode the grading: with deg t_i = weights[i] each
/// right-hand side num_i/den_i is homogeneous of degree weights[i] + theta_weight.
struct VectorFieldInstance {
    std::string name;
    Rational lambda;
    std::vector<std::string> var_names;
    std::vector<int> weights;
    int theta_weight = 1;
    std::vector<Equation> eqs;

    int n_vars() const { return static_cast<int>(eqs.size()); }
};

/// The seven-variable system for the quintic mirror family, λ = 5.
VectorFieldInstance quintic_system();
/// The Ramanujan system for Eisenstein series, λ = 12.
VectorFieldInstance ramanujan_system();
/// "quintic" or "ramanujan"; throws UnsupportedSystem otherwise.
VectorFieldInstance system_by_name(std::string_view name);

struct Pin {
    int var;
    int order;
    Rational value;
};

struct SeedData {
    std::vector<Pin> pins;
    /// Branch predicate: these variables must have nonzero order-0 value.
    std::vector<int> nonzero_order0;
};

/// Quintic: t0 = 1/5 + 24q + ..., t4 = 0 + ..., t5,0 ≠ 0.  Ramanujan: t1 = 1 − 24q + ...
SeedData default_seed(const VectorFieldInstance &sys);

/// A completed order-0/order-1 assignment. nullopt marks a coefficient the
/// low-order equations leave undetermined on this branch.
struct Branch {
    std::vector<std::optional<Rational>> order0;
    std::vector<std::optional<Rational>> order1;
    /// Rank of the order-1 linear system in the unpinned order-1 unknowns.
    int order1_rank = 0;
    int order1_unknowns = 0;
    /// Some den_i vanishes at order 0, so the recursion for n ≥ 2 breaks down.
    bool degenerate = false;
    /// All seed predicates hold.
    bool admissible = true;
};

struct BranchAnalysis {
    /// Variables left free by the order-0 equations alone (fixed later by order 1).
    std::vector<int> free_after_order0;
    std::vector<Branch> branches;
};

/// Enumerates every solution of the order-0 and order-1 constraint systems compatible
/// with the pins. Throws NoConsistentBranch when there is none.
BranchAnalysis solve_branch_constraints(const VectorFieldInstance &sys, const SeedData &seed);

struct SeriesSolution {
    std::string system;
    std::vector<std::string> names;
    std::vector<QSeries> series;

    int order() const { return series.empty() ? -1 : series.front().order(); }
    const QSeries &operator[](int i) const { return series[static_cast<std::size_t>(i)]; }
    SeriesSolution truncate(int n) const;
};

/// Order-by-order solution through q^order on the given branch.
/// Throws DegenerateBranch, SingularOrderSystem, or NoConsistentBranch (branch incomplete).
SeriesSolution solve_qseries(const VectorFieldInstance &sys, const Branch &branch, int order);

/// The unique admissible, non-degenerate branch of the default seed, solved to `order`.
SeriesSolution solve_default(const VectorFieldInstance &sys, int order);

struct ResidualReport {
    int order = 0;
    /// Per equation: first order at which den·θ(t) − num is nonzero, or -1 if clean.
    std::vector<int> first_nonzero;
    bool clean() const;
};

/// Substitutes the series into every equation with full series products.
ResidualReport residual_check(const VectorFieldInstance &sys, const SeriesSolution &sol);

struct HomogeneityReport {
    bool homogeneous = true;
    /// Per equation: whether num_i/den_i scales by λ^{w_i + theta_weight}.
    std::vector<bool> per_equation;
};

/// Checks num_i(λ^w·t)·den_i(t) = λ^{w_i + θ-weight}·num_i(t)·den_i(λ^w·t) with λ a formal variable.
HomogeneityReport check_weighted_homogeneity(const VectorFieldInstance &sys);

/// Evaluates a polynomial at truncated series (schoolbook products).
QSeries evaluate(const MultiPoly &p, const std::vector<QSeries> &vals);

} // namespace cyq
