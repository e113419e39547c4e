#pragma once

#include <array>
#include <string>
#include <vector>

#include "cyq/matrix.hpp"
#include "cyq/multirat.hpp"

namespace cyq {

/// Σ_k f_k dt_k over t0..t4.
using OneForm = std::array<MultiRat, 5>;

/// Transcribed Gauss–Manin data of the five-parameter family, t0..t6 as variables.
struct ConnectionData {
    /// dt_k-component of the connection in the basis ω_1..ω_4, k = 0..4.
    std::array<RatMatrix, 5> A;
    /// ⟨ω_i, ω_j⟩.
    RatMatrix omega;
    /// Components of Ra along ∂/∂t_0 .. ∂/∂t_4.
    std::array<MultiPoly, 5> ra;
    OneForm alpha;
    MultiPoly b2, b3, b4;
    /// Rows express ω̃_1..ω̃_4 in ω_1..ω_4.
    RatMatrix tilde;
    /// Rows express ω̂_1..ω̂_4 in ω̃_1..ω̃_4.
    RatMatrix hat;
    /// The constant intersection matrix of ω̂ and the normal form of ∇ in ω̂.
    QMatrix hat_intersection;
    RatMatrix hat_connection;
};

const ConnectionData &quintic_connection();

struct CheckResult {
    std::string name;
    bool passed = false;
    /// Which convention variant succeeded, when the check tries several.
    std::string convention;
    std::string detail;
    /// The identity being checked, in words.
    std::string anchor;
};

/// Throws IdentityFails carrying the detail when the check did not pass.
void require(const CheckResult &r);

CheckResult verify_compatibility(const ConnectionData &d = quintic_connection());
CheckResult verify_ra_annihilation(const ConnectionData &d = quintic_connection());
CheckResult verify_prop2_basis(const ConnectionData &d = quintic_connection());
CheckResult verify_hat_basis(const ConnectionData &d = quintic_connection());
CheckResult verify_constant_matrices();
CheckResult verify_theorem1_algebra();
CheckResult verify_weighted_degrees(const ConnectionData &d = quintic_connection());

std::vector<CheckResult> run_symbolic_suite();

/// Connection in the ω̃ basis, one matrix per dt_k, for either reading of A.
std::array<RatMatrix, 5> tilde_connection(const ConnectionData &d, bool transpose_a = false);

} // namespace cyq
