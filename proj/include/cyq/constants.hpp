#pragma once

#include "cyq/matrix.hpp"

// Constant matrices attached to the topology of the quintic mirror family.
namespace cyq::constants {

/// Intersection form ⟨δ_i, δ_j⟩ in the basis δ_1..δ_4.
QMatrix intersection_psi();
/// Monodromy around z = 0 in the basis δ_i.
QMatrix monodromy_zero();
/// Monodromy around the conifold point z = 1.
QMatrix monodromy_conifold();
/// Change of basis to the one used in the monodromy literature: C·[δ]^T.
QMatrix literature_basis_change();
/// Periods ∫_{δ_i} ω_1 at the large complex structure point, as a column.
QMatrix omega1_periods();
/// Intersection form of the normalized basis ω̂.
QMatrix hat_intersection();

} // namespace cyq::constants
