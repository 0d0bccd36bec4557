#pragma once

#include "hsgeom/geometry.hpp"

// Seeded generators of valid inputs for property checks. Every generator
// draws from the RandSuite it is given, so a trial is reproducible from its
// seed alone.
namespace hsgeom::sampling {

Col2 random_col(RandSuite& rs, double scale = 1.0);

/// Half-space point x + i·y with x Hermitian (entries ≤ scale) and
/// y = exp(Hermitian with entries ≤ scale).
HPoint random_hpoint(RandSuite& rs, double scale = 0.5);
DPoint random_dpoint(RandSuite& rs, double lo = 0.1, double hi = 0.9);

/// Element of U(θ_D) obtained by Cayley-conjugating a random exp_chart element.
Block2 random_group_element_d(RandSuite& rs, double vertical_scale = 1.0,
                              double horizontal_scale = 0.3);

/// Random pair on K_D: δ(z)·u for a random unitary u.
KPair random_kpair_d(RandSuite& rs);
KPair random_kpair_h(RandSuite& rs);

/// Horizontal Lie element with α, β entries bounded by `scale`.
LieElem random_horizontal(RandSuite& rs, double scale);

/// γ ≥ 0 and χ with spectra in [0, gamma_max] and [0.3, π − 0.3] in a shared
/// random eigenbasis, so sin(χ) is invertible.
GeodesicFamilyParams random_commuting_params(RandSuite& rs, double gamma_max = 1.0);
/// Hermitian α, β with αβ + βα = 0 built from σ_z ⊗ A and σ_x ⊗ B blocks.
GeodesicFamilyParams random_anticommuting_params(RandSuite& rs, double scale = 0.5);

}  // namespace hsgeom::sampling
