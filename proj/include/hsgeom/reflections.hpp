#pragma once

#include "hsgeom/models.hpp"

namespace hsgeom {

/// Element of Q_ρ: a reflection ε (ε² = 1) with ρ·ε positive definite,
/// i.e. a positive/negative splitting of the form θ_ρ.
class Reflection {
 public:
  /// Validates ε² = 1 within `square_tol`·max(1, ‖ε‖²) and ρ·ε positive
  /// definite. Throws NotReflection.
  Reflection(Model tag, Block2 eps, const Tolerance& tol = {}, double square_tol = 1e-9);

  Model tag() const { return tag_; }
  const Block2& eps() const { return eps_; }
  int n() const { return block_dim(eps_); }

 private:
  Model tag_;
  Block2 eps_;
};

/// ‖ε² − 1‖.
double reflection_square_residual(const Block2& eps);

/// Rank-one θ_D-symmetric projection p_x = x x* ρ_D for x ∈ K_D.
Block2 proj_p(const KPair& k);

/// 2 p_x − 1 for any lift x of the point; independent of the lift.
Reflection phi_d_from_pair(const KPair& k, const Tolerance& tol = {});

/// Φ_D(z) by the closed block formula in z.
Reflection phi_d(const DPoint& z, const Tolerance& tol = {});
/// Φ_D⁻¹(ε) = −ε12*(1 + ε11)⁻¹.
DPoint phi_d_inv(const Reflection& e, const Tolerance& tol = {});

/// Φ_H(h) = U Φ_D(Γ(h)) U*.
Reflection phi_h(const HPoint& h, const Tolerance& tol = {});
/// Φ_H⁻¹(ε) = Γ⁻¹(Φ_D⁻¹(U* ε U)).
HPoint phi_h_inv(const Reflection& e, const Tolerance& tol = {});

/// ε ↦ ρ·ε, a positive definite element of M_2(A).
Block2 embed_q(const Reflection& e);

/// Smallest eigenvalue of ρ·ε; reported by diagnostics near the boundary.
double embed_min_eigenvalue(const Reflection& e);

/// Canonical lift Q_ρD → K_D with positive first coordinate:
/// x1 = ((1 + ε11)/2)^{1/2}, x2 = −ε12*((1 + ε11)/2)^{−1/2}/2.
KPair reflection_lift(const Reflection& e, const Tolerance& tol = {});

}  // namespace hsgeom
