#pragma once

#include "hsgeom/block2.hpp"

namespace hsgeom {

/// Point of the half-space H = {h : Im(h) positive definite}. Only h is
/// stored; real and imaginary parts are derived on demand.
class HPoint {
 public:
  explicit HPoint(CMat h, const Tolerance& tol = {});

  const CMat& h() const { return h_; }
  CMat re() const { return re_part(h_); }
  CMat im() const { return im_part(h_); }
  int n() const { return static_cast<int>(h_.rows()); }

  static HPoint i(int n) { return HPoint(kI * identity(n)); }

 private:
  CMat h_;
};

/// Point of the disk D = {z : ‖z‖ < 1 − eps_pos}.
class DPoint {
 public:
  explicit DPoint(CMat z, const Tolerance& tol = {});

  const CMat& z() const { return z_; }
  int n() const { return static_cast<int>(z_.rows()); }

  static DPoint origin(int n) { return DPoint(zeros(n)); }

 private:
  CMat z_;
};

/// ‖θ(x, x) − 1‖ for the sphere of the given model.
double sphere_residual(Model m, const Col2& x);

/// Point (x1, x2) of the sphere K_H or K_D: x1 invertible and θ(x, x) = 1.
/// The sphere residual is checked against 1e-10·max(1, ‖x1‖² + ‖x2‖²).
class KPair {
 public:
  KPair(Model tag, CMat x1, CMat x2, const Tolerance& tol = {});

  Model tag() const { return tag_; }
  const CMat& x1() const { return x_.x1; }
  const CMat& x2() const { return x_.x2; }
  const Col2& col() const { return x_; }
  int n() const { return static_cast<int>(x_.x1.rows()); }

 private:
  Model tag_;
  Col2 x_;
};

/// x2·x1⁻¹ for a pair on K_H (resp. K_D). Throws NotOnSphere on a tag mismatch.
HPoint fibration_h(const KPair& k, const Tolerance& tol = {});
DPoint fibration_d(const KPair& k, const Tolerance& tol = {});

/// ψ(h) = (1/√2)(1, h)·Im(h)^{−1/2}.
KPair section_psi(const HPoint& h, const Tolerance& tol = {});
/// δ(z) = (1, z)(1 − z*z)^{−1/2}; the representative with positive x1.
KPair section_delta(const DPoint& z, const Tolerance& tol = {});

/// U·(x1, x2) = ((x1 + x2)/√2, i(x1 − x2)/√2): K_D → K_H.
KPair sphere_cayley(const KPair& k, const Tolerance& tol = {});

/// Left multiplication of a sphere point by a group element of the same model.
KPair act(const Block2& g, const KPair& k, const Tolerance& tol = {});

/// Möbius action g·p = (a21 + a22 p)(a11 + a12 p)⁻¹.
HPoint moebius(const Block2& g, const HPoint& h, const Tolerance& tol = {});
DPoint moebius(const Block2& g, const DPoint& z, const Tolerance& tol = {});

/// The same actions computed through a sphere lift: φ(g·section(p)).
HPoint moebius_lifted(const Block2& g, const HPoint& h, const Tolerance& tol = {});
DPoint moebius_lifted(const Block2& g, const DPoint& z, const Tolerance& tol = {});

/// Γ(h) = (1 + ih)(1 − ih)⁻¹ and Γ⁻¹(z) = i(1 − z)(1 + z)⁻¹.
DPoint cayley(const HPoint& h, const Tolerance& tol = {});
HPoint cayley_inv(const DPoint& z, const Tolerance& tol = {});

/// Borel element [[y^{−1/2}, 0],[x y^{−1/2}, y^{1/2}]] mapping i to h = x + iy.
Block2 transitivity_witness(const HPoint& h, const Tolerance& tol = {});

/// Unique element of the Borel subgroup mapping ψ(i) = (1/√2)(1, i) to k ∈ K_H.
Block2 borel_lift(const KPair& k, const Tolerance& tol = {});

/// [[x1, 0],[x2 − i(x1*)⁻¹, (x1*)⁻¹]]; satisfies b·(1, i) = (x1, x2) identically.
Block2 sigma_inverse(const KPair& k, const Tolerance& tol = {});

}  // namespace hsgeom
