#pragma once

#include <optional>

#include "hsgeom/reflections.hpp"

namespace hsgeom {

/// Positive definite element of the cone (of A or of M_2(A)).
class PosPoint {
 public:
  explicit PosPoint(CMat a, const Tolerance& tol = {});

  const CMat& a() const { return a_; }
  int dim() const { return static_cast<int>(a_.rows()); }

 private:
  CMat a_;
};

/// ‖X‖_a = ‖a^{−1/2} X a^{−1/2}‖.
double finsler_norm(const PosPoint& a, const CMat& x, const Tolerance& tol = {});

/// a^{1/2}(a^{−1/2} b a^{−1/2})^t a^{1/2}.
PosPoint geodesic_pos(const PosPoint& a, const PosPoint& b, double t, const Tolerance& tol = {});

/// exp_a(X) = a^{1/2} exp(a^{−1/2} X a^{−1/2}) a^{1/2}, equal to
/// e^{½Xa⁻¹} a e^{½Xa⁻¹}.
PosPoint exp_pos(const PosPoint& a, const CMat& x, const Tolerance& tol = {});

/// ‖log(a^{−1/2} b a^{−1/2})‖.
double dist_pos(const PosPoint& a, const PosPoint& b, const Tolerance& tol = {});

/// Distances pulled back from the cone through ρΦ.
double dist_model(const HPoint& p, const HPoint& q, const Tolerance& tol = {});
double dist_model(const DPoint& p, const DPoint& q, const Tolerance& tol = {});

/// log((1 + ‖z‖)/(1 − ‖z‖)).
double dist_d_origin(const DPoint& z);

/// Threshold on ‖ε² − 1‖ (relative to max(1, ‖ε‖²)) for mid-curve samples.
inline constexpr double kReflectionDriftTol = 1e-7;

template <class Point>
struct GeodesicSample {
  Point point;
  double drift;  // ‖ε² − 1‖ / max(1, ‖ε‖²) of the sampled reflection
};

/// Samples the model geodesic by mapping the cone geodesic between ρΦ(p)
/// and ρΦ(q) back through Φ⁻¹; does not throw on drift.
GeodesicSample<HPoint> geodesic_model_sample(const HPoint& p, const HPoint& q, double t,
                                             const Tolerance& tol = {});
GeodesicSample<DPoint> geodesic_model_sample(const DPoint& p, const DPoint& q, double t,
                                             const Tolerance& tol = {});

/// As geodesic_model_sample but throws ReflectionDrift when the sampled
/// reflection leaves Q_ρ by more than kReflectionDriftTol.
HPoint geodesic_model(const HPoint& p, const HPoint& q, double t, const Tolerance& tol = {});
DPoint geodesic_model(const DPoint& p, const DPoint& q, double t, const Tolerance& tol = {});

/// Y′ − ½(a′a⁻¹Y + Ya⁻¹a′).
CMat covariant_ambient(const PosPoint& a, const CMat& adot, const CMat& y, const CMat& ydot,
                       const Tolerance& tol = {});

/// Tangent vector ζ = χ + iΥ at a point of H; χ and Υ Hermitian.
struct HTangent {
  CMat chi;
  CMat ups;

  CMat complex() const { return chi + kI * ups; }
  static HTangent from_complex(const CMat& zeta) { return {re_part(zeta), im_part(zeta)}; }
};

/// ζ′ − Re(x′y₀⁻¹Υ + y′y₀⁻¹χ) + i·Re(x′y₀⁻¹χ − y′y₀⁻¹Υ), with Re(u) = ½(u + u*).
/// `hdot` carries (x′, y′), `zeta` carries (χ, Υ), `zetadot` carries (χ′, Υ′).
HTangent covariant_h(const HPoint& h0, const HTangent& hdot, const HTangent& zeta,
                     const HTangent& zetadot, const Tolerance& tol = {});

/// κ_i(ζ) = ½[[−Υ, χ],[χ, Υ]].
Block2 kappa_i(const HTangent& zeta, const Tolerance& tol = {});
/// d(π_i)₁(γ̃) = γ21 + γ12 + i(γ22 − γ11).
HTangent d_pi_i(const Block2& g);

/// δ(t) = e^{tX}·i for horizontal X.
HPoint geodesic_from_i(const LieElem& x, double t, const Tolerance& tol = {});

/// Parameters of the closed-form geodesic families through i.
class GeodesicFamilyParams {
 public:
  enum class Variant { Commuting, Anticommuting };

  /// α = cos(χ)γ, β = sin(χ)γ for commuting Hermitian γ ≥ 0 and χ.
  static GeodesicFamilyParams commuting(const CMat& gamma, const CMat& chi_angle,
                                        const Tolerance& tol = {});
  /// Hermitian α, β with αβ + βα = 0.
  static GeodesicFamilyParams anticommuting(const CMat& alpha, const CMat& beta,
                                            const Tolerance& tol = {});

  Variant variant() const { return variant_; }
  const CMat& alpha() const { return alpha_; }
  const CMat& beta() const { return beta_; }
  const CMat& gamma() const { return gamma_; }
  const CMat& chi_angle() const { return chi_; }
  int n() const { return static_cast<int>(alpha_.rows()); }

  /// X_h = [[α, β],[β, −α]].
  Block2 horizontal() const { return horizontal_element(alpha_, beta_); }

 private:
  Variant variant_ = Variant::Commuting;
  CMat alpha_, beta_, gamma_, chi_;
};

/// (sin(χ)sinh(2tγ) + i)(cosh(2tγ) + cos(χ)sinh(2tγ))⁻¹.
HPoint geodesic_commuting(const GeodesicFamilyParams& p, double t, const Tolerance& tol = {});
/// sinh(2tβ)cosh⁻¹(2tβ) + i·cosh⁻¹(2tβ)e^{−2tα}.
HPoint geodesic_anticommuting(const GeodesicFamilyParams& p, double t,
                              const Tolerance& tol = {});

/// Centre μ = −cos(χ)sin(χ)⁻¹ of the circle traced by a commuting geodesic;
/// empty when sin(χ) is not invertible.
std::optional<CMat> circle_center(const GeodesicFamilyParams& p, const Tolerance& tol = {});

/// ‖(Re δ − μ)² + (Im δ)² − (μ² + 1)‖.
double circle_residual(const HPoint& delta, const CMat& mu);

}  // namespace hsgeom
