#include "hsgeom/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hsgeom {

PosPoint::PosPoint(CMat a, const Tolerance& tol) : a_(std::move(a)) {
  require_square_finite(a_, "cone point");
  if (!is_positive_definite(a_, tol)) {
    throw GeometryError(ErrorKind::NotPositiveDefinite, "cone point is not positive definite");
  }
  a_ = re_part(a_);
}

namespace {

void require_hermitian(const CMat& x, const Tolerance& tol, std::string_view what) {
  require_square_finite(x, what);
  if (!is_hermitian(x, tol)) {
    throw GeometryError(ErrorKind::NotHermitian, std::string(what) + " is not Hermitian");
  }
}

// a^{−1/2} b a^{−1/2}, symmetrised.
CMat congruence(const CMat& a_inv_half, const CMat& b) {
  return re_part(a_inv_half * b * a_inv_half);
}

}  // namespace

double finsler_norm(const PosPoint& a, const CMat& x, const Tolerance& tol) {
  require_hermitian(x, tol, "tangent vector");
  require_same_dim(a.a(), x, "finsler_norm");
  const CMat s = inv_sqrt_pd(a.a(), tol);
  return spec_norm(s * x * s);
}

PosPoint geodesic_pos(const PosPoint& a, const PosPoint& b, double t, const Tolerance& tol) {
  require_same_dim(a.a(), b.a(), "geodesic_pos");
  const CMat half = sqrt_pd(a.a(), tol);
  const CMat inv_half = inv_sqrt_pd(a.a(), tol);
  const CMat inner = pow_pd(congruence(inv_half, b.a()), t, tol);
  return PosPoint(re_part(half * inner * half), tol);
}

PosPoint exp_pos(const PosPoint& a, const CMat& x, const Tolerance& tol) {
  require_hermitian(x, tol, "tangent vector");
  require_same_dim(a.a(), x, "exp_pos");
  const CMat half = sqrt_pd(a.a(), tol);
  const CMat inv_half = inv_sqrt_pd(a.a(), tol);
  const CMat inner = exp_herm(congruence(inv_half, x), tol);
  return PosPoint(re_part(half * inner * half), tol);
}

double dist_pos(const PosPoint& a, const PosPoint& b, const Tolerance& tol) {
  require_same_dim(a.a(), b.a(), "dist_pos");
  const HermEig e = herm_eig(congruence(inv_sqrt_pd(a.a(), tol), b.a()), tol);
  if (e.evals(0) <= 0.0) {
    throw GeometryError(ErrorKind::NumericalBreakdown, "congruence lost positivity");
  }
  return std::max(std::abs(std::log(e.evals(0))),
                  std::abs(std::log(e.evals(e.evals.size() - 1))));
}

double dist_model(const HPoint& p, const HPoint& q, const Tolerance& tol) {
  require_same_dim(p.h(), q.h(), "dist_model");
  return dist_pos(PosPoint(embed_q(phi_h(p, tol)), tol), PosPoint(embed_q(phi_h(q, tol)), tol),
                  tol);
}

double dist_model(const DPoint& p, const DPoint& q, const Tolerance& tol) {
  require_same_dim(p.z(), q.z(), "dist_model");
  return dist_pos(PosPoint(embed_q(phi_d(p, tol)), tol), PosPoint(embed_q(phi_d(q, tol)), tol),
                  tol);
}

double dist_d_origin(const DPoint& z) {
  const double r = spec_norm(z.z());
  return std::log((1.0 + r) / (1.0 - r));
}

namespace {

// Cone geodesic between the embedded reflections, pulled back to Q_ρ.
std::pair<Reflection, double> sample_reflection(Model m, const Reflection& e1,
                                                const Reflection& e2, double t,
                                                const Tolerance& tol) {
  const PosPoint c = geodesic_pos(PosPoint(embed_q(e1), tol), PosPoint(embed_q(e2), tol), t, tol);
  const Block2 eps = rho(m, e1.n()) * c.a();
  const double en = spec_norm(eps);
  const double drift = reflection_square_residual(eps) / std::max(1.0, en * en);
  return {Reflection(m, eps, tol, std::numeric_limits<double>::infinity()), drift};
}

void require_no_drift(double drift, double t) {
  if (drift > kReflectionDriftTol) {
    throw GeometryError(ErrorKind::ReflectionDrift,
                        "sample t=" + std::to_string(t) + " has eps^2 residual " +
                            std::to_string(drift));
  }
}

}  // namespace

GeodesicSample<HPoint> geodesic_model_sample(const HPoint& p, const HPoint& q, double t,
                                             const Tolerance& tol) {
  require_same_dim(p.h(), q.h(), "geodesic_model");
  auto [eps, drift] = sample_reflection(Model::H, phi_h(p, tol), phi_h(q, tol), t, tol);
  return {phi_h_inv(eps, tol), drift};
}

GeodesicSample<DPoint> geodesic_model_sample(const DPoint& p, const DPoint& q, double t,
                                             const Tolerance& tol) {
  require_same_dim(p.z(), q.z(), "geodesic_model");
  auto [eps, drift] = sample_reflection(Model::D, phi_d(p, tol), phi_d(q, tol), t, tol);
  return {phi_d_inv(eps, tol), drift};
}

HPoint geodesic_model(const HPoint& p, const HPoint& q, double t, const Tolerance& tol) {
  auto s = geodesic_model_sample(p, q, t, tol);
  require_no_drift(s.drift, t);
  return s.point;
}

DPoint geodesic_model(const DPoint& p, const DPoint& q, double t, const Tolerance& tol) {
  auto s = geodesic_model_sample(p, q, t, tol);
  require_no_drift(s.drift, t);
  return s.point;
}

CMat covariant_ambient(const PosPoint& a, const CMat& adot, const CMat& y, const CMat& ydot,
                       const Tolerance& tol) {
  require_hermitian(adot, tol, "curve velocity");
  require_hermitian(y, tol, "field value");
  require_hermitian(ydot, tol, "field derivative");
  const CMat a_inv = checked_inverse(a.a(), tol);
  return ydot - 0.5 * (adot * a_inv * y + y * a_inv * adot);
}

HTangent covariant_h(const HPoint& h0, const HTangent& hdot, const HTangent& zeta,
                     const HTangent& zetadot, const Tolerance& tol) {
  for (const CMat* m : {&hdot.chi, &hdot.ups, &zeta.chi, &zeta.ups, &zetadot.chi, &zetadot.ups}) {
    require_hermitian(*m, tol, "tangent component");
    require_same_dim(h0.h(), *m, "covariant_h");
  }
  const CMat y_inv = checked_inverse(h0.im(), tol);
  const CMat& xp = hdot.chi;
  const CMat& yp = hdot.ups;
  HTangent out;
  out.chi = zetadot.chi - re_part(xp * y_inv * zeta.ups + yp * y_inv * zeta.chi);
  out.ups = zetadot.ups + re_part(xp * y_inv * zeta.chi - yp * y_inv * zeta.ups);
  return out;
}

Block2 kappa_i(const HTangent& zeta, const Tolerance& tol) {
  require_hermitian(zeta.chi, tol, "chi");
  require_hermitian(zeta.ups, tol, "upsilon");
  require_same_dim(zeta.chi, zeta.ups, "kappa_i");
  return 0.5 * from_blocks(-zeta.ups, zeta.chi, zeta.chi, zeta.ups);
}

HTangent d_pi_i(const Block2& g) {
  return HTangent::from_complex(a21(g) + a12(g) + kI * (a22(g) - a11(g)));
}

HPoint geodesic_from_i(const LieElem& x, double t, const Tolerance& tol) {
  const int n = block_dim(x.value);
  if (spec_norm(x.vertical) > tol.eps_struct * std::max(1.0, spec_norm(x.value))) {
    throw GeometryError(ErrorKind::NotHorizontal, "Lie element has a vertical component");
  }
  const LieElem scaled{t * x.value, t * x.vertical, t * x.horizontal};
  return moebius(exp_chart(scaled, tol), HPoint::i(n), tol);
}

GeodesicFamilyParams GeodesicFamilyParams::commuting(const CMat& gamma, const CMat& chi_angle,
                                                     const Tolerance& tol) {
  require_square_finite(gamma, "gamma");
  require_same_dim(gamma, chi_angle, "chi_angle");
  if (!is_hermitian(gamma, tol) || !is_hermitian(chi_angle, tol)) {
    throw GeometryError(ErrorKind::InvalidParams, "gamma and chi must be Hermitian");
  }
  if (herm_eig(gamma, tol).evals(0) < -tol.eps_pos) {
    throw GeometryError(ErrorKind::InvalidParams, "gamma must be positive semidefinite");
  }
  const double scale = std::max(1.0, spec_norm(gamma) * spec_norm(chi_angle));
  if (spec_norm(gamma * chi_angle - chi_angle * gamma) > tol.eps_struct * scale) {
    throw GeometryError(ErrorKind::InvalidParams, "gamma and chi must commute");
  }
  GeodesicFamilyParams p;
  p.variant_ = Variant::Commuting;
  p.gamma_ = re_part(gamma);
  p.chi_ = re_part(chi_angle);
  p.alpha_ = re_part(fun_calc(p.chi_, FunTag::cos(), tol) * p.gamma_);
  p.beta_ = re_part(fun_calc(p.chi_, FunTag::sin(), tol) * p.gamma_);
  const double ab = std::max(1.0, spec_norm(p.alpha_) * spec_norm(p.beta_));
  if (spec_norm(p.alpha_ * p.beta_ - p.beta_ * p.alpha_) > tol.eps_struct * ab) {
    throw GeometryError(ErrorKind::InvalidParams, "alpha and beta do not commute");
  }
  return p;
}

GeodesicFamilyParams GeodesicFamilyParams::anticommuting(const CMat& alpha, const CMat& beta,
                                                         const Tolerance& tol) {
  require_square_finite(alpha, "alpha");
  require_same_dim(alpha, beta, "beta");
  if (!is_hermitian(alpha, tol) || !is_hermitian(beta, tol)) {
    throw GeometryError(ErrorKind::InvalidParams, "alpha and beta must be Hermitian");
  }
  const double ab = std::max(1.0, spec_norm(alpha) * spec_norm(beta));
  if (spec_norm(alpha * beta + beta * alpha) > tol.eps_struct * ab) {
    throw GeometryError(ErrorKind::InvalidParams, "alpha and beta must anti-commute");
  }
  GeodesicFamilyParams p;
  p.variant_ = Variant::Anticommuting;
  p.alpha_ = re_part(alpha);
  p.beta_ = re_part(beta);
  return p;
}

HPoint geodesic_commuting(const GeodesicFamilyParams& p, double t, const Tolerance& tol) {
  if (p.variant() != GeodesicFamilyParams::Variant::Commuting) {
    throw GeometryError(ErrorKind::InvalidParams, "expected commuting parameters");
  }
  const CMat arg = 2.0 * t * p.gamma();
  const CMat sh = fun_calc(arg, FunTag::sinh(), tol);
  const CMat ch = fun_calc(arg, FunTag::cosh(), tol);
  const CMat sin_chi = fun_calc(p.chi_angle(), FunTag::sin(), tol);
  const CMat cos_chi = fun_calc(p.chi_angle(), FunTag::cos(), tol);
  const CMat num = sin_chi * sh + kI * identity(p.n());
  const CMat den = ch + cos_chi * sh;
  return HPoint(num * checked_inverse(den, tol), tol);
}

HPoint geodesic_anticommuting(const GeodesicFamilyParams& p, double t, const Tolerance& tol) {
  if (p.variant() != GeodesicFamilyParams::Variant::Anticommuting) {
    throw GeometryError(ErrorKind::InvalidParams, "expected anticommuting parameters");
  }
  const CMat arg = 2.0 * t * p.beta();
  const CMat sh = fun_calc(arg, FunTag::sinh(), tol);
  const CMat sech = fun_calc(arg, FunTag::inv_cosh(), tol);
  const CMat decay = exp_herm(-2.0 * t * p.alpha(), tol);
  return HPoint(sh * sech + kI * (sech * decay), tol);
}

std::optional<CMat> circle_center(const GeodesicFamilyParams& p, const Tolerance& tol) {
  if (p.variant() != GeodesicFamilyParams::Variant::Commuting) {
    throw GeometryError(ErrorKind::InvalidParams, "circle centre needs commuting parameters");
  }
  const CMat sin_chi = fun_calc(p.chi_angle(), FunTag::sin(), tol);
  if (!is_invertible(sin_chi, tol)) return std::nullopt;
  const CMat cos_chi = fun_calc(p.chi_angle(), FunTag::cos(), tol);
  return re_part(-cos_chi * sin_chi.partialPivLu().inverse());
}

double circle_residual(const HPoint& delta, const CMat& mu) {
  const CMat shifted = delta.re() - mu;
  const CMat im = delta.im();
  return spec_norm(shifted * shifted + im * im - (mu * mu + identity(delta.n())));
}

}  // namespace hsgeom
