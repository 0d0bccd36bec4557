#include "hsgeom/models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hsgeom {

HPoint::HPoint(CMat h, const Tolerance& tol) : h_(std::move(h)) {
  require_square_finite(h_, "half-space point");
  if (!is_positive_definite(im_part(h_), tol)) {
    throw GeometryError(ErrorKind::NotInHalfspace, "Im(h) is not positive definite");
  }
}

DPoint::DPoint(CMat z, const Tolerance& tol) : z_(std::move(z)) {
  require_square_finite(z_, "disk point");
  if (!is_contraction_strict(z_, tol)) {
    throw GeometryError(ErrorKind::NotInDisk,
                        "||z|| = " + std::to_string(spec_norm(z_)) + " is not < 1 - eps_pos");
  }
}

double sphere_residual(Model m, const Col2& x) {
  const int n = static_cast<int>(x.x1.rows());
  return spec_norm(theta(m, x, x) - identity(n));
}

namespace {

constexpr double kSphereTol = 1e-10;

double pair_scale(const Col2& x) {
  const double a = spec_norm(x.x1);
  const double b = spec_norm(x.x2);
  return std::max(1.0, a * a + b * b);
}

}  // namespace

KPair::KPair(Model tag, CMat x1, CMat x2, const Tolerance& tol)
    : tag_(tag), x_{std::move(x1), std::move(x2)} {
  require_square_finite(x_.x1, "sphere x1");
  require_same_dim(x_.x1, x_.x2, "sphere x2");
  if (!x_.x2.allFinite()) throw GeometryError(ErrorKind::InvalidParams, "sphere x2 not finite");
  if (!is_invertible(x_.x1, tol)) {
    throw GeometryError(ErrorKind::NotOnSphere, "x1 is not invertible");
  }
  const double res = sphere_residual(tag_, x_);
  if (res > kSphereTol * pair_scale(x_)) {
    throw GeometryError(ErrorKind::NotOnSphere, std::string("theta_") +
                                                    std::string(to_string(tag_)) +
                                                    "(x, x) != 1, residual " +
                                                    std::to_string(res));
  }
}

namespace {

CMat fiber_quotient(const KPair& k, Model expected, const Tolerance& tol) {
  if (k.tag() != expected) {
    throw GeometryError(ErrorKind::NotOnSphere,
                        std::string("expected a pair on K_") + std::string(to_string(expected)));
  }
  return k.x2() * checked_inverse(k.x1(), tol);
}

}  // namespace

HPoint fibration_h(const KPair& k, const Tolerance& tol) {
  return HPoint(fiber_quotient(k, Model::H, tol), tol);
}

DPoint fibration_d(const KPair& k, const Tolerance& tol) {
  return DPoint(fiber_quotient(k, Model::D, tol), tol);
}

KPair section_psi(const HPoint& h, const Tolerance& tol) {
  const CMat s = inv_sqrt_pd(h.im(), tol) / std::sqrt(2.0);
  return KPair(Model::H, s, h.h() * s, tol);
}

KPair section_delta(const DPoint& z, const Tolerance& tol) {
  const int n = z.n();
  const CMat s = inv_sqrt_pd(identity(n) - z.z().adjoint() * z.z(), tol);
  return KPair(Model::D, s, z.z() * s, tol);
}

KPair sphere_cayley(const KPair& k, const Tolerance& tol) {
  if (k.tag() != Model::D) throw GeometryError(ErrorKind::NotOnSphere, "expected a pair on K_D");
  const double r = 1.0 / std::sqrt(2.0);
  return KPair(Model::H, r * (k.x1() + k.x2()), kI * r * (k.x1() - k.x2()), tol);
}

KPair act(const Block2& g, const KPair& k, const Tolerance& tol) {
  require_in_group(k.tag(), g, tol);
  Col2 y = apply_block(g, k.col());
  return KPair(k.tag(), std::move(y.x1), std::move(y.x2), tol);
}

namespace {

CMat fraction(const Block2& g, const CMat& p, const Tolerance& tol) {
  if (block_dim(g) != p.rows()) {
    throw GeometryError(ErrorKind::DimensionMismatch, "group element and point disagree on n");
  }
  const CMat den = a11(g) + a12(g) * p;
  if (!is_invertible(den, tol)) {
    throw GeometryError(ErrorKind::NumericalBreakdown, "a11 + a12 p is not invertible");
  }
  return (a21(g) + a22(g) * p) * den.partialPivLu().inverse();
}

}  // namespace

HPoint moebius(const Block2& g, const HPoint& h, const Tolerance& tol) {
  require_in_group(Model::H, g, tol);
  return HPoint(fraction(g, h.h(), tol), tol);
}

DPoint moebius(const Block2& g, const DPoint& z, const Tolerance& tol) {
  require_in_group(Model::D, g, tol);
  return DPoint(fraction(g, z.z(), tol), tol);
}

HPoint moebius_lifted(const Block2& g, const HPoint& h, const Tolerance& tol) {
  return fibration_h(act(g, section_psi(h, tol), tol), tol);
}

DPoint moebius_lifted(const Block2& g, const DPoint& z, const Tolerance& tol) {
  return fibration_d(act(g, section_delta(z, tol), tol), tol);
}

DPoint cayley(const HPoint& h, const Tolerance& tol) {
  const CMat one = identity(h.n());
  const CMat den = one - kI * h.h();
  return DPoint((one + kI * h.h()) * checked_inverse(den, tol), tol);
}

HPoint cayley_inv(const DPoint& z, const Tolerance& tol) {
  const CMat one = identity(z.n());
  return HPoint(kI * (one - z.z()) * checked_inverse(one + z.z(), tol), tol);
}

Block2 transitivity_witness(const HPoint& h, const Tolerance& tol) {
  const CMat y = h.im();
  const CMat y_inv_half = inv_sqrt_pd(y, tol);
  const CMat y_half = sqrt_pd(y, tol);
  return from_blocks(y_inv_half, zeros(h.n()), h.re() * y_inv_half, y_half);
}

Block2 borel_lift(const KPair& k, const Tolerance& tol) {
  if (k.tag() != Model::H) throw GeometryError(ErrorKind::NotOnSphere, "expected a pair on K_H");
  const double r = std::sqrt(2.0);
  const CMat b = r * k.x1();
  const CMat b_star_inv = checked_inverse(b.adjoint(), tol);
  // b̃·(1, i)/√2 = (b/√2, (x + i(b*)⁻¹)/√2) = (x1, x2).
  const CMat x = r * k.x2() - kI * b_star_inv;
  return from_blocks(b, zeros(k.n()), x, b_star_inv);
}

Block2 sigma_inverse(const KPair& k, const Tolerance& tol) {
  const CMat x1_star_inv = checked_inverse(k.x1().adjoint(), tol);
  return from_blocks(k.x1(), zeros(k.n()), k.x2() - kI * x1_star_inv, x1_star_inv);
}

}  // namespace hsgeom
