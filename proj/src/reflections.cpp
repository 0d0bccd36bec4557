#include "hsgeom/reflections.hpp"

#include <algorithm>
#include <string>

namespace hsgeom {

double reflection_square_residual(const Block2& eps) {
  const auto m = eps.rows();
  return spec_norm(eps * eps - Block2::Identity(m, m));
}

Reflection::Reflection(Model tag, Block2 eps, const Tolerance& tol, double square_tol)
    : tag_(tag), eps_(std::move(eps)) {
  const int n = block_dim(eps_);
  if (!eps_.allFinite()) throw GeometryError(ErrorKind::NotReflection, "non-finite entries");
  const double en = spec_norm(eps_);
  const double sq = reflection_square_residual(eps_);
  if (sq > square_tol * std::max(1.0, en * en)) {
    throw GeometryError(ErrorKind::NotReflection, "eps^2 != 1, residual " + std::to_string(sq));
  }
  if (!is_positive_definite(rho(tag_, n) * eps_, tol)) {
    throw GeometryError(ErrorKind::NotReflection, "rho*eps is not positive definite");
  }
}

Block2 proj_p(const KPair& k) {
  if (k.tag() != Model::D) throw GeometryError(ErrorKind::NotOnSphere, "expected a pair on K_D");
  const int n = k.n();
  Block2 col(2 * n, n);
  col << k.x1(), k.x2();
  return col * col.adjoint() * rho_d(n);
}

Reflection phi_d_from_pair(const KPair& k, const Tolerance& tol) {
  const int n = k.n();
  return Reflection(Model::D, 2.0 * proj_p(k) - Block2::Identity(2 * n, 2 * n), tol);
}

Reflection phi_d(const DPoint& z, const Tolerance& tol) {
  const int n = z.n();
  const CMat one = identity(n);
  const CMat& zz = z.z();
  const CMat w = checked_inverse(one - zz.adjoint() * zz, tol);  // (1 − z*z)⁻¹
  const Block2 eps = from_blocks(2.0 * w - one, -2.0 * w * zz.adjoint(), 2.0 * zz * w,
                                 -2.0 * zz * w * zz.adjoint() - one);
  return Reflection(Model::D, eps, tol);
}

DPoint phi_d_inv(const Reflection& e, const Tolerance& tol) {
  if (e.tag() != Model::D) throw GeometryError(ErrorKind::NotReflection, "expected tag D");
  const CMat e11 = a11(e.eps());
  const CMat e12 = a12(e.eps());
  const CMat one = identity(e.n());
  return DPoint(-e12.adjoint() * checked_inverse(one + e11, tol), tol);
}

Reflection phi_h(const HPoint& h, const Tolerance& tol) {
  const Reflection d = phi_d(cayley(h, tol), tol);
  return Reflection(Model::H, cayley_conjugate_inv(d.eps()), tol);
}

HPoint phi_h_inv(const Reflection& e, const Tolerance& tol) {
  if (e.tag() != Model::H) throw GeometryError(ErrorKind::NotReflection, "expected tag H");
  const Reflection d(Model::D, cayley_conjugate(e.eps()), tol);
  return cayley_inv(phi_d_inv(d, tol), tol);
}

Block2 embed_q(const Reflection& e) { return re_part(rho(e.tag(), e.n()) * e.eps()); }

double embed_min_eigenvalue(const Reflection& e) {
  Eigen::SelfAdjointEigenSolver<CMat> es(embed_q(e), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

KPair reflection_lift(const Reflection& e, const Tolerance& tol) {
  if (e.tag() != Model::D) throw GeometryError(ErrorKind::NotReflection, "expected tag D");
  const CMat one = identity(e.n());
  const CMat half = 0.5 * (one + a11(e.eps()));
  const CMat x1 = sqrt_pd(half, tol);
  const CMat x2 = -0.5 * a12(e.eps()).adjoint() * inv_sqrt_pd(half, tol);
  return KPair(Model::D, x1, x2, tol);
}

}  // namespace hsgeom
