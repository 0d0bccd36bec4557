#include "hsgeom/sampling.hpp"

#include <cmath>
#include <numbers>

namespace hsgeom::sampling {

Col2 random_col(RandSuite& rs, double scale) {
  return {rs.random_general(scale), rs.random_general(scale)};
}

HPoint random_hpoint(RandSuite& rs, double scale) {
  return HPoint(rs.random_halfspace_point(scale));
}

DPoint random_dpoint(RandSuite& rs, double lo, double hi) {
  return DPoint(rs.random_strict_contraction(lo, hi));
}

Block2 random_group_element_d(RandSuite& rs, double vertical_scale, double horizontal_scale) {
  return cayley_conjugate(random_group_element(rs, vertical_scale, horizontal_scale));
}

KPair random_kpair_d(RandSuite& rs) {
  const KPair base = section_delta(random_dpoint(rs));
  const CMat u = rs.random_unitary();
  return KPair(Model::D, base.x1() * u, base.x2() * u);
}

KPair random_kpair_h(RandSuite& rs) {
  const KPair base = section_psi(random_hpoint(rs));
  const CMat u = rs.random_unitary();
  return KPair(Model::H, base.x1() * u, base.x2() * u);
}

LieElem random_horizontal(RandSuite& rs, double scale) {
  const Block2 x = horizontal_element(rs.random_hermitian(scale), rs.random_hermitian(scale));
  return lie_split(x);
}

namespace {

CMat diag_real(const RVec& d) { return d.cast<cplx>().asDiagonal(); }

}  // namespace

GeodesicFamilyParams random_commuting_params(RandSuite& rs, double gamma_max) {
  const int n = rs.n();
  const CMat v = rs.random_unitary();
  RVec g(n), c(n);
  for (int k = 0; k < n; ++k) {
    g(k) = rs.uniform(0.0, gamma_max);
    c(k) = rs.uniform(0.3, std::numbers::pi - 0.3);
  }
  const CMat gamma = v * diag_real(g) * v.adjoint();
  const CMat chi = v * diag_real(c) * v.adjoint();
  return GeodesicFamilyParams::commuting(re_part(gamma), re_part(chi));
}

GeodesicFamilyParams random_anticommuting_params(RandSuite& rs, double scale) {
  const int n = rs.n();
  const int half = n / 2;
  CMat alpha = zeros(n);
  CMat beta = zeros(n);
  if (half > 0) {
    // Commuting A, B in a shared basis; σ_z ⊗ A and σ_x ⊗ B then anti-commute.
    RandSuite sub(rs.engine()(), half);
    const CMat v = sub.random_unitary();
    RVec da(half), db(half);
    for (int k = 0; k < half; ++k) {
      da(k) = rs.uniform(-scale, scale);
      db(k) = rs.uniform(-scale, scale);
    }
    const CMat a = v * diag_real(da) * v.adjoint();
    const CMat b = v * diag_real(db) * v.adjoint();
    alpha.topLeftCorner(half, half) = a;
    alpha.block(half, half, half, half) = -a;
    beta.block(0, half, half, half) = b;
    beta.block(half, 0, half, half) = b;
  }
  if (n % 2 == 1) beta(n - 1, n - 1) = rs.uniform(-scale, scale);
  const CMat w = rs.random_unitary();
  return GeodesicFamilyParams::anticommuting(re_part(w * alpha * w.adjoint()),
                                             re_part(w * beta * w.adjoint()));
}

}  // namespace hsgeom::sampling
