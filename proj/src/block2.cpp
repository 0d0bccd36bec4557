#include "hsgeom/block2.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hsgeom {

std::string_view to_string(Model m) { return m == Model::H ? "H" : "D"; }

Model parse_model(std::string_view s) {
  if (s == "H") return Model::H;
  if (s == "D") return Model::D;
  throw GeometryError(ErrorKind::ParseError, "model tag must be \"H\" or \"D\", got \"" +
                                                 std::string(s) + "\"");
}

int block_dim(const Block2& g) {
  if (g.rows() != g.cols() || g.rows() < 2 || g.rows() % 2 != 0) {
    throw GeometryError(ErrorKind::DimensionMismatch,
                        "block matrix must be 2n x 2n, got " + std::to_string(g.rows()) + "x" +
                            std::to_string(g.cols()));
  }
  return static_cast<int>(g.rows() / 2);
}

CMat a11(const Block2& g) {
  const int n = block_dim(g);
  return g.topLeftCorner(n, n);
}
CMat a12(const Block2& g) {
  const int n = block_dim(g);
  return g.topRightCorner(n, n);
}
CMat a21(const Block2& g) {
  const int n = block_dim(g);
  return g.bottomLeftCorner(n, n);
}
CMat a22(const Block2& g) {
  const int n = block_dim(g);
  return g.bottomRightCorner(n, n);
}

Block2 from_blocks(const CMat& b11, const CMat& b12, const CMat& b21, const CMat& b22) {
  require_square_finite(b11, "block a11");
  require_same_dim(b11, b12, "block a12");
  require_same_dim(b11, b21, "block a21");
  require_same_dim(b11, b22, "block a22");
  const auto n = b11.rows();
  Block2 g(2 * n, 2 * n);
  g << b11, b12, b21, b22;
  return g;
}

Block2 block_diag(const CMat& d1, const CMat& d2) {
  return from_blocks(d1, zeros(static_cast<int>(d1.rows())), zeros(static_cast<int>(d1.rows())),
                     d2);
}

Block2 rho_h(int n) {
  const CMat one = identity(n);
  return from_blocks(zeros(n), -kI * one, kI * one, zeros(n));
}

Block2 rho_d(int n) { return block_diag(identity(n), -identity(n)); }

Block2 rho(Model m, int n) { return m == Model::H ? rho_h(n) : rho_d(n); }

Block2 j_matrix(int n) { return from_blocks(zeros(n), identity(n), -identity(n), zeros(n)); }

Block2 cayley_unitary(int n) {
  const CMat one = identity(n);
  return from_blocks(one, one, kI * one, -kI * one) / std::sqrt(2.0);
}

Col2 apply_block(const Block2& g, const Col2& x) {
  require_same_dim(x.x1, x.x2, "pair components");
  if (block_dim(g) != x.x1.rows()) {
    throw GeometryError(ErrorKind::DimensionMismatch, "block matrix and pair disagree on n");
  }
  return {a11(g) * x.x1 + a12(g) * x.x2, a21(g) * x.x1 + a22(g) * x.x2};
}

namespace {

void require_pairs(const Col2& x, const Col2& y) {
  require_square_finite(x.x1, "pair component x1");
  require_same_dim(x.x1, x.x2, "pair component x2");
  require_same_dim(x.x1, y.x1, "pair component y1");
  require_same_dim(x.x1, y.x2, "pair component y2");
}

}  // namespace

CMat inner(const Col2& x, const Col2& y) {
  require_pairs(x, y);
  return x.x1.adjoint() * y.x1 + x.x2.adjoint() * y.x2;
}

CMat omega(const Col2& x, const Col2& y) {
  require_pairs(x, y);
  return x.x2.adjoint() * y.x1 - x.x1.adjoint() * y.x2;
}

CMat theta(Model m, const Col2& x, const Col2& y) {
  require_pairs(x, y);
  if (m == Model::H) return (x.x1.adjoint() * y.x2 - x.x2.adjoint() * y.x1) / kI;
  return x.x1.adjoint() * y.x1 - x.x2.adjoint() * y.x2;
}

double membership_residual(Model m, const Block2& g) {
  const int n = block_dim(g);
  const Block2 r = rho(m, n);
  return spec_norm(r * g.adjoint() * r * g - Block2::Identity(2 * n, 2 * n));
}

bool in_group(Model m, const Block2& g, const Tolerance& tol) {
  if (g.rows() != g.cols() || g.rows() < 2 || g.rows() % 2 != 0 || !g.allFinite()) return false;
  if (!is_invertible(g, tol)) return false;
  const double gn = spec_norm(g);
  return membership_residual(m, g) <= tol.eps_struct * std::max(1.0, gn * gn);
}

void require_in_group(Model m, const Block2& g, const Tolerance& tol) {
  block_dim(g);
  if (!in_group(m, g, tol)) {
    throw GeometryError(ErrorKind::NotInGroup,
                        std::string("not in U(theta_") + std::string(to_string(m)) +
                            "), residual " + std::to_string(membership_residual(m, g)));
  }
}

Block2 group_inverse(Model m, const Block2& g) {
  const Block2 r = rho(m, block_dim(g));
  return r * g.adjoint() * r;
}

Block2 borel(const CMat& b, const CMat& x, const Tolerance& tol) {
  require_square_finite(b, "borel b");
  require_same_dim(b, x, "borel x");
  if (!is_invertible(b, tol)) {
    throw GeometryError(ErrorKind::Singular, "borel: b is not invertible");
  }
  const CMat bx = b.adjoint() * x;
  if (spec_norm(bx - bx.adjoint()) > tol.eps_struct * std::max(1.0, spec_norm(bx))) {
    throw GeometryError(ErrorKind::NotSymmetricPair, "borel: b*x is not Hermitian");
  }
  const int n = static_cast<int>(b.rows());
  return from_blocks(b, zeros(n), x, b.adjoint().partialPivLu().inverse());
}

Block2 t_elem(const CMat& tau, const Tolerance& tol) {
  require_square_finite(tau, "t_elem tau");
  if (!is_hermitian(tau, tol)) throw GeometryError(ErrorKind::NotHermitian, "t_elem: tau");
  const int n = static_cast<int>(tau.rows());
  return from_blocks(identity(n), tau, zeros(n), identity(n));
}

Block2 embed_invertible(const CMat& g, const Tolerance& tol) {
  require_square_finite(g, "embedded element");
  if (!is_invertible(g, tol)) throw GeometryError(ErrorKind::Singular, "embed_invertible");
  return block_diag(g, g.adjoint().partialPivLu().inverse());
}

double lie_residual(const Block2& x) {
  const Block2 r = rho_h(block_dim(x));
  return spec_norm(r * x.adjoint() * r + x);
}

LieElem lie_split(const Block2& x, const Tolerance& tol) {
  const int n = block_dim(x);
  if (!x.allFinite() || lie_residual(x) > tol.eps_struct * std::max(1.0, spec_norm(x))) {
    throw GeometryError(ErrorKind::NotInLieAlgebra,
                        "rho_H X* rho_H != -X, residual " + std::to_string(lie_residual(x)));
  }
  const Block2 j = j_matrix(n);
  // J⁻¹ = −J.
  const Block2 conj = -(j * x * j);
  LieElem e;
  e.value = x;
  e.vertical = 0.5 * (x + conj);
  e.horizontal = 0.5 * (x - conj);
  // Clean rounding so each part is exactly (anti-)Hermitian.
  e.vertical = 0.5 * (e.vertical - e.vertical.adjoint());
  e.horizontal = re_part(e.horizontal);
  return e;
}

Block2 exp_chart(const LieElem& e, const Tolerance& tol) {
  block_dim(e.value);
  if (lie_residual(e.value) > tol.eps_struct * std::max(1.0, spec_norm(e.value)) ||
      spec_norm(e.vertical + e.horizontal - e.value) > 1e-12 * std::max(1.0, spec_norm(e.value))) {
    throw GeometryError(ErrorKind::NotInLieAlgebra, "exp_chart: invalid Lie element");
  }
  // vertical = i·H with H = −i·vertical Hermitian.
  const Block2 unitary = exp_i_herm(-kI * e.vertical, tol);
  const Block2 positive = exp_herm(e.horizontal, tol);
  return unitary * positive;
}

LieElem exp_chart_inverse(const Block2& g, const Tolerance& tol) {
  require_in_group(Model::H, g, tol);
  const Polar pd = polar(g, tol);
  LieElem e;
  e.vertical = skew_log_unitary(pd.u);
  e.horizontal = log_pd(pd.p, tol);
  e.value = e.vertical + e.horizontal;
  return e;
}

Block2 horizontal_element(const CMat& alpha, const CMat& beta) {
  return from_blocks(alpha, beta, beta, -alpha);
}

GroupPolar polar_in_group(Model m, const Block2& g, const Tolerance& tol) {
  require_in_group(m, g, tol);
  Polar pd = polar(g, tol);
  return {pd.u, pd.p};
}

std::pair<CMat, CMat> unitary_split(const Block2& u, const Tolerance& tol) {
  const int n = block_dim(u);
  if (!is_unitary(u, std::max(tol.eps_struct, 1e-10)) || !in_group(Model::D, u, tol)) {
    throw GeometryError(ErrorKind::NotInGroup, "unitary_split: not a unitary of U(theta_D)");
  }
  const double off = std::max(spec_norm(a12(u)), spec_norm(a21(u)));
  if (off > tol.eps_struct * std::max(1.0, static_cast<double>(n))) {
    throw GeometryError(ErrorKind::NotDiagonalUnitary,
                        "off-diagonal blocks have norm " + std::to_string(off));
  }
  return {a11(u), a22(u)};
}

Block2 cayley_conjugate(const Block2& g) {
  const Block2 uc = cayley_unitary(block_dim(g));
  return uc.adjoint() * g * uc;
}

Block2 cayley_conjugate_inv(const Block2& g) {
  const Block2 uc = cayley_unitary(block_dim(g));
  return uc * g * uc.adjoint();
}

LieElem random_lie_element(RandSuite& rs, double vertical_scale, double horizontal_scale) {
  const CMat va = kI * rs.random_hermitian(vertical_scale);
  const CMat vb = rs.random_hermitian(vertical_scale);
  const CMat alpha = rs.random_hermitian(horizontal_scale);
  const CMat beta = rs.random_hermitian(horizontal_scale);
  LieElem e;
  e.vertical = from_blocks(va, vb, -vb, va);
  e.horizontal = horizontal_element(alpha, beta);
  e.value = e.vertical + e.horizontal;
  return e;
}

Block2 random_group_element(RandSuite& rs, double vertical_scale, double horizontal_scale) {
  return exp_chart(random_lie_element(rs, vertical_scale, horizontal_scale));
}

}  // namespace hsgeom
