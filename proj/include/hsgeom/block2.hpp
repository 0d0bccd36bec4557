#pragma once

#include <string_view>
#include <utility>

#include "hsgeom/cmat.hpp"

namespace hsgeom {

/// Element of M_2(A): a 2n×2n complex matrix read as a 2×2 block matrix.
/// Group multiplication is plain matrix multiplication.
using Block2 = Eigen::MatrixXcd;

/// Selects the form θ_H (reflection ρ_H = [[0,−i],[i,0]]) or
/// θ_D (reflection ρ_D = [[1,0],[0,−1]]).
enum class Model { H, D };

std::string_view to_string(Model m);
Model parse_model(std::string_view s);

/// Block dimension n of a 2n×2n matrix. Throws DimensionMismatch.
int block_dim(const Block2& g);

CMat a11(const Block2& g);
CMat a12(const Block2& g);
CMat a21(const Block2& g);
CMat a22(const Block2& g);
Block2 from_blocks(const CMat& b11, const CMat& b12, const CMat& b21, const CMat& b22);
Block2 block_diag(const CMat& d1, const CMat& d2);

Block2 rho(Model m, int n);
Block2 rho_h(int n);
Block2 rho_d(int n);
/// J = [[0,1],[−1,0]].
Block2 j_matrix(int n);
/// U = (1/√2)[[1,1],[i,−i]], with U ρ_D U* = ρ_H.
Block2 cayley_unitary(int n);

/// A column (x1, x2) in A².
struct Col2 {
  CMat x1;
  CMat x2;
};

Col2 apply_block(const Block2& g, const Col2& x);

/// ⟨x, y⟩ = x1*y1 + x2*y2.
CMat inner(const Col2& x, const Col2& y);
/// ω(x, y) = x2*y1 − x1*y2.
CMat omega(const Col2& x, const Col2& y);
/// θ_H(x, y) = (1/i)(x1*y2 − x2*y1);  θ_D(x, y) = x1*y1 − x2*y2.
CMat theta(Model m, const Col2& x, const Col2& y);

/// ‖ρ g* ρ g − 1‖; zero exactly on U(θ).
double membership_residual(Model m, const Block2& g);
/// g invertible and membership_residual ≤ eps_struct·max(1, ‖g‖²).
bool in_group(Model m, const Block2& g, const Tolerance& tol = {});
void require_in_group(Model m, const Block2& g, const Tolerance& tol = {});

/// Inverse of a group element via ρ g* ρ.
Block2 group_inverse(Model m, const Block2& g);

/// Borel element [[b, 0],[x, (b*)⁻¹]]; requires b invertible and b*x Hermitian.
Block2 borel(const CMat& b, const CMat& x, const Tolerance& tol = {});
/// Translation-type element [[1, τ],[0, 1]] for Hermitian τ.
Block2 t_elem(const CMat& tau, const Tolerance& tol = {});
/// g ↦ diag(g, (g*)⁻¹), a group homomorphism GL(A) → U(θ_H).
Block2 embed_invertible(const CMat& g, const Tolerance& tol = {});

/// Lie algebra element of U(θ_H) split into its J-commuting anti-Hermitian
/// (vertical) part and its J-anticommuting Hermitian (horizontal) part.
struct LieElem {
  Block2 value;
  Block2 vertical;
  Block2 horizontal;
};

/// ‖ρ_H X* ρ_H + X‖.
double lie_residual(const Block2& x);
LieElem lie_split(const Block2& x, const Tolerance& tol = {});
/// exp(vertical)·exp(horizontal), both through Hermitian functional calculus.
Block2 exp_chart(const LieElem& e, const Tolerance& tol = {});

/// Inverse chart near 1: log of the unitary polar factor plus log of the
/// positive factor. Valid when the unitary factor u satisfies ‖u − 1‖ < 2.
LieElem exp_chart_inverse(const Block2& g, const Tolerance& tol = {});

/// Builds [[α, β],[β, −α]] for Hermitian α, β.
Block2 horizontal_element(const CMat& alpha, const CMat& beta);

struct GroupPolar {
  Block2 u;
  Block2 p;
};
/// Polar factors of a group element; both stay in the group.
GroupPolar polar_in_group(Model m, const Block2& g, const Tolerance& tol = {});

/// Splits a unitary element of U(θ_D) into its diagonal blocks.
std::pair<CMat, CMat> unitary_split(const Block2& u, const Tolerance& tol = {});

/// U* g U: carries U(θ_H) to U(θ_D).
Block2 cayley_conjugate(const Block2& g);
/// U g U*: carries U(θ_D) to U(θ_H).
Block2 cayley_conjugate_inv(const Block2& g);

/// Random Lie algebra element; vertical and horizontal parts have entries
/// bounded by the given scales.
LieElem random_lie_element(RandSuite& rs, double vertical_scale, double horizontal_scale);
/// exp_chart of random_lie_element: an element of U(θ_H).
Block2 random_group_element(RandSuite& rs, double vertical_scale = 1.0,
                            double horizontal_scale = 0.3);

}  // namespace hsgeom
