#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>

#include <Eigen/Dense>

#include "hsgeom/errors.hpp"

namespace hsgeom {

using cplx = std::complex<double>;

/// Element of A = M_n(C). Tangent vectors and all blocks use the same type.
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;

inline constexpr cplx kI{0.0, 1.0};

struct Tolerance {
  double eps_struct = 1e-10;  // structural predicates (hermiticity, membership)
  double eps_pos = 1e-10;     // minimum eigenvalue / singular value threshold
};

CMat identity(int n);
CMat zeros(int n);

/// Throws DimensionMismatch unless `a` is square with n >= 1, and
/// InvalidParams if any entry is NaN or infinite.
void require_square_finite(const CMat& a, std::string_view what = "matrix");
void require_same_dim(const CMat& a, const CMat& b, std::string_view what = "operands");

double spec_norm(const CMat& a);
double min_singular_value(const CMat& a);

/// Real part ½(a + a*) and imaginary part (1/2i)(a − a*); both Hermitian.
CMat re_part(const CMat& a);
CMat im_part(const CMat& a);

bool is_hermitian(const CMat& a, const Tolerance& tol = {});
bool is_positive_definite(const CMat& a, const Tolerance& tol = {});
bool is_contraction_strict(const CMat& a, const Tolerance& tol = {});
bool is_invertible(const CMat& a, const Tolerance& tol = {});
bool is_unitary(const CMat& a, double tol = 1e-10);

struct HermEig {
  RVec evals;  // ascending
  CMat evecs;  // unitary, columns are eigenvectors
};

/// Eigendecomposition of a Hermitian matrix. Throws NotHermitian when
/// ‖a − a*‖ > eps_struct·max(1, ‖a‖).
HermEig herm_eig(const CMat& a, const Tolerance& tol = {});

/// Scalar function tags accepted by fun_calc.
struct FunTag {
  enum class Kind { SqrtPd, LogPd, PowT, Exp, Cos, Sin, Cosh, Sinh, InvCosh };
  Kind kind;
  double t = 1.0;  // exponent, only used by PowT

  static FunTag sqrt_pd() { return {Kind::SqrtPd}; }
  static FunTag log_pd() { return {Kind::LogPd}; }
  static FunTag pow_t(double t) { return {Kind::PowT, t}; }
  static FunTag exp() { return {Kind::Exp}; }
  static FunTag cos() { return {Kind::Cos}; }
  static FunTag sin() { return {Kind::Sin}; }
  static FunTag cosh() { return {Kind::Cosh}; }
  static FunTag sinh() { return {Kind::Sinh}; }
  static FunTag inv_cosh() { return {Kind::InvCosh}; }

  bool needs_positive() const {
    return kind == Kind::SqrtPd || kind == Kind::LogPd || kind == Kind::PowT;
  }
};

/// V f(λ) V* for Hermitian a. Positivity-requiring tags throw
/// NotPositiveDefinite when min λ ≤ eps_pos.
CMat fun_calc(const CMat& a, FunTag f, const Tolerance& tol = {});

/// Same as fun_calc with an arbitrary real function of the spectrum.
CMat apply_real(const CMat& a, const std::function<double(double)>& f, const Tolerance& tol = {});

// Shorthands for the common tags.
CMat sqrt_pd(const CMat& a, const Tolerance& tol = {});
CMat inv_sqrt_pd(const CMat& a, const Tolerance& tol = {});
CMat log_pd(const CMat& a, const Tolerance& tol = {});
CMat pow_pd(const CMat& a, double t, const Tolerance& tol = {});
CMat exp_herm(const CMat& a, const Tolerance& tol = {});

/// exp(i·a) for Hermitian a; the result is unitary. Anti-Hermitian exponents
/// k are handled as exp_i_herm(−i·k).
CMat exp_i_herm(const CMat& a, const Tolerance& tol = {});

/// Principal skew-Hermitian logarithm of a unitary matrix (spectrum of the
/// result in i·(−π, π]). Uses the complex Schur form, which is diagonal for
/// normal input.
CMat skew_log_unitary(const CMat& u, double unitary_tol = 1e-9);

struct Polar {
  CMat u;  // unitary
  CMat p;  // (a*a)^{1/2}, positive definite
};

/// Right polar decomposition a = u·p. Throws Singular when the smallest
/// singular value is ≤ eps_pos.
Polar polar(const CMat& a, const Tolerance& tol = {});

/// Inverse with an invertibility check; throws Singular.
CMat checked_inverse(const CMat& a, const Tolerance& tol = {});

/// Seeded generator of test matrices. Deterministic for a given seed.
class RandSuite {
 public:
  RandSuite(std::uint64_t seed, int n);

  int n() const { return n_; }
  std::mt19937_64& engine() { return eng_; }

  double uniform(double lo, double hi);

  /// Entries (real and imaginary parts) uniform in [−scale, scale].
  CMat random_general(double scale = 1.0);
  /// ½(g + g*) of random_general, entries within [−scale, scale].
  CMat random_hermitian(double scale = 1.0);
  /// exp of random_hermitian(scale).
  CMat random_pd(double scale = 1.0);
  CMat random_unitary();
  /// General matrix rescaled to spectral norm uniform in [lo, hi].
  CMat random_strict_contraction(double lo = 0.1, double hi = 0.9);
  /// x + i·y with x random Hermitian, y random pd.
  CMat random_halfspace_point(double scale = 1.0);

 private:
  int n_;
  std::mt19937_64 eng_;
};

/// splitmix64 finaliser, used to derive independent per-trial seeds.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace hsgeom
