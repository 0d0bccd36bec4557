#include "hsgeom/cmat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hsgeom {

CMat identity(int n) { return CMat::Identity(n, n); }
CMat zeros(int n) { return CMat::Zero(n, n); }

void require_square_finite(const CMat& a, std::string_view what) {
  if (a.rows() < 1 || a.rows() != a.cols()) {
    throw GeometryError(ErrorKind::DimensionMismatch,
                        std::string(what) + " must be square with n >= 1, got " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (!a.allFinite()) {
    throw GeometryError(ErrorKind::InvalidParams, std::string(what) + " has non-finite entries");
  }
}

void require_same_dim(const CMat& a, const CMat& b, std::string_view what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw GeometryError(ErrorKind::DimensionMismatch,
                        std::string(what) + ": " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

double spec_norm(const CMat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMat> svd(a);
  return svd.singularValues()(0);
}

double min_singular_value(const CMat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMat> svd(a);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

CMat re_part(const CMat& a) { return 0.5 * (a + a.adjoint()); }
CMat im_part(const CMat& a) { return (a - a.adjoint()) / cplx(0.0, 2.0); }

namespace {

double hermitian_defect(const CMat& a) { return spec_norm(a - a.adjoint()); }

bool hermitian_within(const CMat& a, double eps) {
  return hermitian_defect(a) <= eps * std::max(1.0, spec_norm(a));
}

}  // namespace

bool is_hermitian(const CMat& a, const Tolerance& tol) {
  if (a.rows() != a.cols() || !a.allFinite()) return false;
  return hermitian_within(a, tol.eps_struct);
}

bool is_positive_definite(const CMat& a, const Tolerance& tol) {
  if (!is_hermitian(a, tol) || a.size() == 0) return false;
  Eigen::SelfAdjointEigenSolver<CMat> es(re_part(a), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0) > tol.eps_pos;
}

bool is_contraction_strict(const CMat& a, const Tolerance& tol) {
  if (!a.allFinite()) return false;
  return spec_norm(a) < 1.0 - tol.eps_pos;
}

bool is_invertible(const CMat& a, const Tolerance& tol) {
  if (a.rows() != a.cols() || a.size() == 0 || !a.allFinite()) return false;
  return min_singular_value(a) > tol.eps_pos;
}

bool is_unitary(const CMat& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return spec_norm(a.adjoint() * a - CMat::Identity(a.rows(), a.cols())) <= tol;
}

HermEig herm_eig(const CMat& a, const Tolerance& tol) {
  require_square_finite(a, "herm_eig input");
  if (!hermitian_within(a, tol.eps_struct)) {
    throw GeometryError(ErrorKind::NotHermitian,
                        "herm_eig input has ||a - a*|| = " + std::to_string(hermitian_defect(a)));
  }
  // Symmetrise so the solver sees an exactly Hermitian matrix.
  Eigen::SelfAdjointEigenSolver<CMat> es(re_part(a));
  if (es.info() != Eigen::Success) {
    throw GeometryError(ErrorKind::NumericalBreakdown, "eigensolver did not converge");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

namespace {

CMat reassemble(const HermEig& e, const RVec& f) {
  return e.evecs * f.cast<cplx>().asDiagonal() * e.evecs.adjoint();
}

double scalar_fn(FunTag f, double x) {
  using K = FunTag::Kind;
  switch (f.kind) {
    case K::SqrtPd: return std::sqrt(x);
    case K::LogPd: return std::log(x);
    case K::PowT: return std::pow(x, f.t);
    case K::Exp: return std::exp(x);
    case K::Cos: return std::cos(x);
    case K::Sin: return std::sin(x);
    case K::Cosh: return std::cosh(x);
    case K::Sinh: return std::sinh(x);
    case K::InvCosh: return 1.0 / std::cosh(x);
  }
  return x;
}

}  // namespace

CMat fun_calc(const CMat& a, FunTag f, const Tolerance& tol) {
  HermEig e = herm_eig(a, tol);
  if (f.needs_positive() && e.evals(0) <= tol.eps_pos) {
    throw GeometryError(ErrorKind::NotPositiveDefinite,
                        "min eigenvalue " + std::to_string(e.evals(0)) + " <= eps_pos");
  }
  RVec fv = e.evals.unaryExpr([f](double x) { return scalar_fn(f, x); });
  return reassemble(e, fv);
}

CMat apply_real(const CMat& a, const std::function<double(double)>& f, const Tolerance& tol) {
  HermEig e = herm_eig(a, tol);
  RVec fv = e.evals.unaryExpr(f);
  return reassemble(e, fv);
}

CMat sqrt_pd(const CMat& a, const Tolerance& tol) { return fun_calc(a, FunTag::sqrt_pd(), tol); }
CMat inv_sqrt_pd(const CMat& a, const Tolerance& tol) {
  return fun_calc(a, FunTag::pow_t(-0.5), tol);
}
CMat log_pd(const CMat& a, const Tolerance& tol) { return fun_calc(a, FunTag::log_pd(), tol); }
CMat pow_pd(const CMat& a, double t, const Tolerance& tol) {
  return fun_calc(a, FunTag::pow_t(t), tol);
}
CMat exp_herm(const CMat& a, const Tolerance& tol) { return fun_calc(a, FunTag::exp(), tol); }

CMat exp_i_herm(const CMat& a, const Tolerance& tol) {
  HermEig e = herm_eig(a, tol);
  Eigen::VectorXcd phases = e.evals.unaryExpr([](double x) { return std::polar(1.0, x); });
  return e.evecs * phases.asDiagonal() * e.evecs.adjoint();
}

CMat skew_log_unitary(const CMat& u, double unitary_tol) {
  require_square_finite(u, "unitary");
  if (!is_unitary(u, unitary_tol)) {
    throw GeometryError(ErrorKind::InvalidParams, "skew_log_unitary: input is not unitary");
  }
  Eigen::ComplexSchur<CMat> schur(u);
  const CMat& t = schur.matrixT();
  Eigen::VectorXcd logs(t.rows());
  for (Eigen::Index k = 0; k < t.rows(); ++k) logs(k) = cplx(0.0, std::arg(t(k, k)));
  const CMat& q = schur.matrixU();
  const CMat l = q * logs.asDiagonal() * q.adjoint();
  return 0.5 * (l - l.adjoint());
}

Polar polar(const CMat& a, const Tolerance& tol) {
  require_square_finite(a, "polar input");
  Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RVec& s = svd.singularValues();
  if (s(s.size() - 1) <= tol.eps_pos) {
    throw GeometryError(ErrorKind::Singular,
                        "smallest singular value " + std::to_string(s(s.size() - 1)));
  }
  const CMat& left = svd.matrixU();
  const CMat& right = svd.matrixV();
  CMat p = right * s.cast<cplx>().asDiagonal() * right.adjoint();
  return {left * right.adjoint(), re_part(p)};
}

CMat checked_inverse(const CMat& a, const Tolerance& tol) {
  require_square_finite(a, "inverse input");
  if (!is_invertible(a, tol)) {
    throw GeometryError(ErrorKind::Singular,
                        "smallest singular value " + std::to_string(min_singular_value(a)));
  }
  return a.partialPivLu().inverse();
}

// -- random generation -------------------------------------------------------

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RandSuite::RandSuite(std::uint64_t seed, int n) : n_(n), eng_(seed) {
  if (n < 1) throw GeometryError(ErrorKind::InvalidParams, "RandSuite needs n >= 1");
}

// Hand-rolled mapping so streams are identical across standard libraries.
double RandSuite::uniform(double lo, double hi) {
  const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

CMat RandSuite::random_general(double scale) {
  CMat g(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) g(i, j) = cplx(uniform(-scale, scale), uniform(-scale, scale));
  return g;
}

CMat RandSuite::random_hermitian(double scale) { return re_part(random_general(scale)); }

CMat RandSuite::random_pd(double scale) { return exp_herm(random_hermitian(scale)); }

CMat RandSuite::random_unitary() { return exp_i_herm(random_hermitian(3.0)); }

CMat RandSuite::random_strict_contraction(double lo, double hi) {
  CMat g = random_general();
  double nrm = spec_norm(g);
  while (nrm < 1e-6) {
    g = random_general();
    nrm = spec_norm(g);
  }
  return g * (uniform(lo, hi) / nrm);
}

CMat RandSuite::random_halfspace_point(double scale) {
  CMat x = random_hermitian(scale);
  CMat y = random_pd(scale);
  return x + kI * y;
}

}  // namespace hsgeom
