#pragma once

#include <cmath>
#include <complex>

#include <unsupported/Eigen/MatrixFunctions>

#include "hsgeom/cmat.hpp"

namespace test {

using hsgeom::CMat;
using hsgeom::cplx;

inline double dist(const CMat& a, const CMat& b) { return hsgeom::spec_norm(a - b); }

inline CMat diag(std::initializer_list<cplx> d) {
  CMat m = CMat::Zero(static_cast<int>(d.size()), static_cast<int>(d.size()));
  int k = 0;
  for (cplx v : d) {
    m(k, k) = v;
    ++k;
  }
  return m;
}

inline CMat mat2(cplx a, cplx b, cplx c, cplx d) {
  CMat m(2, 2);
  m << a, b, c, d;
  return m;
}

inline CMat scalar(cplx v, int n = 1) { return v * CMat::Identity(n, n); }

// Independent reference functions: Eigen's Schur-Parlett / Pade based
// matrix functions, unrelated to the eigendecomposition route.
inline CMat ref_exp(const CMat& a) { return a.exp(); }
inline CMat ref_log(const CMat& a) { return a.log(); }
inline CMat ref_sqrt(const CMat& a) { return a.sqrt(); }

// Truncated power series, used where a closed form is only available
// through non-Hermitian exponentials.
inline CMat series_exp(const CMat& a, int terms = 60) {
  CMat sum = CMat::Identity(a.rows(), a.cols());
  CMat term = sum;
  for (int k = 1; k < terms; ++k) {
    term = term * a / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

inline const CMat sigma_x() { return mat2(0, 1, 1, 0); }
inline const CMat sigma_z() { return mat2(1, 0, 0, -1); }

}  // namespace test

#include "hsgeom/errors.hpp"

namespace test {

template <class F>
bool throws_kind(F&& f, hsgeom::ErrorKind kind) {
  try {
    f();
  } catch (const hsgeom::GeometryError& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace test
