#include "doctest.h"
#include "test_support.hpp"

#include <numbers>

#include "hsgeom/geometry.hpp"
#include "hsgeom/sampling.hpp"

using namespace hsgeom;
using test::diag;
using test::dist;
using test::mat2;
using test::scalar;
using test::throws_kind;

namespace {

// Reference cone geodesic through Eigen's sqrt/log/exp.
CMat ref_geodesic(const CMat& a, const CMat& b, double t) {
  const CMat s = test::ref_sqrt(a);
  const CMat si = s.inverse();
  return s * test::ref_exp(t * test::ref_log(si * b * si)) * s;
}

// Reference orbit e^{tX}·i with a power-series exponential.
CMat ref_orbit(const Block2& x, double t) {
  const Block2 g = test::series_exp(t * x, 80);
  return (a21(g) + a22(g) * kI) * (a11(g) + a12(g) * kI).inverse();
}

}  // namespace

TEST_CASE("finsler norm") {
  CHECK(finsler_norm(PosPoint(identity(2)), diag({1.0, -2.0})) == doctest::Approx(2.0));
  CHECK(finsler_norm(PosPoint(scalar(4)), scalar(1)) == doctest::Approx(0.25));
  RandSuite rs(1, 3);
  for (int k = 0; k < 20; ++k) {
    const PosPoint a(rs.random_pd());
    const CMat x = rs.random_hermitian();
    const CMat gi = rs.random_general().inverse();
    const PosPoint ga(gi.adjoint() * a.a() * gi);
    CHECK(finsler_norm(ga, gi.adjoint() * x * gi) ==
          doctest::Approx(finsler_norm(a, x)).epsilon(1e-9));
  }
  CHECK(throws_kind([] { finsler_norm(PosPoint(identity(2)), mat2(0, 1, 0, 0)); },
                    ErrorKind::NotHermitian));
  CHECK(throws_kind([] { PosPoint(diag({1.0, -1.0})); }, ErrorKind::NotPositiveDefinite));
}

TEST_CASE("cone geodesics") {
  const double e = std::exp(1.0);
  for (double t : {0.0, 0.3, 1.0}) {
    CHECK(dist(geodesic_pos(PosPoint(identity(2)), PosPoint(scalar(e, 2)), t).a(),
               scalar(std::exp(t), 2)) < 1e-14);
  }
  const PosPoint a(diag({1.0, 1.0})), b(diag({4.0, 9.0}));
  CHECK(dist(geodesic_pos(a, b, 0.5).a(), diag({2.0, 3.0})) < 1e-14);
  CHECK(dist(geodesic_pos(b, b, 0.7).a(), b.a()) < 1e-13);

  RandSuite rs(2, 4);
  for (int k = 0; k < 20; ++k) {
    const PosPoint p(rs.random_pd()), q(rs.random_pd());
    CHECK(dist(geodesic_pos(p, q, 0.0).a(), p.a()) < 1e-10);
    CHECK(dist(geodesic_pos(p, q, 1.0).a(), q.a()) < 1e-10);
    const double t = rs.uniform(-0.5, 1.5);
    const CMat ref = ref_geodesic(p.a(), q.a(), t);
    CHECK(dist(geodesic_pos(p, q, t).a(), ref) < 1e-10 * spec_norm(ref));
    CHECK(dist(geodesic_pos(p, q, 0.5).a(), geodesic_pos(q, p, 0.5).a()) < 1e-9);
  }
}

TEST_CASE("exp_pos") {
  RandSuite rs(3, 3);
  const PosPoint a(rs.random_pd());
  CHECK(dist(exp_pos(a, zeros(3)).a(), a.a()) < 1e-13);
  const CMat x = rs.random_hermitian();
  CHECK(dist(exp_pos(PosPoint(identity(3)), x).a(), test::ref_exp(x)) < 1e-12);
  CHECK(dist(exp_pos(PosPoint(diag({1.0, 4.0})), diag({1.0, 0.0})).a(),
             diag({std::exp(1.0), 4.0})) < 1e-14);

  for (int k = 0; k < 10; ++k) {
    const PosPoint p(rs.random_pd(0.5));
    const CMat y = rs.random_hermitian(0.5);
    const CMat ai = p.a().inverse();
    const CMat series = test::series_exp(0.5 * y * ai) * p.a() * test::series_exp(0.5 * ai * y);
    CHECK(dist(exp_pos(p, y).a(), series) < 1e-9 * spec_norm(series));
    const double h = 1e-4;
    const CMat deriv = (exp_pos(p, h * y).a() - exp_pos(p, -h * y).a()) / (2 * h);
    CHECK(dist(deriv, y) < 1e-6);
  }
}

TEST_CASE("cone distance") {
  CHECK(dist_pos(PosPoint(identity(2)), PosPoint(scalar(std::exp(1.0), 2))) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(dist_pos(PosPoint(diag({1.0, 1.0})), PosPoint(diag({4.0, 9.0}))) ==
        doctest::Approx(std::log(9.0)).epsilon(1e-14));
  RandSuite rs(4, 3);
  for (int k = 0; k < 20; ++k) {
    const PosPoint a(rs.random_pd()), b(rs.random_pd());
    const double d = dist_pos(a, b);
    CHECK(dist_pos(b, a) == doctest::Approx(d).epsilon(1e-10));
    CHECK(dist_pos(a, a) < 1e-12);
    // Independent evaluation: spectral norm of the reference logarithm.
    const CMat si = test::ref_sqrt(a.a()).inverse();
    CHECK(d == doctest::Approx(spec_norm(test::ref_log(si * b.a() * si))).epsilon(1e-10));
    const double t = rs.uniform(0.0, 1.0);
    CHECK(std::abs(dist_pos(a, geodesic_pos(a, b, t)) - t * d) < 1e-9);
  }
}

TEST_CASE("model distances") {
  CHECK(dist_model(DPoint::origin(1), DPoint(scalar(0.5))) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(dist_model(HPoint::i(2), HPoint::i(2)) < 1e-12);
  CHECK(dist_model(HPoint::i(1), HPoint(scalar(2.0 * kI))) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(dist_d_origin(DPoint::origin(2)) == 0.0);
  CHECK(dist_d_origin(DPoint(diag({0.5, 0.2}))) == doctest::Approx(std::log(3.0)));
  CHECK(dist_d_origin(DPoint(scalar(0.9))) == doctest::Approx(std::log(19.0)).epsilon(1e-13));

  // Scalar half-plane: d(h1, h2) = 2 artanh |(h1 − h2)/(h1 − conj h2)| is the
  // Poincare metric of curvature −1, the same normalisation as log 2 above.
  RandSuite rs(5, 1);
  for (int k = 0; k < 20; ++k) {
    const HPoint p = sampling::random_hpoint(rs), q = sampling::random_hpoint(rs);
    const cplx a = p.h()(0, 0), b = q.h()(0, 0);
    const double ref = 2.0 * std::atanh(std::abs((a - b) / (a - std::conj(b))));
    CHECK(dist_model(p, q) == doctest::Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("model geodesics") {
  const DPoint o = DPoint::origin(1), zq(scalar(0.5));
  const double r = (std::sqrt(3.0) - 1) / (std::sqrt(3.0) + 1);
  CHECK(dist(geodesic_model(o, zq, 0.5).z(), scalar(r)) < 1e-12);
  CHECK(dist(geodesic_model(o, zq, 0.0).z(), o.z()) < 1e-12);
  CHECK(dist(geodesic_model(o, zq, 1.0).z(), zq.z()) < 1e-12);
  CHECK(dist(geodesic_model(HPoint::i(1), HPoint(scalar(2.0 * kI)), 0.5).h(),
             scalar(std::sqrt(2.0) * kI)) < 1e-12);

  RandSuite rs(6, 3);
  for (int k = 0; k < 10; ++k) {
    const HPoint p = sampling::random_hpoint(rs), q = sampling::random_hpoint(rs);
    CHECK(dist(geodesic_model(p, q, 0.0).h(), p.h()) < 1e-8 * spec_norm(p.h()));
    CHECK(dist(geodesic_model(p, q, 1.0).h(), q.h()) < 1e-8 * spec_norm(q.h()));
    const auto s = geodesic_model_sample(p, q, 0.5);
    CHECK(s.drift < kReflectionDriftTol);
  }
}

TEST_CASE("ambient covariant derivative") {
  RandSuite rs(7, 2);
  const PosPoint a(rs.random_pd());
  const CMat y = rs.random_hermitian(), yd = rs.random_hermitian();
  CHECK(dist(covariant_ambient(a, zeros(2), y, yd), yd) == 0.0);
  const CMat v = covariant_ambient(a, rs.random_hermitian(), y, yd);
  CHECK(dist(v, v.adjoint()) < 1e-10);

  // Scalar geodesic e^t: D = e^t − ½(e^t e^{−t} e^t + e^t e^{−t} e^t) = 0.
  const double t = 0.7, et = std::exp(t);
  CHECK(spec_norm(covariant_ambient(PosPoint(scalar(et)), scalar(et), scalar(et), scalar(et))) <
        1e-14);
}

TEST_CASE("half-space covariant derivative") {
  RandSuite rs(8, 3);
  const HTangent zero{zeros(3), zeros(3)};
  const HPoint h = sampling::random_hpoint(rs);
  CHECK(spec_norm(covariant_h(h, zero, zero, zero).complex()) == 0.0);
  const HTangent zeta{rs.random_hermitian(), rs.random_hermitian()};
  const HTangent zd{rs.random_hermitian(), rs.random_hermitian()};
  CHECK(dist(covariant_h(HPoint::i(3), zero, zeta, zd).complex(), zd.complex()) == 0.0);

  const HTangent hd{rs.random_hermitian(), rs.random_hermitian()};
  const HTangent out = covariant_h(h, hd, zeta, zd);
  CHECK(dist(out.chi, out.chi.adjoint()) < 1e-10);
  CHECK(dist(out.ups, out.ups.adjoint()) < 1e-10);

  // Scalar half-plane: Christoffel symbols of ds² = (dx² + dy²)/y² give
  // x'' − 2x'y'/y and y'' + (x'² − y'²)/y for the velocity field.
  const double x0 = 0.3, y0 = 1.7, xp = 0.4, yp = -0.9, xpp = 0.25, ypp = 0.6;
  const HTangent c = covariant_h(HPoint(scalar(cplx(x0, y0))), {scalar(xp), scalar(yp)},
                                 {scalar(xp), scalar(yp)}, {scalar(xpp), scalar(ypp)});
  CHECK(c.chi(0, 0).real() == doctest::Approx(xpp - 2 * xp * yp / y0).epsilon(1e-14));
  CHECK(c.ups(0, 0).real() == doctest::Approx(ypp + (xp * xp - yp * yp) / y0).epsilon(1e-14));
}

TEST_CASE("connection form at i") {
  const HTangent up{zeros(1), scalar(1)};
  CHECK(dist(kappa_i(up), 0.5 * diag({-1.0, 1.0})) == 0.0);
  const HTangent re{scalar(1), zeros(1)};
  CHECK(dist(kappa_i(re), 0.5 * mat2(0, 1, 1, 0)) == 0.0);
  RandSuite rs(9, 4);
  for (int k = 0; k < 20; ++k) {
    const HTangent z{rs.random_hermitian(), rs.random_hermitian()};
    const Block2 kz = kappa_i(z);
    CHECK(dist(d_pi_i(kz).complex(), z.complex()) < 1e-12);
    CHECK(spec_norm(lie_split(kz).vertical) == 0.0);
    CHECK(dist(kz, kz.adjoint()) == 0.0);
  }
  CHECK(throws_kind([] { kappa_i({mat2(0, 1, 0, 0), zeros(2)}); }, ErrorKind::NotHermitian));
}

TEST_CASE("geodesics through i") {
  const LieElem zero = lie_split(Block2::Zero(4, 4));
  CHECK(dist(geodesic_from_i(zero, 0.8).h(), scalar(kI, 2)) < 1e-15);

  const double beta = 0.7;
  const LieElem xb = lie_split(horizontal_element(zeros(1), scalar(beta)));
  for (double t : {0.0, 0.25, 0.5, 1.0}) {
    const cplx ref(std::tanh(2 * t * beta), 1.0 / std::cosh(2 * t * beta));
    CHECK(dist(geodesic_from_i(xb, t).h(), scalar(ref)) < 1e-14);
  }

  RandSuite rs(10, 3);
  const LieElem x = sampling::random_horizontal(rs, 0.5);
  const double d1 = dist_model(HPoint::i(3), geodesic_from_i(x, 1.0));
  for (int k = 0; k <= 10; ++k) {
    const double t = 0.1 * k;
    CHECK(std::abs(dist_model(HPoint::i(3), geodesic_from_i(x, t)) - t * d1) < 1e-6);
    CHECK(dist(geodesic_from_i(x, t).h(), ref_orbit(x.value, t)) < 1e-10);
  }
  CHECK(throws_kind([&] { geodesic_from_i(random_lie_element(rs, 1.0, 0.0), 1.0); },
                    ErrorKind::NotHorizontal));
}

TEST_CASE("commuting family") {
  const auto flat = GeodesicFamilyParams::commuting(zeros(2), identity(2));
  CHECK(dist(geodesic_commuting(flat, 0.6).h(), scalar(kI, 2)) < 1e-15);

  const auto half = GeodesicFamilyParams::commuting(scalar(1), scalar(std::numbers::pi / 2));
  for (double t : {0.1, 0.5, 0.9}) {
    const CMat d = geodesic_commuting(half, t).h();
    CHECK(dist(d, scalar(cplx(std::tanh(2 * t), 1.0 / std::cosh(2 * t)))) < 1e-14);
    CHECK(std::abs(std::norm(d(0, 0)) - 1.0) < 1e-14);
  }

  for (int n : {1, 2, 4}) {
    RandSuite rs(20 + n, n);
    for (int k = 0; k < 5; ++k) {
      const auto p = sampling::random_commuting_params(rs);
      CHECK(dist(p.alpha() * p.beta(), p.beta() * p.alpha()) < 1e-12);
      const auto mu = circle_center(p);
      REQUIRE(mu.has_value());
      CHECK(dist(*mu * p.beta(), -p.alpha()) < 1e-10);
      for (int j = 0; j <= 10; ++j) {
        const double t = 0.1 * j;
        const HPoint d = geodesic_commuting(p, t);
        CHECK(dist(d.h(), ref_orbit(p.horizontal(), t)) < 1e-8);
        CHECK(circle_residual(d, *mu) < 1e-8);
      }
    }
  }
  CHECK_FALSE(circle_center(GeodesicFamilyParams::commuting(scalar(1), scalar(0))).has_value());
  CHECK(throws_kind([] { GeodesicFamilyParams::commuting(scalar(-1), scalar(0)); },
                    ErrorKind::InvalidParams));
  CHECK(throws_kind([] { geodesic_anticommuting(
                             GeodesicFamilyParams::commuting(scalar(1), scalar(0)), 0.5); },
                    ErrorKind::InvalidParams));
}

TEST_CASE("anticommuting family") {
  const double beta = 0.8;
  const auto a0 = GeodesicFamilyParams::anticommuting(zeros(1), scalar(beta));
  const auto c0 = GeodesicFamilyParams::commuting(scalar(beta), scalar(std::numbers::pi / 2));
  for (double t : {0.2, 0.7}) {
    CHECK(dist(geodesic_anticommuting(a0, t).h(), geodesic_commuting(c0, t).h()) < 1e-14);
  }

  const auto pauli = GeodesicFamilyParams::anticommuting(test::sigma_z(), test::sigma_x());
  for (int j = 0; j <= 10; ++j) {
    const double t = 0.1 * j;
    const HPoint d = geodesic_anticommuting(pauli, t);
    CHECK(dist(d.h(), ref_orbit(pauli.horizontal(), t)) < 1e-8);
    CHECK(is_positive_definite(d.im()));
  }

  for (int n : {1, 2, 4}) {
    RandSuite rs(30 + n, n);
    const auto p = sampling::random_anticommuting_params(rs);
    CHECK(dist(p.alpha() * p.beta(), -(p.beta() * p.alpha())) < 1e-12);
    const auto no_alpha = GeodesicFamilyParams::anticommuting(zeros(n), p.beta());
    for (int j = 0; j <= 10; ++j) {
      const double t = 0.1 * j;
      CHECK(dist(geodesic_anticommuting(p, t).h(), ref_orbit(p.horizontal(), t)) < 1e-8);
      CHECK(dist(geodesic_anticommuting(p, t).re(), geodesic_anticommuting(no_alpha, t).re()) <
            1e-10);
    }
  }
  CHECK(throws_kind([] { GeodesicFamilyParams::anticommuting(test::sigma_z(), identity(2)); },
                    ErrorKind::InvalidParams));
}
