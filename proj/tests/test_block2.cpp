#include "doctest.h"
#include "test_support.hpp"

#include "hsgeom/block2.hpp"

using namespace hsgeom;
using test::dist;
using test::scalar;
using test::throws_kind;

namespace {

Col2 col(cplx a, cplx b, int n = 1) { return {scalar(a, n), scalar(b, n)}; }

}  // namespace

TEST_CASE("constants") {
  const Block2 rh = rho_h(1);
  CHECK(dist(rh, test::mat2(0, -kI, kI, 0)) == 0.0);
  CHECK(dist(rho_d(1), test::mat2(1, 0, 0, -1)) == 0.0);
  CHECK(dist(j_matrix(1), test::mat2(0, 1, -1, 0)) == 0.0);
  for (int n : {1, 3}) {
    const Block2 one = Block2::Identity(2 * n, 2 * n);
    CHECK(dist(rho_h(n) * rho_h(n), one) == 0.0);
    CHECK(dist(rho_d(n) * rho_d(n), one) == 0.0);
    CHECK(dist(rho_h(n), rho_h(n).adjoint()) == 0.0);
    const Block2 u = cayley_unitary(n);
    CHECK(dist(u * u.adjoint(), one) < 1e-15);
    CHECK(dist(u * rho_d(n) * u.adjoint(), rho_h(n)) < 1e-15);
  }
}

TEST_CASE("forms") {
  CHECK(dist(theta(Model::H, col(1, kI), col(1, kI)), scalar(2)) < 1e-15);
  CHECK(dist(theta(Model::D, col(1, 0), col(1, 0)), scalar(1)) < 1e-15);
  CHECK(dist(theta(Model::D, col(1, 0.5), col(1, 0.5)), scalar(0.75)) < 1e-15);
  CHECK(throws_kind([] { theta(Model::H, col(1, 0, 2), col(1, 0, 3)); },
                    ErrorKind::DimensionMismatch));

  RandSuite rs(1, 3);
  for (int k = 0; k < 20; ++k) {
    const Col2 x{rs.random_general(), rs.random_general()};
    const Col2 y{rs.random_general(), rs.random_general()};
    CHECK(dist(theta(Model::H, x, y), kI * omega(x, y)) < 1e-12);
    const CMat txx = theta(Model::H, x, x);
    CHECK(dist(txx, txx.adjoint()) < 1e-12);
    for (Model m : {Model::H, Model::D}) {
      CHECK(dist(theta(m, x, y), inner(apply_block(rho(m, 3), x), y)) < 1e-12);
    }
  }
}

TEST_CASE("group membership") {
  CHECK(in_group(Model::H, Block2::Identity(2, 2)));
  CHECK(in_group(Model::D, Block2::Identity(4, 4)));
  CHECK(in_group(Model::H, j_matrix(2)));
  CHECK_FALSE(in_group(Model::H, 2.0 * Block2::Identity(4, 4)));
  CHECK(throws_kind([] { require_in_group(Model::H, 2.0 * Block2::Identity(4, 4)); },
                    ErrorKind::NotInGroup));
  try {
    require_in_group(Model::H, 2.0 * Block2::Identity(2, 2));
  } catch (const GeometryError& e) {
    CHECK(std::string(e.what()).find("not in U(theta_H)") != std::string::npos);
  }
}

TEST_CASE("form preservation and closure under random group elements") {
  for (int n : {1, 2, 4}) {
    RandSuite rs(20 + n, n);
    for (int k = 0; k < 30; ++k) {
      const Block2 g = random_group_element(rs);
      const Block2 h = random_group_element(rs);
      const Col2 x{rs.random_general(), rs.random_general()};
      const Col2 y{rs.random_general(), rs.random_general()};
      CHECK(dist(theta(Model::H, apply_block(g, x), apply_block(g, y)),
                 theta(Model::H, x, y)) < 1e-8);
      CHECK(in_group(Model::H, g * h));
      CHECK(in_group(Model::H, g.inverse()));
      CHECK(dist(group_inverse(Model::H, g), g.inverse()) < 1e-9 * spec_norm(g));
      CHECK(in_group(Model::D, cayley_conjugate(g)));
      CHECK(dist(cayley_conjugate_inv(cayley_conjugate(g)), g) < 1e-12 * spec_norm(g));
    }
  }
  CHECK(dist(cayley_conjugate(Block2::Identity(2, 2)), Block2::Identity(2, 2)) < 1e-15);
  CHECK(dist(cayley_conjugate(rho_h(2)), rho_d(2)) < 1e-15);
}

TEST_CASE("borel elements") {
  CHECK(dist(borel(scalar(1), scalar(0)), Block2::Identity(2, 2)) == 0.0);
  const CMat x = test::mat2(1, kI, -kI, 2);
  const Block2 tr = borel(test::scalar(1, 2), x);
  CHECK(dist(tr, from_blocks(identity(2), zeros(2), x, identity(2))) < 1e-15);
  CHECK(in_group(Model::H, tr));

  // The witness for h = x + iy.
  RandSuite rs(4, 3);
  const CMat xr = rs.random_hermitian();
  const CMat y = rs.random_pd();
  const CMat yi = inv_sqrt_pd(y);
  CHECK(in_group(Model::H, borel(yi, xr * yi)));

  CHECK(throws_kind([] { borel(test::diag({1.0, 0.0}), zeros(2)); }, ErrorKind::Singular));
  CHECK(throws_kind([] { borel(identity(2), test::mat2(0, 1, 0, 0)); },
                    ErrorKind::NotSymmetricPair));

  for (int k = 0; k < 20; ++k) {
    const CMat b1 = rs.random_pd(0.5) * rs.random_unitary();
    const CMat b2 = rs.random_pd(0.5) * rs.random_unitary();
    const Block2 p = borel(b1, b1.adjoint().inverse() * rs.random_hermitian()) *
                     borel(b2, b2.adjoint().inverse() * rs.random_hermitian());
    CHECK(spec_norm(a12(p)) < 1e-12);
    CHECK_NOTHROW(borel(a11(p), a21(p), Tolerance{1e-9, 1e-10}));
    CHECK(dist(a22(p), a11(p).adjoint().inverse()) < 1e-10);
  }
}

TEST_CASE("t_elem and embed_invertible") {
  CHECK(dist(t_elem(zeros(2)), Block2::Identity(4, 4)) == 0.0);
  CHECK(in_group(Model::H, t_elem(identity(2))));
  CHECK(in_group(Model::H, t_elem(test::sigma_x())));
  CHECK(throws_kind([] { t_elem(test::mat2(0, 1, 0, 0)); }, ErrorKind::NotHermitian));

  CHECK(dist(embed_invertible(identity(2)), Block2::Identity(4, 4)) < 1e-15);
  CHECK(dist(embed_invertible(scalar(2, 2)), block_diag(scalar(2, 2), scalar(0.5, 2))) < 1e-15);
  RandSuite rs(8, 3);
  const CMat w = rs.random_unitary();
  const Block2 ew = embed_invertible(w);
  CHECK(dist(ew * j_matrix(3), j_matrix(3) * ew) < 1e-10);
  const CMat g = rs.random_general(), k = rs.random_general();
  CHECK(dist(embed_invertible(g) * embed_invertible(k), embed_invertible(g * k)) <
        1e-10 * spec_norm(g) * spec_norm(k) * spec_norm((g * k).inverse()));
  CHECK(throws_kind([] { embed_invertible(zeros(2)); }, ErrorKind::Singular));
}

TEST_CASE("lie_split") {
  const LieElem zero = lie_split(Block2::Zero(4, 4));
  CHECK(spec_norm(zero.vertical) == 0.0);
  CHECK(spec_norm(zero.horizontal) == 0.0);

  RandSuite rs(12, 2);
  const CMat beta = rs.random_hermitian();
  const Block2 xb = from_blocks(zeros(2), beta, beta, zeros(2));
  const LieElem eb = lie_split(xb);
  CHECK(spec_norm(eb.vertical) < 1e-15);
  CHECK(dist(eb.horizontal, xb) < 1e-15);

  const CMat alpha = rs.random_hermitian();
  const Block2 xa = block_diag(alpha, -alpha);
  CHECK(dist(lie_split(xa).horizontal, xa) < 1e-15);
  const Block2 xs = block_diag(kI * alpha, kI * alpha);
  const LieElem es = lie_split(xs);
  CHECK(dist(es.vertical, xs) < 1e-15);
  CHECK(spec_norm(es.horizontal) < 1e-15);

  const Block2 j = j_matrix(2);
  for (int k = 0; k < 20; ++k) {
    const LieElem e = random_lie_element(rs, 1.0, 1.0);
    CHECK(lie_residual(e.value) < 1e-10);
    const LieElem s = lie_split(e.value);
    CHECK(dist(s.vertical + s.horizontal, e.value) < 1e-12);
    CHECK(dist(s.vertical, -s.vertical.adjoint()) < 1e-12);
    CHECK(dist(s.horizontal, s.horizontal.adjoint()) < 1e-12);
    CHECK(dist(s.vertical * j, j * s.vertical) < 1e-12);
    CHECK(dist(s.horizontal * j, -(j * s.horizontal)) < 1e-12);
  }
  CHECK(throws_kind([] { lie_split(Block2::Identity(2, 2)); }, ErrorKind::NotInLieAlgebra));
}

TEST_CASE("exp_chart") {
  CHECK(dist(exp_chart(lie_split(Block2::Zero(2, 2))), Block2::Identity(2, 2)) < 1e-15);
  RandSuite rs(13, 3);
  const Block2 j = j_matrix(3);
  for (int k = 0; k < 20; ++k) {
    const LieElem e = random_lie_element(rs, 1.0, 0.5);
    const Block2 g = exp_chart(e);
    CHECK(dist(g, test::ref_exp(e.vertical) * test::ref_exp(e.horizontal)) <
          1e-10 * spec_norm(g));
    CHECK(in_group(Model::H, g, Tolerance{1e-9, 1e-10}));

    const LieElem h{e.horizontal, Block2::Zero(6, 6), e.horizontal};
    const Block2 ph = exp_chart(h);
    CHECK(is_positive_definite(ph));
    CHECK(in_group(Model::H, ph));

    const LieElem v{e.vertical, e.vertical, Block2::Zero(6, 6)};
    const Block2 uv = exp_chart(v);
    CHECK(dist(uv.adjoint() * uv, Block2::Identity(6, 6)) < 1e-10);
    CHECK(dist(uv * j, j * uv) < 1e-10);
  }
}

TEST_CASE("polar_in_group") {
  RandSuite rs(14, 2);
  const Block2 j = j_matrix(2);
  for (int k = 0; k < 30; ++k) {
    const Block2 g = random_group_element(rs);
    const GroupPolar f = polar_in_group(Model::H, g);
    CHECK(dist(f.u * f.p, g) < 1e-10 * spec_norm(g));
    CHECK(in_group(Model::H, f.u, Tolerance{1e-9, 1e-10}));
    CHECK(in_group(Model::H, f.p, Tolerance{1e-9, 1e-10}));
    CHECK(is_positive_definite(f.p));
    CHECK(dist(f.u * j, j * f.u) < 1e-9);
    CHECK(dist(j * f.p * j.inverse(), f.p.inverse()) < 1e-9 * spec_norm(f.p) * spec_norm(f.p));
  }
  const Block2 u = exp_chart(random_lie_element(rs, 1.0, 0.0));
  const GroupPolar fu = polar_in_group(Model::H, u);
  CHECK(dist(fu.u, u) < 1e-12);
  CHECK(dist(fu.p, Block2::Identity(4, 4)) < 1e-12);
  const Block2 p = exp_chart(random_lie_element(rs, 0.0, 1.0));
  const GroupPolar fp = polar_in_group(Model::H, p);
  CHECK(dist(fp.u, Block2::Identity(4, 4)) < 1e-12);
  CHECK(dist(fp.p, p) < 1e-12 * spec_norm(p));
  CHECK(throws_kind([] { polar_in_group(Model::H, 2.0 * Block2::Identity(4, 4)); },
                    ErrorKind::NotInGroup));
}

TEST_CASE("unitary_split") {
  const auto [i1, i2] = unitary_split(Block2::Identity(4, 4));
  CHECK(dist(i1, identity(2)) == 0.0);
  CHECK(dist(i2, identity(2)) == 0.0);
  const auto [d1, d2] = unitary_split(block_diag(scalar(kI), scalar(1)));
  CHECK(dist(d1, scalar(kI)) == 0.0);
  CHECK(dist(d2, scalar(1)) == 0.0);

  RandSuite rs(15, 3);
  for (int k = 0; k < 20; ++k) {
    const Block2 u = cayley_conjugate(exp_chart(random_lie_element(rs, 1.0, 0.0)));
    const auto [u1, u2] = unitary_split(u);
    CHECK(dist(block_diag(u1, u2), u) < 1e-10);
    CHECK(is_unitary(u1));
    CHECK(is_unitary(u2));
  }
  CHECK(throws_kind([] { unitary_split(j_matrix(2)); }, ErrorKind::NotInGroup));
}

TEST_CASE("chart inverse recovers a J-commuting logarithm") {
  RandSuite rs(16, 2);
  const Block2 j = j_matrix(2);
  for (int k = 0; k < 20; ++k) {
    const LieElem e = random_lie_element(rs, 0.4, 0.5);
    const LieElem back = exp_chart_inverse(exp_chart(e));
    CHECK(dist(back.vertical * j, j * back.vertical) < 1e-9);
    CHECK(dist(back.value, e.value) < 1e-8);
  }
}
