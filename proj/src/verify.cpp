#include "hsgeom/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "hsgeom/geometry.hpp"
#include "hsgeom/sampling.hpp"

namespace hsgeom {

Tolerance RunConfig::tolerance() const {
  Tolerance t;
  if (tol) t.eps_struct = t.eps_pos = *tol;
  return t;
}

void RunConfig::validate() const {
  if (n < 1) throw GeometryError(ErrorKind::InvalidParams, "n must be >= 1");
  if (trials < 1) throw GeometryError(ErrorKind::InvalidParams, "trials must be >= 1");
  if (tol && !(*tol > 0.0)) throw GeometryError(ErrorKind::InvalidParams, "tol must be > 0");
}

bool VerifyReport::pass() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.pass(); });
}

namespace {

using namespace sampling;

double diff(const CMat& a, const CMat& b) { return spec_norm(a - b); }
double rel(double residual, double scale) { return residual / std::max(1.0, scale); }

// Collects residuals of one trial. Checks are keyed by name; the first
// violation of a trial is kept for the report.
class Recorder {
 public:
  void check(const std::string& name, double residual, double threshold) {
    if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
    auto [it, fresh] = stats_.try_emplace(name);
    CheckStat& stat = it->second;
    stat.name = name;
    stat.threshold = threshold;
    stat.max_residual = fresh ? residual : std::max(stat.max_residual, residual);
    if (!(residual <= threshold)) {
      stat.pass = false;
      if (!violation_) violation_ = SuiteFailure{0, 0, name, residual, threshold};
    }
  }

  std::optional<SuiteFailure> take_violation() { return std::exchange(violation_, std::nullopt); }
  const std::map<std::string, CheckStat>& stats() const { return stats_; }

 private:
  std::map<std::string, CheckStat> stats_;
  std::optional<SuiteFailure> violation_;
};

using SuiteFn = std::function<void(RandSuite&, const Tolerance&, Recorder&)>;

// -- forms --------------------------------------------------------------------

void suite_forms(RandSuite& rs, const Tolerance& tol, Recorder& rec) {
  const Block2 g = random_group_element(rs);
  const Col2 x = random_col(rs);
  const Col2 y = random_col(rs);
  const double scale = std::max(1.0, (spec_norm(x.x1) + spec_norm(x.x2)) *
                                         (spec_norm(y.x1) + spec_norm(y.x2)));
  const CMat th = theta(Model::H, x, y);
  rec.check("theta_h_preserved", diff(theta(Model::H, apply_block(g, x), apply_block(g, y)), th), 1e-8);
  const Block2 gd = cayley_conjugate(g);
  rec.check("theta_d_preserved",
            diff(theta(Model::D, apply_block(gd, x), apply_block(gd, y)), theta(Model::D, x, y)), 1e-8);
  const CMat txx = theta(Model::H, x, x);
  rec.check("theta_self_hermitian", rel(diff(txx, txx.adjoint()), scale), 1e-12);
  rec.check("theta_is_i_omega", rel(diff(th, kI * omega(x, y)), scale), 1e-12);
  for (Model m : {Model::H, Model::D}) {
    const Col2 rx = apply_block(rho(m, rs.n()), x);
    rec.check("theta_is_rho_inner", rel(diff(theta(m, x, y), inner(rx, y)), scale), 1e-12);
  }
  (void)tol;
}

// -- groups -------------------------------------------------------------------

double scaled_membership(Model m, const Block2& g) {
  const double gn = spec_norm(g);
  return membership_residual(m, g) / std::max(1.0, gn * gn);
}

void suite_groups(RandSuite& rs, const Tolerance& tol, Recorder& rec) {
  const int n = rs.n();
  const Block2 g1 = random_group_element(rs);
  const Block2 g2 = random_group_element(rs);
  rec.check("closure_product", scaled_membership(Model::H, g1 * g2), 1e-8);
  rec.check("closure_inverse", scaled_membership(Model::H, g1.inverse()), 1e-8);
  rec.check("inverse_formula", rel(diff(group_inverse(Model::H, g1) * g1,
                                        Block2::Identity(2 * n, 2 * n)),
                                   spec_norm(g1) * spec_norm(g1)),
            1e-8);

  const GroupPolar pd = polar_in_group(Model::H, g1, tol);
  const Block2 j = j_matrix(n);
  rec.check("polar_reconstruct", rel(diff(pd.u * pd.p, g1), spec_norm(g1)), 1e-10);
  rec.check("polar_u_in_group", scaled_membership(Model::H, pd.u), 1e-9);
  rec.check("polar_p_in_group", scaled_membership(Model::H, pd.p), 1e-9);
  rec.check("polar_u_commutes_J", diff(pd.u * j, j * pd.u), 1e-9);
  rec.check("polar_p_J_inverse", rel(diff(-(j * pd.p * j), pd.p.inverse()), spec_norm(pd.p)),
            1e-9);

  const Block2 gd = cayley_conjugate(g2);
  rec.check("cayley_conjugate_to_D", scaled_membership(Model::D, gd), 1e-8);
  const GroupPolar pdd = polar_in_group(Model::D, gd, tol);
  rec.check("polar_d_u_in_group", scaled_membership(Model::D, pdd.u), 1e-9);

  // Unitary part of U(θ_D) is block diagonal.
  const LieElem vert = random_lie_element(rs, 1.0, 0.0);
  const Block2 ud = cayley_conjugate(exp_chart(vert, tol));
  const auto [u1, u2] = unitary_split(ud, tol);
  rec.check("unitary_split_reconstruct", diff(block_diag(u1, u2), ud), 1e-10);
  rec.check("unitary_split_u1_unitary", diff(u1.adjoint() * u1, identity(n)), 1e-10);

  // Borel subgroup closure.
  const CMat b1 = rs.random_pd(0.5) * rs.random_unitary();
  const CMat b2 = rs.random_pd(0.5) * rs.random_unitary();
  const CMat x1 = b1.adjoint().inverse() * rs.random_hermitian();
  const CMat x2 = b2.adjoint().inverse() * rs.random_hermitian();
  const Block2 prod = borel(b1, x1, tol) * borel(b2, x2, tol);
  rec.check("borel_closure_upper_right", spec_norm(a12(prod)), 1e-12);
  const CMat bx = a11(prod).adjoint() * a21(prod);
  rec.check("borel_closure_symmetric", rel(diff(bx, bx.adjoint()), spec_norm(bx)), 1e-10);
  rec.check("borel_closure_in_group", scaled_membership(Model::H, prod), 1e-8);

  const CMat tau = rs.random_hermitian();
  rec.check("t_elem_in_group", scaled_membership(Model::H, t_elem(tau, tol)), 1e-10);

  const CMat ga = rs.random_pd(0.5) * rs.random_unitary();
  const CMat gb = rs.random_pd(0.5) * rs.random_unitary();
  rec.check("embed_multiplicative",
            rel(diff(embed_invertible(ga, tol) * embed_invertible(gb, tol),
                     embed_invertible(ga * gb, tol)),
                spec_norm(ga) * spec_norm(gb)),
            1e-10);

  // Chart inverse recovers a vertical part that commutes with J.
  LieElem small = random_lie_element(rs, 1.0, 0.3);
  const double vn = spec_norm(small.vertical);
  if (vn >= 3.0) {
    const double s = 3.0 / vn;
    small.vertical *= s;
    small.value = small.vertical + small.horizontal;
  }
  const LieElem rec_e = exp_chart_inverse(exp_chart(small, tol), tol);
  rec.check("chart_log_commutes_J", diff(rec_e.vertical * j, j * rec_e.vertical), 1e-9);
  rec.check("chart_log_roundtrip", diff(rec_e.value, small.value), 1e-8);
}

// -- actions ------------------------------------------------------------------

void suite_actions(RandSuite& rs, const Tolerance& tol, Recorder& rec) {
  const int n = rs.n();
  const Block2 g = random_group_element(rs);
  const Block2 k = random_group_element(rs);
  const HPoint h = random_hpoint(rs);
  const HPoint gkh = moebius(g, moebius(k, h, tol), tol);
  rec.check("action_property_H", rel(diff(gkh.h(), moebius(g * k, h, tol).h()), spec_norm(gkh.h())),
            1e-8);
  rec.check("lift_equivalence_H",
            rel(diff(moebius(g, h, tol).h(), moebius_lifted(g, h, tol).h()), spec_norm(gkh.h())),
            1e-8);

  const Block2 gd = cayley_conjugate(g);
  const Block2 kd = cayley_conjugate(k);
  const DPoint z = random_dpoint(rs);
  rec.check("action_property_D",
            diff(moebius(gd, moebius(kd, z, tol), tol).z(), moebius(gd * kd, z, tol).z()), 1e-8);
  rec.check("lift_equivalence_D", diff(moebius(gd, z, tol).z(), moebius_lifted(gd, z, tol).z()),
            1e-8);
  rec.check("identity_acts_trivially",
            diff(moebius(Block2::Identity(2 * n, 2 * n), z, tol).z(), z.z()), 1e-14);

  const KPair kp = random_kpair_d(rs);
  const KPair moved = act(gd, kp, tol);
  rec.check("sphere_equivariance_D",
            rel(sphere_residual(Model::D, moved.col()),
                spec_norm(moved.x1()) * spec_norm(moved.x1())),
            1e-10);
  rec.check("fibration_equivariance_D",
            diff(fibration_d(moved, tol).z(), moebius(gd, fibration_d(kp, tol), tol).z()), 1e-8);
  const KPair kh = random_kpair_h(rs);
  const KPair movedh = act(g, kh, tol);
  const HPoint lhs = fibration_h(movedh, tol);
  rec.check("fibration_equivariance_H",
            rel(diff(lhs.h(), moebius(g, fibration_h(kh, tol), tol).h()), spec_norm(lhs.h())),
            1e-8);

  const HPoint h2 = random_hpoint(rs);
  const Block2 w = transitivity_witness(h2, tol) * transitivity_witness(h, tol).inverse();
  rec.check("transitivity", rel(diff(moebius(w, h, tol).h(), h2.h()), spec_norm(h2.h())), 1e-9);
  rec.check("witness_maps_i",
            rel(diff(moebius(transitivity_witness(h, tol), HPoint::i(n), tol).h(), h.h()),
                spec_norm(h.h())),
            1e-9);

  const Block2 bl = borel_lift(kh, tol);
  const Col2 base = section_psi(HPoint::i(n), tol).col();
  const Col2 img = apply_block(bl, base);
  rec.check("free_action_lift", diff(img.x1, kh.x1()) + diff(img.x2, kh.x2()), 1e-9);
  rec.check("free_action_lift_in_group", scaled_membership(Model::H, bl), 1e-9);
  const Block2 si = sigma_inverse(kh, tol);
  const Col2 img2 = apply_block(si, Col2{identity(n), kI * identity(n)});
  rec.check("sigma_inverse_identity", diff(img2.x1, kh.x1()) + diff(img2.x2, kh.x2()), 1e-9);

  const DPoint gamma_gh = cayley(moebius(g, h, tol), tol);
  rec.check("cayley_action_compat",
            diff(gamma_gh.z(), moebius(cayley_conjugate(g), cayley(h, tol), tol).z()), 1e-8);

  const CMat u = rs.random_unitary();
  const Block2 iso = block_diag(u, u);
  rec.check("isotropy_origin", spec_norm(moebius(iso, DPoint::origin(n), tol).z()), 1e-12);
  rec.check("isotropy_norm",
            std::abs(spec_norm(moebius(iso, z, tol).z()) - spec_norm(z.z())), 1e-12);

  rec.check("cayley_roundtrip_H",
            rel(diff(cayley_inv(cayley(h, tol), tol).h(), h.h()), spec_norm(h.h())), 1e-9);
  rec.check("cayley_roundtrip_D", diff(cayley(cayley_inv(z, tol), tol).z(), z.z()), 1e-9);
  const HPoint square = fibration_h(sphere_cayley(section_delta(z, tol), tol), tol);
  rec.check("sphere_cayley_square", rel(diff(square.h(), cayley_inv(z, tol).h()),
                                        spec_norm(square.h())),
            1e-10);
}

// -- reflections --------------------------------------------------------------

void suite_reflections(RandSuite& rs, const Tolerance& tol, Recorder& rec) {
  const int n = rs.n();
  const DPoint z = random_dpoint(rs);
  const Reflection e = phi_d(z, tol);
  const double en = spec_norm(e.eps());
  rec.check("phi_d_square", rel(reflection_square_residual(e.eps()), en * en), 1e-9);
  rec.check("phi_d_positive", embed_min_eigenvalue(e) > 0.0 ? 0.0 : 1.0, 0.0);
  rec.check("phi_d_from_projection",
            diff(phi_d_from_pair(section_delta(z, tol), tol).eps(), e.eps()), 1e-9);
  const KPair delta = section_delta(z, tol);
  const CMat u = rs.random_unitary();
  const KPair other(Model::D, delta.x1() * u, delta.x2() * u, tol);
  rec.check("well_defined_on_fiber", diff(phi_d_from_pair(other, tol).eps(), e.eps()), 1e-9);

  const Block2 p = proj_p(other);
  rec.check("projection_idempotent", rel(diff(p * p, p), spec_norm(p)), 1e-9);
  const Block2 rd = rho_d(n);
  rec.check("projection_theta_symmetric", rel(diff(rd * p.adjoint() * rd, p), spec_norm(p)), 1e-9);

  // (2p − 1)ρ_D = 2xx* − ρ_D = (1 + m²)^{1/2} + m with m = [[0, 2γ],[2γ*, 0]], γ = x1 x2*.
  const CMat gam = 2.0 * other.x1() * other.x2().adjoint();
  const Block2 m = from_blocks(zeros(n), gam, gam.adjoint(), zeros(n));
  const Block2 one2 = Block2::Identity(2 * n, 2 * n);
  const Block2 witness = sqrt_pd(one2 + m * m, tol) + m;
  rec.check("positivity_witness", rel(diff((2.0 * p - one2) * rd, witness), spec_norm(witness)),
            1e-9);

  rec.check("phi_d_roundtrip", diff(phi_d_inv(e, tol).z(), z.z()), 1e-8);
  const Block2 gd = random_group_element_d(rs);
  const Reflection generated(Model::D, gd * rd * gd.inverse(), tol);
  rec.check("phi_d_inverse_roundtrip",
            rel(diff(phi_d(phi_d_inv(generated, tol), tol).eps(), generated.eps()),
                spec_norm(generated.eps())),
            1e-8);
  const KPair lift = reflection_lift(generated, tol);
  rec.check("reflection_lift_section",
            rel(diff(phi_d_from_pair(lift, tol).eps(), generated.eps()), spec_norm(generated.eps())),
            1e-8);

  const Block2 lhs = phi_d(moebius(gd, z, tol), tol).eps();
  const Block2 rhs = gd * e.eps() * gd.inverse();
  rec.check("equivariance_D", rel(diff(lhs, rhs), spec_norm(rhs)), 1e-8);

  const Block2 g = random_group_element(rs);
  const HPoint h = random_hpoint(rs);
  const Reflection eh = phi_h(h, tol);
  const Block2 lh = phi_h(moebius(g, h, tol), tol).eps();
  const Block2 rh = g * eh.eps() * g.inverse();
  rec.check("equivariance_H", rel(diff(lh, rh), spec_norm(rh)), 1e-8);
  rec.check("phi_h_roundtrip", rel(diff(phi_h_inv(eh, tol).h(), h.h()), spec_norm(h.h())), 1e-8);
  const double ehn = spec_norm(eh.eps());
  rec.check("phi_h_square", rel(reflection_square_residual(eh.eps()), ehn * ehn), 1e-9);
}

// -- metric -------------------------------------------------------------------

void suite_metric(RandSuite& rs, const Tolerance& tol, Recorder& rec) {
  const int n = rs.n();
  const DPoint z = random_dpoint(rs);
  const DPoint o = DPoint::origin(n);
  rec.check("disk_closed_form", std::abs(dist_model(o, z, tol) - dist_d_origin(z)), 1e-8);

  const HPoint p = random_hpoint(rs);
  const HPoint q = random_hpoint(rs);
  const double dh = dist_model(p, q, tol);
  rec.check("cayley_isometry", std::abs(dh - dist_model(cayley(p, tol), cayley(q, tol), tol)),
            1e-8);
  rec.check("distance_symmetric", std::abs(dh - dist_model(q, p, tol)), 1e-10);
  rec.check("distance_zero_diagonal", dist_model(p, p, tol), 1e-10);
  const Block2 g = random_group_element(rs);
  rec.check("isometric_action",
            std::abs(dist_model(moebius(g, p, tol), moebius(g, q, tol), tol) - dh), 1e-8);

  const PosPoint a(rs.random_pd(0.5), tol);
  const PosPoint b(rs.random_pd(0.5), tol);
  const double dab = dist_pos(a, b, tol);
  rec.check("cone_endpoints", diff(geodesic_pos(a, b, 0.0, tol).a(), a.a()) +
                                  diff(geodesic_pos(a, b, 1.0, tol).a(), b.a()),
            1e-10);
  const double s = rs.uniform(0.0, 1.0);
  const double t = rs.uniform(0.0, 1.0);
  const PosPoint gs = geodesic_pos(a, b, s, tol);
  const PosPoint gt = geodesic_pos(a, b, t, tol);
  rec.check("cone_linear_distance", std::abs(dist_pos(a, gt, tol) - t * dab), 1e-9);
  rec.check("cone_semigroup", std::abs(dist_pos(gs, gt, tol) - std::abs(t - s) * dab), 1e-8);
  rec.check("cone_symmetric", std::abs(dab - dist_pos(b, a, tol)), 1e-10);
  rec.check("cone_midpoint_symmetric",
            diff(geodesic_pos(a, b, 0.5, tol).a(), geodesic_pos(b, a, 0.5, tol).a()), 1e-9);

  const CMat gi = rs.random_pd(0.3) * rs.random_unitary();
  const CMat gi_inv = gi.inverse();
  const PosPoint ga(gi_inv.adjoint() * a.a() * gi_inv, tol);
  const PosPoint gb(gi_inv.adjoint() * b.a() * gi_inv, tol);
  rec.check("cone_congruence_invariance", std::abs(dist_pos(ga, gb, tol) - dab), 1e-8);
  const CMat x = rs.random_hermitian();
  rec.check("finsler_invariance",
            std::abs(finsler_norm(a, x, tol) - finsler_norm(ga, gi_inv.adjoint() * x * gi_inv, tol)),
            1e-9);

  const PosPoint ex = exp_pos(a, x, tol);
  rec.check("exp_geodesic_consistency",
            rel(diff(geodesic_pos(a, ex, t, tol).a(), exp_pos(a, t * x, tol).a()),
                spec_norm(ex.a())),
            1e-8);

  const HPoint m0 = geodesic_model(p, q, 0.0, tol);
  const HPoint m1 = geodesic_model(p, q, 1.0, tol);
  rec.check("model_geodesic_endpoints",
            rel(diff(m0.h(), p.h()), spec_norm(p.h())) + rel(diff(m1.h(), q.h()), spec_norm(q.h())),
            1e-8);
  const auto mid = geodesic_model_sample(p, q, t, tol);
  rec.check("model_geodesic_drift", mid.drift, kReflectionDriftTol);
  rec.check("model_geodesic_linear", std::abs(dist_model(p, mid.point, tol) - t * dh), 1e-7);
}

// -- npc ----------------------------------------------------------------------

void suite_npc(RandSuite& rs, const Tolerance& tol, Recorder& rec) {
  const HPoint origin = random_hpoint(rs);
  const HPoint q1 = random_hpoint(rs);
  const HPoint q2 = random_hpoint(rs);
  const double far = dist_model(q1, q2, tol);
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 9; ++k) {
    const double t = 0.1 * k;
    const double d = dist_model(geodesic_model(origin, q1, t, tol),
                                geodesic_model(origin, q2, t, tol), tol);
    worst = std::max(worst, d - t * far);
  }
  rec.check("chord_arc", worst, 1e-9);

  const HPoint p1 = random_hpoint(rs);
  const HPoint p2 = random_hpoint(rs);
  std::array<double, 11> f{};
  for (int k = 0; k <= 10; ++k) {
    const double t = 0.1 * k;
    f[k] = dist_model(geodesic_model(p1, q1, t, tol), geodesic_model(p2, q2, t, tol), tol);
  }
  double conv = -std::numeric_limits<double>::infinity();
  for (int k = 1; k < 10; ++k) conv = std::max(conv, f[k] - 0.5 * (f[k - 1] + f[k + 1]));
  rec.check("midpoint_convexity", conv, 1e-7);
}

// -- covariant ----------------------------------------------------------------

constexpr double kStep = 1e-3;

void suite_covariant(RandSuite& rs, const Tolerance& tol, Recorder& rec) {
  const int n = rs.n();
  const HTangent zeta{rs.random_hermitian(), rs.random_hermitian()};
  const Block2 kap = kappa_i(zeta, tol);
  const HTangent back = d_pi_i(kap);
  rec.check("kappa_roundtrip", diff(back.complex(), zeta.complex()), 1e-12);
  rec.check("kappa_horizontal", spec_norm(lie_split(kap, tol).vertical), 1e-12);

  const HTangent zdot{rs.random_hermitian(), rs.random_hermitian()};
  const HTangent still{zeros(n), zeros(n)};
  rec.check("covariant_at_i_static",
            diff(covariant_h(HPoint::i(n), still, zeta, zdot, tol).complex(), zdot.complex()),
            1e-14);

  const LieElem x = random_horizontal(rs, 0.5);
  const double t0 = rs.uniform(0.2, 0.8);
  const CMat dm = geodesic_from_i(x, t0 - kStep, tol).h();
  const CMat d0 = geodesic_from_i(x, t0, tol).h();
  const CMat dp = geodesic_from_i(x, t0 + kStep, tol).h();
  const HTangent vel = HTangent::from_complex((dp - dm) / (2.0 * kStep));
  const HTangent acc = HTangent::from_complex((dp - 2.0 * d0 + dm) / (kStep * kStep));
  const HTangent cov = covariant_h(HPoint(d0, tol), vel, vel, acc, tol);
  rec.check("covariant_h_geodesic", spec_norm(cov.complex()), 1e-4);

  const PosPoint a(rs.random_pd(0.5), tol);
  const CMat ah = sqrt_pd(a.a(), tol);
  const PosPoint b = exp_pos(a, ah * rs.random_hermitian(0.5 / n) * ah, tol);
  const CMat gm = geodesic_pos(a, b, t0 - kStep, tol).a();
  const CMat g0 = geodesic_pos(a, b, t0, tol).a();
  const CMat gp = geodesic_pos(a, b, t0 + kStep, tol).a();
  const CMat v = re_part((gp - gm) / (2.0 * kStep));
  const CMat acc2 = re_part((gp - 2.0 * g0 + gm) / (kStep * kStep));
  rec.check("covariant_ambient_geodesic",
            spec_norm(covariant_ambient(PosPoint(g0, tol), v, v, acc2, tol)), 1e-5);
}

// -- families -----------------------------------------------------------------

void suite_families(RandSuite& rs, const Tolerance& tol, Recorder& rec) {
  const int n = rs.n();
  const GeodesicFamilyParams cp = random_commuting_params(rs);
  const LieElem xc = lie_split(cp.horizontal(), tol);
  const auto mu = circle_center(cp, tol);
  double orbit = 0.0, circle = 0.0;
  for (int k = 0; k <= 10; ++k) {
    const double t = 0.1 * k;
    const HPoint closed = geodesic_commuting(cp, t, tol);
    orbit = std::max(orbit, diff(closed.h(), geodesic_from_i(xc, t, tol).h()));
    if (mu) circle = std::max(circle, circle_residual(closed, *mu));
  }
  rec.check("commuting_matches_orbit", orbit, 1e-8);
  rec.check("commuting_circle", circle, 1e-8);

  const GeodesicFamilyParams ap = random_anticommuting_params(rs);
  const LieElem xa = lie_split(ap.horizontal(), tol);
  const GeodesicFamilyParams no_alpha = GeodesicFamilyParams::anticommuting(zeros(n), ap.beta(), tol);
  double orbit_a = 0.0, indep = 0.0, pos = 0.0;
  for (int k = 0; k <= 10; ++k) {
    const double t = 0.1 * k;
    const HPoint closed = geodesic_anticommuting(ap, t, tol);
    orbit_a = std::max(orbit_a, diff(closed.h(), geodesic_from_i(xa, t, tol).h()));
    indep = std::max(indep, diff(closed.re(), geodesic_anticommuting(no_alpha, t, tol).re()));
    pos = std::max(pos, is_positive_definite(closed.im(), tol) ? 0.0 : 1.0);
  }
  rec.check("anticommuting_matches_orbit", orbit_a, 1e-8);
  rec.check("anticommuting_alpha_independent", indep, 1e-10);
  rec.check("anticommuting_im_positive", pos, 0.0);
}

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"forms", suite_forms},         {"groups", suite_groups},     {"actions", suite_actions},
      {"reflections", suite_reflections}, {"metric", suite_metric}, {"npc", suite_npc},
      {"covariant", suite_covariant}, {"families", suite_families},
  };
  return suites;
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::uint64_t trial_seed(std::uint64_t seed, std::string_view suite, int trial) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (char c : suite) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return split_seed(seed ^ h, static_cast<std::uint64_t>(trial));
}

SuiteReport run_suite(std::string_view name, const RunConfig& cfg) {
  cfg.validate();
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.first == name; });
  if (it == reg.end()) {
    throw GeometryError(ErrorKind::InvalidParams, "unknown suite \"" + std::string(name) + "\"");
  }
  const Tolerance tol = cfg.tolerance();
  Recorder rec;
  SuiteReport report;
  report.name = std::string(name);
  report.trials = cfg.trials;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const std::uint64_t seed = trial_seed(cfg.seed, name, trial);
    RandSuite rs(seed, cfg.n);
    try {
      it->second(rs, tol, rec);
    } catch (const std::exception& e) {
      rec.check(std::string("exception: ") + e.what(), std::numeric_limits<double>::infinity(),
                0.0);
    }
    if (auto v = rec.take_violation(); v && !report.first_failure) {
      v->trial = trial;
      v->seed = seed;
      report.first_failure = *v;
    }
  }
  for (const auto& [check, stat] : rec.stats()) {
    report.max_residual =
        report.checks.empty() ? stat.max_residual : std::max(report.max_residual, stat.max_residual);
    report.checks.push_back(stat);
  }
  return report;
}

VerifyReport run_verify(std::string_view suite, const RunConfig& cfg) {
  cfg.validate();
  VerifyReport report;
  if (suite == "all") {
    for (const auto& name : suite_names()) report.suites.push_back(run_suite(name, cfg));
  } else {
    report.suites.push_back(run_suite(suite, cfg));
  }
  return report;
}

std::string format_report(const VerifyReport& report, const RunConfig& cfg) {
  std::ostringstream os;
  const Tolerance tol = cfg.tolerance();
  os << "hsgeom verify n=" << cfg.n << " trials=" << cfg.trials << " seed=" << cfg.seed
     << " eps_struct=" << fmt_double(tol.eps_struct) << " eps_pos=" << fmt_double(tol.eps_pos)
     << "\n";
  int passed = 0;
  for (const SuiteReport& s : report.suites) {
    os << "suite " << s.name << ": " << (s.pass() ? "PASS" : "FAIL")
       << " max_residual=" << fmt_double(s.max_residual) << "\n";
    for (const CheckStat& c : s.checks) {
      os << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.name
         << " max=" << fmt_double(c.max_residual) << " tol=" << fmt_double(c.threshold) << "\n";
    }
    if (s.first_failure) {
      const SuiteFailure& f = *s.first_failure;
      os << "  first failure: trial=" << f.trial << " seed=" << f.seed << " check=" << f.check
         << " residual=" << fmt_double(f.residual) << "\n";
    }
    passed += s.pass() ? 1 : 0;
  }
  os << "summary: " << passed << "/" << report.suites.size() << " suites passed\n";
  return os.str();
}

}  // namespace hsgeom
