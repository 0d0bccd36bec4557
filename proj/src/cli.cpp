#include "hsgeom/cli.hpp"

#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hsgeom/geometry.hpp"
#include "hsgeom/json_io.hpp"
#include "hsgeom/verify.hpp"

namespace hsgeom {
namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

// Point files may omit "model"; when present it must agree with --model.
CMat read_point_matrix(const std::string& path, std::optional<Model> model) {
  const Json j = read_json_file(path);
  if (model && j.is_object() && j.contains("model")) {
    const ModelPointData d = point_data_from_json(j);
    if (d.model != *model) {
      throw GeometryError(ErrorKind::ParseError,
                          path + ": point has model " + std::string(to_string(d.model)) +
                              ", expected " + std::string(to_string(*model)));
    }
    return d.m;
  }
  return cmat_from_json(j);
}

Json point_json(const HPoint& p) { return point_to_json(p); }
Json point_json(const DPoint& p) { return point_to_json(p); }
Json point_json(const PosPoint& p) { return cmat_to_json(p.a()); }

const CMat& matrix_of(const HPoint& p) { return p.h(); }
const CMat& matrix_of(const DPoint& p) { return p.z(); }
const CMat& matrix_of(const PosPoint& p) { return p.a(); }

std::string csv_header(int n) {
  std::string s = "t";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::string ij = std::to_string(i) + "_" + std::to_string(j);
      s += ",re_" + ij + ",im_" + ij;
    }
  }
  return s;
}

// Adding 0.0 maps −0 to +0 so CSV cells never print as "-0".
std::string csv_num(double v) { return fmt("%.17g", v + 0.0); }

std::string csv_row(double t, const CMat& m) {
  std::string s = fmt("%.17g", t);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      s += "," + csv_num(m(i, j).real()) + "," + csv_num(m(i, j).imag());
    }
  }
  return s;
}

template <class Point>
void emit_samples(const std::vector<std::pair<double, Point>>& rows, OutFormat format,
                  std::ostream& out) {
  if (format == OutFormat::Csv) {
    out << csv_header(static_cast<int>(matrix_of(rows.front().second).rows())) << "\n";
    for (const auto& [t, p] : rows) out << csv_row(t, matrix_of(p)) << "\n";
    return;
  }
  Json arr = Json::array();
  for (const auto& [t, p] : rows) {
    Json row = point_json(p);
    row["t"] = t;
    arr.push_back(row);
  }
  out << arr.dump(2) << "\n";
}

struct DistArgs {
  std::string model, a, b;
};

int cmd_dist(const DistArgs& args, const Tolerance& tol, std::ostream& out) {
  double d = 0.0;
  if (args.model == "pos") {
    d = dist_pos(PosPoint(read_point_matrix(args.a, std::nullopt), tol),
                 PosPoint(read_point_matrix(args.b, std::nullopt), tol), tol);
  } else {
    const Model m = parse_model(args.model);
    const CMat a = read_point_matrix(args.a, m);
    const CMat b = read_point_matrix(args.b, m);
    d = m == Model::H ? dist_model(HPoint(a, tol), HPoint(b, tol), tol)
                      : dist_model(DPoint(a, tol), DPoint(b, tol), tol);
  }
  out << fmt("%.15f", d) << "\n";
  return kExitOk;
}

struct GeodesicArgs {
  std::string model, a, b, format = "json";
  int steps = 10;
};

OutFormat parse_format(const std::string& s) {
  if (s == "json") return OutFormat::Json;
  if (s == "csv") return OutFormat::Csv;
  throw GeometryError(ErrorKind::ParseError, "unknown format \"" + s + "\"");
}

template <class Point>
std::vector<std::pair<double, Point>> sample_model(const Point& p, const Point& q, int steps,
                                                   const Tolerance& tol, std::ostream& err) {
  std::vector<std::pair<double, Point>> rows;
  for (int j = 0; j <= steps; ++j) {
    const double t = static_cast<double>(j) / steps;
    auto s = geodesic_model_sample(p, q, t, tol);
    if (s.drift > kReflectionDriftTol) {
      err << "warning: " << to_string(ErrorKind::ReflectionDrift) << ": t=" << fmt("%.6g", t)
          << " drift=" << fmt("%.3e", s.drift) << "\n";
    }
    rows.emplace_back(t, std::move(s.point));
  }
  return rows;
}

int cmd_geodesic(const GeodesicArgs& args, const Tolerance& tol, std::ostream& out,
                 std::ostream& err) {
  const OutFormat format = parse_format(args.format);
  if (args.steps < 1) throw GeometryError(ErrorKind::InvalidParams, "steps must be >= 1");
  if (args.model == "pos") {
    const PosPoint a(read_point_matrix(args.a, std::nullopt), tol);
    const PosPoint b(read_point_matrix(args.b, std::nullopt), tol);
    std::vector<std::pair<double, PosPoint>> rows;
    for (int j = 0; j <= args.steps; ++j) {
      const double t = static_cast<double>(j) / args.steps;
      rows.emplace_back(t, geodesic_pos(a, b, t, tol));
    }
    emit_samples(rows, format, out);
    return kExitOk;
  }
  const Model m = parse_model(args.model);
  const CMat a = read_point_matrix(args.a, m);
  const CMat b = read_point_matrix(args.b, m);
  if (m == Model::H) {
    emit_samples(sample_model(HPoint(a, tol), HPoint(b, tol), args.steps, tol, err), format, out);
  } else {
    emit_samples(sample_model(DPoint(a, tol), DPoint(b, tol), args.steps, tol, err), format, out);
  }
  return kExitOk;
}

struct ActArgs {
  std::string tag, g, p;
};

int cmd_act(const ActArgs& args, const Tolerance& tol, std::ostream& out) {
  const Model m = parse_model(args.tag);
  const Block2 g = block2_from_json(read_json_file(args.g));
  const CMat p = read_point_matrix(args.p, m);
  if (m == Model::H) {
    out << point_to_json(moebius(g, HPoint(p, tol), tol)).dump(2) << "\n";
  } else {
    out << point_to_json(moebius(g, DPoint(p, tol), tol)).dump(2) << "\n";
  }
  return kExitOk;
}

struct CayleyArgs {
  std::string dir, p;
};

int cmd_cayley(const CayleyArgs& args, const Tolerance& tol, std::ostream& out) {
  if (args.dir == "HtoD") {
    out << point_to_json(cayley(HPoint(read_point_matrix(args.p, Model::H), tol), tol)).dump(2)
        << "\n";
  } else if (args.dir == "DtoH") {
    out << point_to_json(cayley_inv(DPoint(read_point_matrix(args.p, Model::D), tol), tol)).dump(2)
        << "\n";
  } else {
    throw GeometryError(ErrorKind::ParseError, "unknown direction \"" + args.dir + "\"");
  }
  return kExitOk;
}

struct ConstArgs {
  std::string name;
  int n = 1;
};

int cmd_const(const ConstArgs& args, std::ostream& out) {
  if (args.n < 1) throw GeometryError(ErrorKind::InvalidParams, "n must be >= 1");
  Block2 c;
  if (args.name == "rhoH") {
    c = rho_h(args.n);
  } else if (args.name == "rhoD") {
    c = rho_d(args.n);
  } else if (args.name == "J") {
    c = j_matrix(args.n);
  } else if (args.name == "U") {
    c = cayley_unitary(args.n);
  } else {
    throw GeometryError(ErrorKind::ParseError, "unknown constant \"" + args.name + "\"");
  }
  out << block2_to_json(c).dump(2) << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::string format;
  RunConfig cfg;
};

Json report_json(const VerifyReport& report, const RunConfig& cfg) {
  Json suites = Json::array();
  for (const SuiteReport& s : report.suites) {
    Json checks = Json::array();
    for (const CheckStat& c : s.checks) {
      checks.push_back({{"name", c.name},
                        {"max_residual", c.max_residual},
                        {"threshold", c.threshold},
                        {"pass", c.pass}});
    }
    Json js{{"name", s.name},
            {"pass", s.pass()},
            {"trials", s.trials},
            {"max_residual", s.max_residual},
            {"checks", checks}};
    if (s.first_failure) {
      const SuiteFailure& f = *s.first_failure;
      js["first_failure"] = {{"trial", f.trial},
                             {"seed", f.seed},
                             {"check", f.check},
                             {"residual", f.residual},
                             {"threshold", f.threshold}};
    }
    suites.push_back(js);
  }
  return Json{{"n", cfg.n},       {"seed", cfg.seed},          {"trials", cfg.trials},
              {"suites", suites}, {"pass", report.pass()}};
}

std::string report_csv(const VerifyReport& report) {
  std::string s = "suite,check,max_residual,threshold,pass\n";
  for (const SuiteReport& r : report.suites) {
    for (const CheckStat& c : r.checks) {
      s += r.name + "," + c.name + "," + fmt("%.17g", c.max_residual) + "," +
           fmt("%.17g", c.threshold) + "," + (c.pass ? "1" : "0") + "\n";
    }
  }
  return s;
}

int cmd_verify(VerifyArgs& args, std::ostream& out) {
  if (!args.format.empty()) args.cfg.out_format = parse_format(args.format);
  args.cfg.validate();
  const VerifyReport report = run_verify(args.suite, args.cfg);
  if (args.format.empty()) {
    out << format_report(report, args.cfg);
  } else if (args.cfg.out_format == OutFormat::Json) {
    out << report_json(report, args.cfg).dump(2) << "\n";
  } else {
    out << report_csv(report);
  }
  return report.pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operator half-space and disk geometry over M_n(C)", "hsgeom"};
  app.require_subcommand(1);
  std::optional<double> tol_override;
  app.add_option("--tol", tol_override, "Override structural and positivity tolerances")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;

  DistArgs dist;
  auto* sd = app.add_subcommand("dist", "Geodesic distance between two points");
  sd->add_option("--model", dist.model, "H, D or pos")->required()->check(CLI::IsMember({"H", "D", "pos"}));
  sd->add_option("a", dist.a, "First point (JSON)")->required();
  sd->add_option("b", dist.b, "Second point (JSON)")->required();

  GeodesicArgs geo;
  auto* sg = app.add_subcommand("geodesic", "Sample the geodesic between two points");
  sg->add_option("--model", geo.model, "H, D or pos")->required()->check(CLI::IsMember({"H", "D", "pos"}));
  sg->add_option("a", geo.a, "Start point (JSON)")->required();
  sg->add_option("b", geo.b, "End point (JSON)")->required();
  sg->add_option("--steps", geo.steps, "Number of intervals")->capture_default_str();
  sg->add_option("--format", geo.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  ActArgs act;
  auto* sa = app.add_subcommand("act", "Moebius action of a group element on a point");
  sa->add_option("--tag", act.tag, "H or D")->required()->check(CLI::IsMember({"H", "D"}));
  sa->add_option("g", act.g, "Group element (JSON)")->required();
  sa->add_option("p", act.p, "Point (JSON)")->required();

  CayleyArgs cay;
  auto* sc = app.add_subcommand("cayley", "Cayley transform between H and D");
  sc->add_option("--dir", cay.dir, "HtoD or DtoH")->required()->check(CLI::IsMember({"HtoD", "DtoH"}));
  sc->add_option("p", cay.p, "Point (JSON)")->required();

  ConstArgs cst;
  auto* sk = app.add_subcommand("const", "Print a structural constant");
  sk->add_option("--name", cst.name, "rhoH, rhoD, J or U")->required()->check(CLI::IsMember({"rhoH", "rhoD", "J", "U"}));
  sk->add_option("--n", cst.n, "Block dimension")->capture_default_str();

  VerifyArgs ver;
  auto* sv = app.add_subcommand("verify", "Run the randomized invariant suites");
  sv->add_option("--suite", ver.suite, "Suite name or all")->capture_default_str();
  sv->add_option("--n", ver.cfg.n, "Matrix dimension")->capture_default_str();
  sv->add_option("--trials", ver.cfg.trials, "Trials per suite")->capture_default_str();
  sv->add_option("--seed", ver.cfg.seed, "Run seed")->capture_default_str();
  sv->add_option("--format", ver.format, "json or csv (default: text report)")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  Tolerance tol;
  if (tol_override) tol.eps_struct = tol.eps_pos = *tol_override;
  ver.cfg.tol = tol_override;

  try {
    if (sd->parsed()) return cmd_dist(dist, tol, out);
    if (sg->parsed()) return cmd_geodesic(geo, tol, out, err);
    if (sa->parsed()) return cmd_act(act, tol, out);
    if (sc->parsed()) return cmd_cayley(cay, tol, out);
    if (sk->parsed()) return cmd_const(cst, out);
    if (sv->parsed()) return cmd_verify(ver, out);
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError ? kExitParse : kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitParse;
}

}  // namespace hsgeom
