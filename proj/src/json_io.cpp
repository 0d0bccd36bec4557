#include "hsgeom/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hsgeom {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw GeometryError(ErrorKind::ParseError, what);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) parse_fail("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) parse_fail(std::string("missing field \"") + name + "\"");
  return *it;
}

Json matrix_data(const CMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

CMat matrix_from_data(const Json& data, int dim) {
  if (!data.is_array() || static_cast<int>(data.size()) != dim) {
    parse_fail("\"data\" must have " + std::to_string(dim) + " rows");
  }
  CMat m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const Json& row = data[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      parse_fail("row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
    }
    for (int k = 0; k < dim; ++k) {
      const Json& c = row[k];
      if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number()) {
        parse_fail("entry (" + std::to_string(i) + "," + std::to_string(k) +
                   ") must be [re, im]");
      }
      m(i, k) = cplx(c[0].get<double>(), c[1].get<double>());
    }
  }
  if (!m.allFinite()) parse_fail("matrix entries must be finite");
  return m;
}

int read_n(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1) parse_fail("\"n\" must be an integer >= 1");
  return static_cast<int>(n.get<long long>());
}

Model read_tag(const Json& j, const char* name) {
  const Json& t = field(j, name);
  if (!t.is_string()) parse_fail(std::string("\"") + name + "\" must be a string");
  return parse_model(t.get<std::string>());
}

}  // namespace

Json cmat_to_json(const CMat& m) {
  return Json{{"n", m.rows()}, {"data", matrix_data(m)}};
}

CMat cmat_from_json(const Json& j) {
  const int n = read_n(j);
  return matrix_from_data(field(j, "data"), n);
}

Json block2_to_json(const Block2& g) {
  return Json{{"n", block_dim(g)}, {"data", matrix_data(g)}};
}

Block2 block2_from_json(const Json& j) {
  const int n = read_n(j);
  return matrix_from_data(field(j, "data"), 2 * n);
}

Json point_to_json(const HPoint& p) {
  Json j = cmat_to_json(p.h());
  j["model"] = "H";
  return j;
}

Json point_to_json(const DPoint& p) {
  Json j = cmat_to_json(p.z());
  j["model"] = "D";
  return j;
}

ModelPointData point_data_from_json(const Json& j) {
  return {read_tag(j, "model"), cmat_from_json(j)};
}

Json kpair_to_json(const KPair& k) {
  return Json{{"tag", std::string(to_string(k.tag()))},
              {"x1", cmat_to_json(k.x1())},
              {"x2", cmat_to_json(k.x2())}};
}

KPair kpair_from_json(const Json& j, const Tolerance& tol) {
  const Model tag = read_tag(j, "tag");
  return KPair(tag, cmat_from_json(field(j, "x1")), cmat_from_json(field(j, "x2")), tol);
}

Json reflection_to_json(const Reflection& e) {
  return Json{{"tag", std::string(to_string(e.tag()))}, {"eps", block2_to_json(e.eps())}};
}

Reflection reflection_from_json(const Json& j, const Tolerance& tol) {
  const Model tag = read_tag(j, "tag");
  return Reflection(tag, block2_from_json(field(j, "eps")), tol);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    parse_fail("\"" + path + "\": " + e.what());
  }
}

}  // namespace hsgeom
