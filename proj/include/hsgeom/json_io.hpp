#pragma once

#include <string>

#include "json.hpp"

#include "hsgeom/reflections.hpp"

namespace hsgeom {

using Json = nlohmann::json;

/// {"n": n, "data": [[[re, im] × n] × n]}, row-major.
Json cmat_to_json(const CMat& m);
CMat cmat_from_json(const Json& j);

/// Same envelope with n the block dimension and 2n × 2n data.
Json block2_to_json(const Block2& g);
Block2 block2_from_json(const Json& j);

/// CMat envelope plus {"model": "H" | "D"}.
Json point_to_json(const HPoint& p);
Json point_to_json(const DPoint& p);

struct ModelPointData {
  Model model;
  CMat m;
};
/// Reads the envelope only; the caller constructs (and validates) the point.
ModelPointData point_data_from_json(const Json& j);

/// {"tag": "H" | "D", "x1": CMat, "x2": CMat}.
Json kpair_to_json(const KPair& k);
KPair kpair_from_json(const Json& j, const Tolerance& tol = {});

/// {"tag": "H" | "D", "eps": Block2}.
Json reflection_to_json(const Reflection& e);
Reflection reflection_from_json(const Json& j, const Tolerance& tol = {});

/// Parses a file; throws ParseError on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace hsgeom
