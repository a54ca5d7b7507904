#pragma once

// JSON parsing and serialization for the CLI: problem inputs, root data,
// polytopes with exact fraction-string entries, polynomials as q-degree
// coefficient arrays plus a redundant pretty t-string.

#include <optional>
#include <string>

#include "json.hpp"
#include "redih/engine.hpp"

namespace redih {

struct ProblemOptions {
  int max_weyl_order = 2048;
  bool trace = false;
  std::string format = "json";  // or "table"
};

struct ProblemInput {
  RootDatum root_datum;
  RationalPolytope polytope;
  ProblemOptions options;
};

nlohmann::json to_json(const RootDatum& rd);
RootDatum root_datum_from_json(const nlohmann::json& j);

nlohmann::json vertices_to_json(const RationalPolytope& p);
RationalPolytope polytope_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QPolynomial& p);  // coefficient array

nlohmann::json orbit_to_json(const OrbitReport& report);
nlohmann::json result_to_json(const IHResult& result, bool with_trace);

// Parses {"root_datum": {...} | "preset": "...", "polytope": {...},
// "options": {...}}. Throws InputError on malformed documents.
ProblemInput parse_problem(const nlohmann::json& j);

}  // namespace redih
