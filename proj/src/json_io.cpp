#include "redih/json_io.hpp"

namespace redih {

using nlohmann::json;

namespace {

json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(long(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw InputError("expected an integer");
}

json intvec_to_json(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

IntVec intvec_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an integer vector");
  IntVec v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

std::string rational_to_string(const Rational& x) {
  std::string s = x.get_num().get_str();
  if (x.get_den() != 1) s += "/" + x.get_den().get_str();
  return s;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(Int(long(j.get<long long>())));
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw InputError("polytope entries must be integers or exact strings");
}

}  // namespace

json to_json(const RootDatum& rd) {
  json j;
  j["rank"] = rd.rank;
  j["simple_roots"] = json::array();
  for (const auto& a : rd.simple_roots) j["simple_roots"].push_back(intvec_to_json(a));
  j["simple_coroots"] = json::array();
  for (const auto& a : rd.simple_coroots) j["simple_coroots"].push_back(intvec_to_json(a));
  j["label"] = rd.label;
  return j;
}

RootDatum root_datum_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rank")) throw InputError("root_datum needs a rank");
  RootDatum rd;
  rd.rank = j.at("rank").get<int>();
  if (j.contains("simple_roots"))
    for (const auto& a : j.at("simple_roots")) rd.simple_roots.push_back(intvec_from_json(a));
  if (j.contains("simple_coroots"))
    for (const auto& a : j.at("simple_coroots"))
      rd.simple_coroots.push_back(intvec_from_json(a));
  if (j.contains("label")) rd.label = j.at("label").get<std::string>();
  validate(rd);
  return rd;
}

json vertices_to_json(const RationalPolytope& p) {
  json a = json::array();
  for (const auto& v : p.vertices) {
    json row = json::array();
    for (const auto& x : v) row.push_back(rational_to_string(x));
    a.push_back(row);
  }
  return a;
}

RationalPolytope polytope_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices"))
    throw InputError("polytope needs a vertices array");
  const json& verts = j.at("vertices");
  if (!verts.is_array() || verts.empty()) throw InputError("empty vertex list");
  std::vector<RatVec> pts;
  for (const auto& row : verts) {
    if (!row.is_array()) throw InputError("vertex must be an array of entries");
    RatVec v;
    for (const auto& x : row) v.push_back(rational_from_json(x));
    pts.push_back(std::move(v));
  }
  size_t rank = pts[0].size();
  for (const auto& v : pts)
    if (v.size() != rank) throw InputError("vertices of differing dimension");
  return polytope_from_vertices(int(rank), pts);
}

json to_json(const QPolynomial& p) {
  json a = json::array();
  for (int j = 0; j <= p.degree(); ++j) a.push_back(int_to_json(p.coefficient(j)));
  if (p.is_zero()) a.push_back(0);
  return a;
}

json orbit_to_json(const OrbitReport& report) {
  json j;
  json face = json::array();
  for (const auto& v : report.face.polytope.vertices) {
    json row = json::array();
    for (const auto& x : v) row.push_back(rational_to_string(x));
    face.push_back(row);
  }
  j["face"] = face;
  j["dim"] = report.face.face.dim;
  j["I"] = report.face.symmetry.I;
  j["J"] = report.face.symmetry.J;
  j["K"] = report.face.symmetry.K;
  j["orbit_dim"] = report.orbit_dim;
  j["d_x"] = report.d_x;
  j["virtual"] = to_json(report.virtual_poincare);
  j["virtual_t"] = report.virtual_poincare.to_t_string();
  j["stalk"] = to_json(report.stalk);
  j["stalk_t"] = report.stalk.to_t_string();
  return j;
}

namespace {

json trace_node(const IHResult& result) {
  json t;
  t["dim"] = result.variety_dim;
  t["global"] = to_json(result.global);
  t["orbits"] = json::array();
  for (const auto& o : result.orbits) {
    json node;
    json face = json::array();
    for (const auto& v : o.face.polytope.vertices) {
      json row = json::array();
      for (const auto& x : v) row.push_back(rational_to_string(x));
      face.push_back(row);
    }
    node["face"] = face;
    node["d_x"] = o.d_x;
    if (o.link) {
      node["link"] = json{{"root_datum", to_json(o.link->quotient_rd)},
                          {"polytope", vertices_to_json(o.link->polytope)},
                          {"n", int_to_json(o.link->n)},
                          {"result", trace_node(*o.link->result)}};
    } else {
      node["link"] = nullptr;
    }
    t["orbits"].push_back(std::move(node));
  }
  return t;
}

}  // namespace

json result_to_json(const IHResult& result, bool with_trace) {
  json j;
  j["admissible"] = true;
  j["dim"] = result.variety_dim;
  j["global"] = to_json(result.global);
  j["global_t"] = result.global.to_t_string();
  j["orbits"] = json::array();
  for (const auto& o : result.orbits) j["orbits"].push_back(orbit_to_json(o));
  if (with_trace) j["trace"] = trace_node(result);
  return j;
}

ProblemInput parse_problem(const json& j) {
  if (!j.is_object()) throw InputError("problem document must be a JSON object");
  ProblemInput input;
  bool has_datum = j.contains("root_datum"), has_preset = j.contains("preset");
  if (has_datum && has_preset)
    throw InputError("give either root_datum or preset, not both");
  if (has_datum)
    input.root_datum = root_datum_from_json(j.at("root_datum"));
  else if (has_preset)
    input.root_datum = preset_root_datum(j.at("preset").get<std::string>());

  if (!j.contains("polytope")) throw InputError("problem document needs a polytope");
  input.polytope = polytope_from_json(j.at("polytope"));

  if (!has_datum && !has_preset)
    input.root_datum = torus_datum(input.polytope.ambient_rank);

  if (j.contains("options")) {
    const json& o = j.at("options");
    if (o.contains("max_weyl_order"))
      input.options.max_weyl_order = o.at("max_weyl_order").get<int>();
    if (o.contains("trace")) input.options.trace = o.at("trace").get<bool>();
    if (o.contains("format")) input.options.format = o.at("format").get<std::string>();
  }
  if (input.options.format != "json" && input.options.format != "table")
    throw InputError("format must be 'json' or 'table'");
  return input;
}

}  // namespace redih
