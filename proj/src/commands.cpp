#include "redih/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "redih/toric_oracle.hpp"

namespace redih {

using nlohmann::json;

namespace {

std::string set_string(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string face_string(const RationalPolytope& p) {
  std::string out = "{";
  for (size_t i = 0; i < p.vertices.size(); ++i) {
    if (i) out += " ";
    out += to_string(p.vertices[i]);
  }
  return out + "}";
}

std::string orbit_table(const IHResult& result) {
  std::ostringstream os;
  os << "dim X = " << result.variety_dim << "\n";
  os << "IP_X  = " << result.global.to_t_string() << "   (q-form: "
     << result.global.to_q_string() << ")\n";
  os << "orbits:\n";
  os << "  dim  I        J        K        orb  d_x  virtual                  stalk        face\n";
  for (const auto& o : result.orbits) {
    std::ostringstream row;
    row << "  " << o.face.face.dim << "    ";
    auto pad = [&](std::string s, size_t w) {
      if (s.size() < w) s += std::string(w - s.size(), ' ');
      return s;
    };
    row << pad(set_string(o.face.symmetry.I), 9) << pad(set_string(o.face.symmetry.J), 9)
        << pad(set_string(o.face.symmetry.K), 9) << pad(std::to_string(o.orbit_dim), 5)
        << pad(std::to_string(o.d_x), 5) << pad(o.virtual_poincare.to_q_string(), 25)
        << pad(o.stalk.to_q_string(), 13) << face_string(o.face.polytope);
    os << row.str() << "\n";
  }
  return os.str();
}

VarietyDescriptor build_variety(const ProblemInput& input) {
  return make_variety(input.root_datum, input.polytope, input.options.max_weyl_order);
}

}  // namespace

CommandResult cmd_check(const ProblemInput& input) {
  CommandResult res;
  validate(input.root_datum);
  WeylGroup w = generate_weyl(input.root_datum, input.options.max_weyl_order);
  AdmissibilityVerdict verdict = admissibility_verdict(input.root_datum, w, input.polytope);
  res.output["admissible"] = verdict.admissible;
  std::ostringstream table;
  if (verdict.admissible) {
    res.exit_code = 0;
    table << "admissible: true\n";
    // face table of the admissible faces
    auto faces = admissible_faces(input.root_datum, w, input.polytope);
    res.output["admissible_faces"] = json::array();
    table << "admissible faces (" << faces.size() << "):\n";
    for (const auto& af : faces) {
      json row;
      row["face"] = vertices_to_json(af.polytope);
      row["dim"] = af.face.dim;
      row["I"] = af.symmetry.I;
      row["J"] = af.symmetry.J;
      row["K"] = af.symmetry.K;
      res.output["admissible_faces"].push_back(row);
      table << "  dim " << af.face.dim << "  I=" << set_string(af.symmetry.I)
            << " J=" << set_string(af.symmetry.J) << " K=" << set_string(af.symmetry.K)
            << "  " << face_string(af.polytope) << "\n";
    }
  } else {
    res.exit_code = 3;
    res.output["condition"] = verdict.failed_condition == 1 ? "i" : "ii";
    res.output["detail"] = verdict.detail;
    if (verdict.witness_w) res.output["witness_w"] = *verdict.witness_w;
    table << "admissible: false (condition " << (verdict.failed_condition == 1 ? "i" : "ii")
          << ")\n" << verdict.detail << "\n";
  }
  res.table = table.str();
  return res;
}

CommandResult cmd_orbits(const ProblemInput& input) {
  CommandResult res;
  VarietyDescriptor v = build_variety(input);
  Engine engine({input.options.max_weyl_order, 1});
  auto result = engine.global_ih(v);
  res.output["dim"] = result->variety_dim;
  res.output["orbits"] = json::array();
  for (const auto& o : result->orbits) res.output["orbits"].push_back(orbit_to_json(o));
  res.table = orbit_table(*result);
  return res;
}

namespace {

CommandResult run_ih(const ProblemInput& input, const CommandFlags& flags) {
  CommandResult res;
  VarietyDescriptor v = build_variety(input);
  Engine engine({input.options.max_weyl_order, 1});
  auto result = engine.global_ih(v);
  res.output = result_to_json(*result, input.options.trace);
  if (flags.check_scaling > 1) {
    VarietyDescriptor scaled = make_variety(
        input.root_datum, scale_polytope(input.polytope, Int(flags.check_scaling)),
        input.options.max_weyl_order);
    auto scaled_result = engine.global_ih(scaled);
    bool equal = scaled_result->global == result->global;
    res.output["scaling_check"] = json{{"k", flags.check_scaling}, {"equal", equal}};
    if (!equal)
      throw InvariantError("global polynomial changed under polytope scaling");
  }
  res.table = orbit_table(*result);
  return res;
}

}  // namespace

CommandResult cmd_ih(const ProblemInput& input, const CommandFlags& flags) {
  return run_ih(input, flags);
}

CommandResult cmd_toric(const ProblemInput& input, const CommandFlags& flags) {
  ProblemInput toric = input;
  toric.root_datum = torus_datum(input.polytope.ambient_rank);
  return run_ih(toric, flags);
}

CommandResult cmd_oracle(const ProblemInput& input) {
  CommandResult res;
  QPolynomial h = toric_ih_oracle(input.polytope);
  res.output["global"] = to_json(h);
  res.output["global_t"] = h.to_t_string();
  // cross-run the engine with trivial Weyl data and flag agreement
  VarietyDescriptor v =
      make_variety(torus_datum(input.polytope.ambient_rank), input.polytope,
                   input.options.max_weyl_order);
  Engine engine({input.options.max_weyl_order, 1});
  auto engine_result = engine.global_ih(v);
  bool agree = engine_result->global == h;
  res.output["engine_agrees"] = agree;
  std::ostringstream table;
  table << "oracle = " << h.to_t_string() << "\n"
        << "engine agreement: " << (agree ? "yes" : "NO") << "\n";
  res.table = table.str();
  if (!agree) throw InvariantError("toric oracle and engine disagree");
  return res;
}

// ---------------------------------------------------------------------------

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
  return j;
}

void emit(const CommandResult& res, const std::string& format) {
  if (format == "table" && !res.table.empty())
    std::cout << res.table;
  else
    std::cout << res.output.dump(2) << "\n";
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"intersection cohomology of projective reductive varieties"};
  app.require_subcommand(1);

  std::string input_path;
  std::string format;
  bool trace = false;
  int max_weyl_order = 0;
  int check_scaling = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", input_path, "problem JSON file")->required();
    cmd->add_option("--format", format, "json or table");
    cmd->add_flag("--trace", trace, "emit the recursion tree");
    cmd->add_option("--max-weyl-order", max_weyl_order, "bail out beyond this group order");
  };

  CLI::App* check = app.add_subcommand("check", "decide admissibility");
  add_common(check);
  CLI::App* orbits = app.add_subcommand("orbits", "admissible faces and orbit data");
  add_common(orbits);
  CLI::App* ih = app.add_subcommand("ih", "global and local intersection cohomology");
  add_common(ih);
  ih->add_option("--check-scaling", check_scaling, "also run with the polytope scaled by K");
  CLI::App* toric = app.add_subcommand("toric", "run the engine with trivial Weyl data");
  add_common(toric);
  toric->add_option("--check-scaling", check_scaling, "also run with the polytope scaled by K");
  CLI::App* oracle = app.add_subcommand("oracle", "combinatorial toric oracle");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    ProblemInput input = parse_problem(load_json(input_path));
    if (!format.empty()) input.options.format = format;
    if (trace) input.options.trace = true;
    if (max_weyl_order > 0) input.options.max_weyl_order = max_weyl_order;
    if (input.options.format != "json" && input.options.format != "table")
      throw InputError("format must be 'json' or 'table'");

    CommandFlags flags;
    flags.check_scaling = check_scaling;

    CommandResult res;
    if (*check)
      res = cmd_check(input);
    else if (*orbits)
      res = cmd_orbits(input);
    else if (*ih)
      res = cmd_ih(input, flags);
    else if (*toric)
      res = cmd_toric(input, flags);
    else
      res = cmd_oracle(input);
    emit(res, input.options.format);
    return res.exit_code;
  } catch (const NotAdmissible& e) {
    std::cerr << "not admissible (condition " << e.condition << "): " << e.what() << "\n";
    return 3;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace redih
