#include "doctest.h"
#include "redih/commands.hpp"

using namespace redih;
using nlohmann::json;

namespace {

ProblemInput problem(const std::string& text) { return parse_problem(json::parse(text)); }

const char* kFlagship = R"({
  "preset": "GL2",
  "polytope": {"vertices": [["1", "0"], ["0", "1"]]}
})";

const char* kPyramid = R"({
  "polytope": {"vertices": [[0,0,0], [1,0,0], [0,1,0], [1,1,0], [0,0,1]]}
})";

}  // namespace

TEST_CASE("problem parsing") {
  SUBCASE("preset plus fraction strings") {
    ProblemInput p = problem(kFlagship);
    CHECK(p.root_datum.label == "GL2");
    CHECK(p.polytope.vertices.size() == 2);
    CHECK(p.options.max_weyl_order == 2048);
  }
  SUBCASE("explicit datum") {
    ProblemInput p = problem(R"({
      "root_datum": {"rank": 2, "simple_roots": [[1,-1]], "simple_coroots": [[1,-1]], "label": "custom"},
      "polytope": {"vertices": [[1,0]]},
      "options": {"trace": true, "max_weyl_order": 64}
    })");
    CHECK(p.root_datum.rank == 2);
    CHECK(p.options.trace);
    CHECK(p.options.max_weyl_order == 64);
  }
  SUBCASE("no datum defaults to the torus of matching rank") {
    ProblemInput p = problem(kPyramid);
    CHECK(p.root_datum.num_simple() == 0);
    CHECK(p.root_datum.rank == 3);
  }
  SUBCASE("malformed documents") {
    CHECK_THROWS_AS(problem(R"({"polytope": {}})"), InputError);
    CHECK_THROWS_AS(problem(R"({"preset": "E8", "polytope": {"vertices": [[0]]}})"),
                    InputError);
    CHECK_THROWS_AS(problem(R"({"polytope": {"vertices": [[0], [0, 1]]}})"), InputError);
    CHECK_THROWS_AS(
        problem(R"({"polytope": {"vertices": [[0]]}, "options": {"format": "xml"}})"),
        InputError);
    CHECK_THROWS_AS(
        problem(R"({"root_datum": {"rank": 1, "simple_roots": [[1]], "simple_coroots": [[1]]},
                    "polytope": {"vertices": [[0]]}})"),
        InvalidCartan);
  }
}

TEST_CASE("check command") {
  SUBCASE("admissible input exits 0 with a face table") {
    CommandResult res = cmd_check(problem(R"({
      "preset": "GL2",
      "polytope": {"vertices": [[0,0],[1,0],[0,1],[1,1]]}
    })"));
    CHECK(res.exit_code == 0);
    CHECK(res.output["admissible"] == true);
    CHECK(res.output["admissible_faces"].size() == 6);
  }
  SUBCASE("condition (i) failure exits 3 with the condition named") {
    CommandResult res = cmd_check(problem(R"({
      "preset": "GL2",
      "polytope": {"vertices": [[0,1]]}
    })"));
    CHECK(res.exit_code == 3);
    CHECK(res.output["admissible"] == false);
    CHECK(res.output["condition"] == "i");
  }
  SUBCASE("condition (ii) failure reports a witness") {
    CommandResult res = cmd_check(problem(R"({
      "preset": "GL2",
      "polytope": {"vertices": [[2,0],[1,2]]}
    })"));
    CHECK(res.exit_code == 3);
    CHECK(res.output["condition"] == "ii");
    CHECK(res.output.contains("witness_w"));
  }
}

TEST_CASE("orbits command") {
  SUBCASE("GL(2) unit square has six rows") {
    CommandResult res = cmd_orbits(problem(R"({
      "preset": "GL2",
      "polytope": {"vertices": [[0,0],[1,0],[0,1],[1,1]]}
    })"));
    CHECK(res.output["orbits"].size() == 6);
  }
  SUBCASE("two orbits when one endpoint leaves the chamber") {
    CommandResult res = cmd_orbits(problem(R"({
      "preset": "GL2",
      "polytope": {"vertices": [[2,0],[0,2]]}
    })"));
    CHECK(res.output["orbits"].size() == 2);
  }
  SUBCASE("toric cube reports every face") {
    CommandResult res = cmd_orbits(problem(R"({
      "polytope": {"vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,1],[1,1,0],[1,0,1],[0,1,1],[1,1,1]]}
    })"));
    CHECK(res.output["orbits"].size() == 27);
  }
}

TEST_CASE("ih command") {
  SUBCASE("flagship output") {
    CommandResult res = cmd_ih(problem(kFlagship));
    CHECK(res.exit_code == 0);
    CHECK(res.output["global"] == json::parse("[1,1,1,1]"));
    CHECK(res.output["dim"] == 3);
    CHECK(res.output["global_t"] == "1 + t^2 + t^4 + t^6");
    CHECK(!res.output.contains("trace"));
  }
  SUBCASE("trace is emitted on request") {
    ProblemInput p = problem(kFlagship);
    p.options.trace = true;
    CommandResult res = cmd_ih(p);
    CHECK(res.output.contains("trace"));
    CHECK(res.output["trace"]["orbits"].size() == 2);
  }
  SUBCASE("scaling check annotates the output") {
    CommandFlags flags;
    flags.check_scaling = 2;
    CommandResult res = cmd_ih(problem(kFlagship), flags);
    CHECK(res.output["scaling_check"]["equal"] == true);
  }
  SUBCASE("non-admissible input raises") {
    CHECK_THROWS_AS(cmd_ih(problem(R"({
      "preset": "GL2",
      "polytope": {"vertices": [[0,1]]}
    })")),
                    NotAdmissible);
  }
}

TEST_CASE("toric and oracle commands agree byte for byte") {
  CommandResult engine_res = cmd_toric(problem(kPyramid));
  CommandResult oracle_res = cmd_oracle(problem(kPyramid));
  CHECK(engine_res.output["global"].dump() == oracle_res.output["global"].dump());
  CHECK(oracle_res.output["engine_agrees"] == true);
  CHECK(engine_res.output["global"] == json::parse("[1,2,2,1]"));
}

TEST_CASE("toric command ignores any supplied root datum") {
  CommandResult res = cmd_toric(problem(R"({
    "preset": "GL2",
    "polytope": {"vertices": [[0,0],[1,0],[0,1],[1,1]]}
  })"));
  // with trivial symmetry the square is a smooth toric surface
  CHECK(res.output["global"] == json::parse("[1,2,1]"));
  CHECK(res.output["orbits"].size() == 9);
}

TEST_CASE("tables render") {
  CommandResult res = cmd_ih(problem(kFlagship));
  CHECK(res.table.find("dim X = 3") != std::string::npos);
  CHECK(res.table.find("1 + t^2 + t^4 + t^6") != std::string::npos);
}
