#include <set>

#include "doctest.h"
#include "redih/admissibility.hpp"

using namespace redih;

namespace {

RatVec pt(std::vector<long> coords) {
  RatVec v;
  for (long c : coords) v.push_back(Rational(c));
  return v;
}

RationalPolytope make(int rank, std::vector<std::vector<long>> pts) {
  std::vector<RatVec> v;
  for (auto& p : pts) v.push_back(pt(p));
  return polytope_from_vertices(rank, v);
}

RationalPolytope unit_square() { return make(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

struct Gl2 {
  RootDatum rd = gl2_datum();
  WeylGroup w = generate_weyl(gl2_datum());
};

std::set<int> as_set(const std::vector<int>& v) { return std::set<int>(v.begin(), v.end()); }

}  // namespace

TEST_CASE("admissibility of GL(2) polytopes") {
  Gl2 g;
  SUBCASE("a vertex above the diagonal fails condition (i)") {
    auto verdict = admissibility_verdict(g.rd, g.w, make(2, {{0, 1}}));
    CHECK(!verdict.admissible);
    CHECK(verdict.failed_condition == 1);
  }
  SUBCASE("the unit square is admissible") {
    CHECK(is_admissible(g.rd, g.w, unit_square()));
  }
  SUBCASE("the antidiagonal segment is admissible") {
    CHECK(is_admissible(g.rd, g.w, make(2, {{1, 0}, {0, 1}})));
  }
  SUBCASE("a segment crossing the diagonal interior fails condition (ii)") {
    // relint meets the chamber, but the swap image overlaps
    auto verdict = admissibility_verdict(g.rd, g.w, make(2, {{2, 0}, {1, 2}}));
    CHECK(!verdict.admissible);
    CHECK(verdict.failed_condition == 2);
    CHECK(verdict.witness_w.has_value());
  }
  SUBCASE("non-lattice polytopes are rejected") {
    RationalPolytope p =
        polytope_from_vertices(2, {{make_rational(1, 2), Rational(0)}});
    CHECK_THROWS_AS(is_admissible(g.rd, g.w, p), InputError);
  }
}

TEST_CASE("admissibility for toric data is vacuous") {
  RootDatum rd = torus_datum(3);
  WeylGroup w = generate_weyl(rd);
  RationalPolytope p = make(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  CHECK(is_admissible(rd, w, p));
  CHECK(admissible_faces(rd, w, p).size() == enumerate_faces(p).size());
}

TEST_CASE("face symmetry on the GL(2) unit square") {
  Gl2 g;
  SUBCASE("diagonal vertex (1,1)") {
    FaceSymmetry sym = face_symmetry(g.rd, g.w, make(2, {{1, 1}}));
    CHECK(as_set(sym.I) == std::set<int>{0});
    CHECK(as_set(sym.J) == std::set<int>{0});
    CHECK(sym.K.empty());
    CHECK(sym.normalizer_order == 2);
    CHECK(sym.centralizer_order == 2);
  }
  SUBCASE("vertex (1,0) below the diagonal") {
    FaceSymmetry sym = face_symmetry(g.rd, g.w, make(2, {{1, 0}}));
    CHECK(sym.I.empty());
    CHECK(sym.J.empty());
    CHECK(sym.K.empty());
    CHECK(sym.normalizer_order == 1);
  }
  SUBCASE("diagonal-symmetric edge") {
    FaceSymmetry sym = face_symmetry(g.rd, g.w, make(2, {{1, 0}, {0, 1}}));
    CHECK(as_set(sym.I) == std::set<int>{0});
    CHECK(sym.J.empty());
    CHECK(as_set(sym.K) == std::set<int>{0});
    CHECK(sym.normalizer_order == 2);
    CHECK(sym.centralizer_order == 1);
  }
}

TEST_CASE("admissible faces of the GL(2) unit square") {
  Gl2 g;
  auto faces = admissible_faces(g.rd, g.w, unit_square());
  REQUIRE(faces.size() == 6);
  int dim0 = 0, dim1 = 0, dim2 = 0;
  std::set<std::string> vertex_faces;
  for (const auto& af : faces) {
    if (af.face.dim == 0) {
      ++dim0;
      vertex_faces.insert(to_string(af.polytope.vertices[0]));
    }
    if (af.face.dim == 1) ++dim1;
    if (af.face.dim == 2) ++dim2;
  }
  CHECK(dim0 == 3);
  CHECK(dim1 == 2);
  CHECK(dim2 == 1);
  CHECK(vertex_faces == std::set<std::string>{"(0,0)", "(1,0)", "(1,1)"});
}

TEST_CASE("rank-one orbit counts") {
  Gl2 g;
  SUBCASE("both endpoints dominant: three orbits") {
    CHECK(admissible_faces(g.rd, g.w, make(2, {{2, 0}, {4, 0}})).size() == 3);
  }
  SUBCASE("one endpoint not dominant: two orbits") {
    CHECK(admissible_faces(g.rd, g.w, make(2, {{2, 0}, {0, 2}})).size() == 2);
  }
}

TEST_CASE("one admissible face per Weyl orbit on a W-invariant polytope") {
  Gl2 g;
  RationalPolytope sq = unit_square();
  auto all = enumerate_faces(sq);
  for (const auto& f : all) {
    RationalPolytope fp = face_polytope(sq, f);
    // count admissible members of the W-orbit of this face
    int admissible_count = 0;
    std::set<std::string> seen;
    for (const auto& mat : g.w.elements) {
      RationalPolytope image = transform(fp, mat);
      if (!seen.insert(image.key()).second) continue;
      if (is_admissible(g.rd, g.w, image)) ++admissible_count;
    }
    CHECK(admissible_count == 1);
  }
}

TEST_CASE("stabilizer orders computed two ways agree") {
  Gl2 g;
  for (const auto& af : admissible_faces(g.rd, g.w, unit_square())) {
    CHECK(af.symmetry.normalizer_order == parabolic_subgroup(g.w, af.symmetry.I).size());
    CHECK(af.symmetry.centralizer_order == parabolic_subgroup(g.w, af.symmetry.J).size());
  }
}

TEST_CASE("admissible_faces rejects a non-admissible polytope") {
  Gl2 g;
  CHECK_THROWS_AS(admissible_faces(g.rd, g.w, make(2, {{0, 1}})), NotAdmissible);
}
