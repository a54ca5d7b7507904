#include <random>

#include "doctest.h"
#include "redih/engine.hpp"
#include "redih/toric_oracle.hpp"

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

QPolynomial poly(std::vector<long> c) {
  IntVec v(c.begin(), c.end());
  return QPolynomial::from_coefficients(std::move(v));
}

RationalPolytope triangle() { return make(2, {{0, 0}, {1, 0}, {0, 1}}); }
RationalPolytope unit_cube() {
  return make(3, {{0, 0, 0},
                  {1, 0, 0},
                  {0, 1, 0},
                  {0, 0, 1},
                  {1, 1, 0},
                  {1, 0, 1},
                  {0, 1, 1},
                  {1, 1, 1}});
}
RationalPolytope octahedron() {
  return make(3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}
RationalPolytope square_pyramid() {
  return make(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
}

// h-polynomial of a simple polytope straight from the face numbers; for
// simple polytopes every dual interval is boolean, so all g's are 1.
QPolynomial simple_h_from_f(const RationalPolytope& p) {
  QPolynomial acc;
  QPolynomial q_minus_1 = poly({-1, 1});
  for (const auto& f : enumerate_faces(p)) {
    QPolynomial term = QPolynomial::one();
    for (int i = 0; i < f.dim; ++i) term = term * q_minus_1;
    acc = acc + term;
  }
  return acc;
}

bool is_simple(const RationalPolytope& p) {
  for (const auto& v : p.vertices) {
    int tight = 0;
    for (size_t f = 0; f < p.facets.size(); ++f)
      if (p.facet_tight(int(f), v)) ++tight;
    if (tight != p.dim) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("gh on face lattices") {
  SUBCASE("triangle boundary") {
    GHResult r = gh(face_poset(triangle()));
    CHECK(r.h == poly({1, 1, 1}));
    CHECK(r.g == QPolynomial::one());
  }
  SUBCASE("point") {
    GHResult r = gh(face_poset(make(1, {{0}})));
    CHECK(r.h == QPolynomial::one());
  }
  SUBCASE("cube boundary") {
    GHResult r = gh(face_poset(unit_cube()));
    CHECK(r.h == poly({1, 5, 5, 1}));
    CHECK(r.g == poly({1, 4}));
  }
  SUBCASE("h is palindromic on boundary lattices") {
    for (const auto& p : {triangle(), unit_cube(), octahedron(), square_pyramid()}) {
      GHResult r = gh(face_poset(p));
      CHECK(is_palindromic(r.h, 2 * p.dim));
    }
  }
}

TEST_CASE("non-Eulerian posets are rejected") {
  EulerianPoset chain;
  chain.size = 3;
  chain.rank = {0, 1, 2};
  chain.leq.assign(3, std::vector<bool>(3, false));
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) chain.leq[i][j] = true;
  chain.bottom = 0;
  chain.top = 2;
  CHECK_THROWS_AS(validate_eulerian(chain), NotEulerian);
}

TEST_CASE("toric oracle fixed values") {
  CHECK(toric_ih_oracle(unit_cube()) == poly({1, 3, 3, 1}));
  CHECK(toric_ih_oracle(octahedron()) == poly({1, 5, 5, 1}));
  CHECK(toric_ih_oracle(square_pyramid()) == poly({1, 2, 2, 1}));
  CHECK(toric_ih_oracle(make(1, {{0}, {1}})) == poly({1, 1}));
  CHECK(toric_ih_oracle(triangle()) == poly({1, 1, 1}));
}

TEST_CASE("simple polytopes: oracle equals the f-vector h-polynomial") {
  std::vector<RationalPolytope> simples = {
      triangle(), unit_cube(), make(2, {{0, 0}, {3, 0}, {0, 2}, {3, 2}}),
      make(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
      // triangular prism
      make(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}})};
  for (const auto& p : simples) {
    REQUIRE(is_simple(p));
    CHECK(toric_ih_oracle(p) == simple_h_from_f(p));
  }
  CHECK(!is_simple(octahedron()));
}

TEST_CASE("oracle equals engine on a randomized corpus") {
  Engine engine;
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> coord(0, 3);
  std::uniform_int_distribution<int> count(3, 7);
  int done = 0;
  for (int trial = 0; done < 50; ++trial) {
    REQUIRE(trial < 200);
    int d = 1 + trial % 3;
    std::vector<RatVec> pts;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
      RatVec v(size_t(d), Rational(0));
      for (auto& x : v) x = Rational(coord(rng));
      pts.push_back(v);
    }
    RationalPolytope p = polytope_from_vertices(d, pts);
    VarietyDescriptor v = make_variety(torus_datum(d), p);
    CHECK(engine.global_ih(v)->global == toric_ih_oracle(p));
    ++done;
  }
}
