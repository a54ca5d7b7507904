#include <algorithm>
#include <deque>
#include <set>

#include "doctest.h"
#include "redih/rootdatum.hpp"

using namespace redih;

namespace {

QPolynomial poly(std::vector<long> c) {
  IntVec v(c.begin(), c.end());
  return QPolynomial::from_coefficients(std::move(v));
}

QPolynomial full_poincare(const RootDatum& rd, const WeylGroup& w) {
  std::vector<int> all(rd.num_simple());
  for (int i = 0; i < rd.num_simple(); ++i) all[i] = i;
  return parabolic_poincare(rd, w, all);
}

// Classical factorization through the degree sequence.
QPolynomial degree_product(std::vector<int> degrees) {
  QPolynomial result = QPolynomial::one();
  for (int d : degrees) {
    IntVec c(size_t(d), Int(1));  // 1 + q + ... + q^{d-1}
    result = result * QPolynomial::from_coefficients(std::move(c));
  }
  return result;
}

// Graph distance from the identity in the Cayley graph on the simple
// reflections; must agree with the inversion-count length.
std::vector<int> cayley_distances(const WeylGroup& w) {
  std::vector<int> dist(w.size(), -1);
  dist[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int s : w.simple_reflections) {
      int next = w.mul(cur, s);
      if (dist[next] < 0) {
        dist[next] = dist[cur] + 1;
        queue.push_back(next);
      }
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("validation") {
  SUBCASE("GL(2) datum is valid") { validate(gl2_datum()); }
  SUBCASE("torus datum is valid") { validate(torus_datum(2)); }
  SUBCASE("pairing 1 instead of 2") {
    RootDatum rd;
    rd.rank = 2;
    rd.simple_roots = {{1, 0}};
    rd.simple_coroots = {{1, 0}};
    CHECK_THROWS_AS(validate(rd), InvalidCartan);
  }
  SUBCASE("positive off-diagonal entry") {
    RootDatum rd;
    rd.rank = 1;
    rd.simple_roots = {{2}, {2}};
    rd.simple_coroots = {{1}, {1}};
    CHECK_THROWS_AS(validate(rd), InvalidCartan);
  }
  SUBCASE("dependent roots") {
    RootDatum rd;
    rd.rank = 1;
    rd.simple_roots = {{2}, {-2}};
    rd.simple_coroots = {{1}, {-1}};
    CHECK_THROWS_AS(validate(rd), DependentRoots);
  }
}

TEST_CASE("Weyl group of GL(2)") {
  RootDatum rd = gl2_datum();
  WeylGroup w = generate_weyl(rd);
  CHECK(w.size() == 2);
  CHECK(std::set<int>(w.lengths.begin(), w.lengths.end()) == std::set<int>{0, 1});
  REQUIRE(w.positive_roots.size() == 1);
  CHECK(w.positive_roots[0] == IntVec{1, -1});
  // the nontrivial element swaps the two coordinates
  const IntMatrix& s = w.elements[w.simple_reflections[0]];
  CHECK(s.apply(IntVec{3, 5}) == IntVec{5, 3});
}

TEST_CASE("Weyl group of a torus is trivial") {
  WeylGroup w = generate_weyl(torus_datum(3));
  CHECK(w.size() == 1);
  CHECK(w.positive_roots.empty());
}

TEST_CASE("Weyl group of A2") {
  RootDatum rd = type_a(2);
  WeylGroup w = generate_weyl(rd);
  CHECK(w.size() == 6);
  CHECK(full_poincare(rd, w) == poly({1, 2, 2, 1}));
  CHECK(full_poincare(rd, w) == poly({1, 1}) * poly({1, 1, 1}));
  CHECK(w.positive_roots.size() == 3);
}

TEST_CASE("order guard") {
  CHECK_THROWS_AS(generate_weyl(type_a(2), 4), OrderExceeded);
}

TEST_CASE("parabolic Poincare polynomials") {
  RootDatum rd = type_a(2);
  WeylGroup w = generate_weyl(rd);
  CHECK(parabolic_poincare(rd, w, {}) == QPolynomial::one());
  CHECK(parabolic_poincare(rd, w, {0}) == poly({1, 1}));
  RootDatum gl2 = gl2_datum();
  WeylGroup wgl = generate_weyl(gl2);
  CHECK(parabolic_poincare(gl2, wgl, {0}) == poly({1, 1}));
}

TEST_CASE("coset Poincare polynomials") {
  RootDatum rd = type_a(2);
  WeylGroup w = generate_weyl(rd);
  CHECK(quotient_poincare(rd, w, {0, 1}) == QPolynomial::one());
  CHECK(quotient_poincare(rd, w, {}) == full_poincare(rd, w));
  CHECK(quotient_poincare(rd, w, {0}) == poly({1, 1, 1}));
  SUBCASE("quotient times parabolic gives the full polynomial, all subsets") {
    for (const RootDatum& datum : {type_a(2), type_b(2), gl2_datum()}) {
      WeylGroup wg = generate_weyl(datum);
      int n = datum.num_simple();
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
          if (mask & (1 << i)) subset.push_back(i);
        CHECK(quotient_poincare(datum, wg, subset) * parabolic_poincare(datum, wg, subset) ==
              full_poincare(datum, wg));
      }
    }
  }
}

TEST_CASE("dominant chamber membership") {
  RootDatum rd = gl2_datum();
  CHECK(dominant_side(rd, {Rational(1), Rational(0)}));
  CHECK(!dominant_side(rd, {Rational(0), Rational(1)}));
  CHECK(dominant_side(rd, {Rational(2), Rational(2)}));  // wall counts
  CHECK(dominant_side(torus_datum(2), {Rational(-5), Rational(7)}));
}

TEST_CASE("classical factorizations of the group polynomial") {
  struct Fixture {
    RootDatum rd;
    std::vector<int> degrees;
  };
  std::vector<Fixture> fixtures;
  fixtures.push_back({preset_root_datum("A1"), {2}});
  fixtures.push_back({preset_root_datum("A1xA1"), {2, 2}});
  fixtures.push_back({type_a(2), {2, 3}});
  fixtures.push_back({type_b(2), {2, 4}});
  fixtures.push_back({type_c(2), {2, 4}});
  fixtures.push_back({type_g2(), {2, 6}});
  for (const auto& f : fixtures) {
    WeylGroup w = generate_weyl(f.rd);
    CHECK(full_poincare(f.rd, w) == degree_product(f.degrees));
  }
}

TEST_CASE("inversion length equals Cayley distance") {
  for (const RootDatum& rd :
       {gl2_datum(), preset_root_datum("A1xA1"), type_a(2), type_b(2), type_g2(), type_a(3)}) {
    WeylGroup w = generate_weyl(rd);
    REQUIRE(w.size() <= 48);
    std::vector<int> dist = cayley_distances(w);
    for (size_t e = 0; e < w.size(); ++e) CHECK(dist[e] == w.lengths[e]);
  }
}

TEST_CASE("presets") {
  for (const auto& name : preset_names()) {
    RootDatum rd = preset_root_datum(name);
    validate(rd);
    generate_weyl(rd);
  }
  CHECK_THROWS_AS(preset_root_datum("E8"), InputError);
  CHECK(preset_root_datum("GL2").rank == 2);
  CHECK(preset_root_datum("torus3").num_simple() == 0);
}

TEST_CASE("parabolic data bundles subgroup and subsystem") {
  RootDatum rd = type_a(2);
  WeylGroup w = generate_weyl(rd);
  ParabolicData pd = parabolic_data(rd, w, {0});
  CHECK(pd.elements.size() == 2);
  CHECK(pd.roots.size() == 2);
  ParabolicData full = parabolic_data(rd, w, {0, 1});
  CHECK(full.elements.size() == 6);
  CHECK(full.roots.size() == 6);
  // W_S is a subgroup: closed under multiplication
  for (int a : pd.elements)
    for (int b : pd.elements) {
      int c = w.mul(a, b);
      CHECK(std::find(pd.elements.begin(), pd.elements.end(), c) != pd.elements.end());
    }
}

TEST_CASE("product datum") {
  RootDatum rd = product(preset_root_datum("A1"), preset_root_datum("A1"), "A1xA1-explicit");
  WeylGroup w = generate_weyl(rd);
  CHECK(w.size() == 4);
  CHECK(full_poincare(rd, w) == poly({1, 2, 1}));
}
