#pragma once

// Root data and fully enumerated Weyl groups: simple roots and coroots in
// a weight lattice, reflection closure, length function, parabolic and
// coset Poincare polynomials. Groups are enumerated outright; desk-scale
// data keeps them tiny and makes stabilizer computations exact.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "redih/exactmath.hpp"
#include "redih/qpolynomial.hpp"

namespace redih {

struct RootDatum {
  int rank = 0;                         // dimension of the weight lattice
  std::vector<IntVec> simple_roots;     // the set Pi
  std::vector<IntVec> simple_coroots;   // functionals, paired by index
  std::string label;

  int num_simple() const { return int(simple_roots.size()); }
  Int pairing(int coroot_index, const IntVec& x) const;
  Rational pairing(int coroot_index, const RatVec& x) const;
  IntMatrix cartan_matrix() const;  // C_ij = <a_i^vee, a_j>
};

// Checks all RootDatum invariants: matching counts, <a_i^vee, a_i> = 2,
// nonpositive off-diagonal Cartan entries with symmetric vanishing, and
// linear independence of the simple roots.
void validate(const RootDatum& rd);

struct WeylGroup {
  std::vector<IntMatrix> elements;  // elements[0] is the identity
  std::vector<int> lengths;         // inversion counts
  std::vector<IntVec> positive_roots;
  std::vector<int> simple_reflections;  // element index of s_i

  size_t size() const { return elements.size(); }
  int index_of(const IntMatrix& m) const;  // -1 when absent
  int mul(int i, int j) const;
  bool is_positive_root(const IntVec& beta) const;

  std::map<std::string, int> element_index;
  std::set<std::string> positive_root_keys;
};

std::string matrix_key(const IntMatrix& m);

// Closure of the simple reflections s_a(x) = x - <a^vee, x> a under
// composition, with lengths and positive roots. Throws OrderExceeded when
// the group grows past max_order.
WeylGroup generate_weyl(const RootDatum& rd, int max_order = 2048);

// Element indices of the standard parabolic subgroup W_S.
std::vector<int> parabolic_subgroup(const WeylGroup& w, const std::vector<int>& s);

// Positive roots lying in the span of the simple roots indexed by s.
std::vector<IntVec> positive_roots_in_span(const RootDatum& rd, const WeylGroup& w,
                                           const std::vector<int>& s);

struct ParabolicData {
  std::vector<int> subset;        // S, indices into Pi
  std::vector<int> elements;      // W_S as element indices
  std::vector<IntVec> roots;      // Phi_S, both signs
};

ParabolicData parabolic_data(const RootDatum& rd, const WeylGroup& w,
                             const std::vector<int>& s);

// Sum of q^{l(w)} over W_S.
QPolynomial parabolic_poincare(const RootDatum& rd, const WeylGroup& w,
                               const std::vector<int>& s);

// Sum of q^{l(w)} over the minimal-length coset representatives
// W^I = { w : w(a) positive for every a in I }. Always equals the exact
// quotient of the full group polynomial by parabolic_poincare(I).
QPolynomial quotient_poincare(const RootDatum& rd, const WeylGroup& w,
                              const std::vector<int>& i);

// True iff <a^vee, point> >= 0 for every simple root (closed chamber).
bool dominant_side(const RootDatum& rd, const RatVec& point);

// ---------------------------------------------------------------------------
// Convenience constructors

RootDatum torus_datum(int rank);
RootDatum gl2_datum();

// Simply-connected realization from a Cartan matrix: coroots are the
// coordinate functionals, the j-th simple root is the j-th column of C.
RootDatum from_cartan_matrix(const IntMatrix& c, std::string label);

RootDatum type_a(int n);  // GL(n+1)-style realization in Z^{n+1}
RootDatum type_b(int n);
RootDatum type_c(int n);
RootDatum type_d(int n);
RootDatum type_g2();
RootDatum product(const RootDatum& a, const RootDatum& b, std::string label);

// Named presets: "torus1".."torus4", "A1", "A1xA1", "A2", "B2", "G2", "GL2".
RootDatum preset_root_datum(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace redih
