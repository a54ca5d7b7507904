#pragma once

// Independent combinatorial oracle for the toric case: the g/h recursion
// on the order-reversed face lattice. Works purely on the abstract poset,
// with no cones or links, so it cross-checks the engine's geometric path.

#include <vector>

#include "redih/polyhedra.hpp"
#include "redih/qpolynomial.hpp"

namespace redih {

struct EulerianPoset {
  int size = 0;
  std::vector<int> rank;                  // rank[bottom] = 0
  std::vector<std::vector<bool>> leq;     // leq[i][j] : i <= j
  int bottom = -1, top = -1;

  bool less(int i, int j) const { return i != j && leq[i][j]; }
};

// Graded with unique bottom and top, every cover step raises rank by one,
// and every rank-2 interval has exactly 4 elements. Throws NotEulerian.
void validate_eulerian(const EulerianPoset& p);

// Face lattice of the polytope, empty face included as the bottom.
EulerianPoset face_poset(const RationalPolytope& p);

EulerianPoset reversed(const EulerianPoset& p);

struct GHResult {
  QPolynomial h, g;
};

// h(P) = sum over proper elements z of g([bottom, z]) (q-1)^{rank gap - 1},
// with g of the bottom equal to 1; g truncates the difference sequence
// h_j - h_{j-1} to j <= floor(deg h / 2).
GHResult gh(const EulerianPoset& p);

// h of the order-reversed face lattice: the intersection cohomology
// Poincare polynomial of the toric variety of the polytope's normal fan.
QPolynomial toric_ih_oracle(const RationalPolytope& delta);

}  // namespace redih
