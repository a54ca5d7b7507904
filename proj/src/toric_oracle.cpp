#include "redih/toric_oracle.hpp"

#include <algorithm>
#include <cassert>

namespace redih {

void validate_eulerian(const EulerianPoset& p) {
  if (p.size <= 0) throw NotEulerian("empty poset");
  if (p.bottom < 0 || p.top < 0) throw NotEulerian("poset without bottom or top");
  for (int i = 0; i < p.size; ++i) {
    if (!p.leq[p.bottom][i] || !p.leq[i][p.top])
      throw NotEulerian("element outside [bottom, top]");
    if (!p.leq[i][i]) throw NotEulerian("order is not reflexive");
  }
  if (p.rank[p.bottom] != 0) throw NotEulerian("bottom has nonzero rank");
  // covers must raise the rank by exactly one
  for (int i = 0; i < p.size; ++i)
    for (int j = 0; j < p.size; ++j) {
      if (!p.less(i, j)) continue;
      if (p.rank[i] >= p.rank[j]) throw NotEulerian("order violates the rank function");
      bool cover = true;
      for (int z = 0; z < p.size && cover; ++z)
        if (p.less(i, z) && p.less(z, j)) cover = false;
      if (cover && p.rank[j] != p.rank[i] + 1)
        throw NotEulerian("cover step skips a rank");
    }
  // every rank-2 interval has exactly 4 elements
  for (int i = 0; i < p.size; ++i)
    for (int j = 0; j < p.size; ++j) {
      if (!p.less(i, j) || p.rank[j] != p.rank[i] + 2) continue;
      int count = 0;
      for (int z = 0; z < p.size; ++z)
        if (p.leq[i][z] && p.leq[z][j]) ++count;
      if (count != 4) throw NotEulerian("rank-2 interval with " + std::to_string(count) +
                                        " elements");
    }
}

EulerianPoset face_poset(const RationalPolytope& p) {
  std::vector<Face> faces = enumerate_faces(p);
  EulerianPoset poset;
  poset.size = int(faces.size()) + 1;  // plus the empty face
  poset.rank.assign(poset.size, 0);
  poset.leq.assign(poset.size, std::vector<bool>(poset.size, false));
  poset.bottom = 0;
  for (int i = 0; i < poset.size; ++i) poset.leq[0][i] = true;
  poset.leq[0][0] = true;
  for (size_t a = 0; a < faces.size(); ++a) {
    poset.rank[a + 1] = faces[a].dim + 1;
    for (size_t b = 0; b < faces.size(); ++b) {
      bool subset = std::includes(faces[b].vertex_indices.begin(),
                                  faces[b].vertex_indices.end(),
                                  faces[a].vertex_indices.begin(),
                                  faces[a].vertex_indices.end());
      if (subset) poset.leq[a + 1][b + 1] = true;
    }
    if (faces[a].dim == p.dim) poset.top = int(a) + 1;
  }
  return poset;
}

EulerianPoset reversed(const EulerianPoset& p) {
  EulerianPoset r;
  r.size = p.size;
  r.bottom = p.top;
  r.top = p.bottom;
  int max_rank = 0;
  for (int i = 0; i < p.size; ++i) max_rank = std::max(max_rank, p.rank[i]);
  r.rank.resize(p.size);
  for (int i = 0; i < p.size; ++i) r.rank[i] = max_rank - p.rank[i];
  r.leq.assign(p.size, std::vector<bool>(p.size, false));
  for (int i = 0; i < p.size; ++i)
    for (int j = 0; j < p.size; ++j) r.leq[i][j] = p.leq[j][i];
  return r;
}

namespace {

QPolynomial g_from_h(const QPolynomial& h) {
  int deg = h.degree();
  IntVec c;
  for (int j = 0; 2 * j <= deg; ++j) c.push_back(h.coefficient(j) - h.coefficient(j - 1));
  return QPolynomial::from_coefficients(std::move(c));
}

}  // namespace

GHResult gh(const EulerianPoset& p) {
  validate_eulerian(p);
  // g for each lower interval [bottom, y], in rank order
  std::vector<int> order(p.size);
  for (int i = 0; i < p.size; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return p.rank[a] < p.rank[b]; });

  std::vector<QPolynomial> g(p.size), h(p.size);
  QPolynomial q_minus_1 = QPolynomial::from_coefficients({-1, 1});
  for (int y : order) {
    if (y == p.bottom) {
      h[y] = QPolynomial::one();
      g[y] = QPolynomial::one();
      continue;
    }
    QPolynomial acc;
    for (int z = 0; z < p.size; ++z) {
      if (!p.less(z, y)) continue;
      QPolynomial term = g[z];
      for (int e = 0; e < p.rank[y] - p.rank[z] - 1; ++e) term = term * q_minus_1;
      acc = acc + term;
    }
    h[y] = acc;
    g[y] = g_from_h(acc);
  }
  return {h[p.top], g[p.top]};
}

QPolynomial toric_ih_oracle(const RationalPolytope& delta) {
  if (!delta.is_lattice())
    throw NoLatticePoint("toric oracle needs a lattice polytope");
  return gh(reversed(face_poset(delta))).h;
}

}  // namespace redih
