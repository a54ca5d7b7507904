#include "redih/rootdatum.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace redih {

Int RootDatum::pairing(int coroot_index, const IntVec& x) const {
  return dot(simple_coroots[coroot_index], x);
}

Rational RootDatum::pairing(int coroot_index, const RatVec& x) const {
  return dot(simple_coroots[coroot_index], x);
}

IntMatrix RootDatum::cartan_matrix() const {
  int s = num_simple();
  IntMatrix c(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) c.at(i, j) = pairing(i, simple_roots[j]);
  return c;
}

void validate(const RootDatum& rd) {
  if (rd.rank < 0) throw InputError("root datum with negative rank");
  if (rd.simple_roots.size() != rd.simple_coroots.size())
    throw InvalidCartan("mismatched numbers of simple roots and coroots");
  for (const auto& a : rd.simple_roots)
    if (int(a.size()) != rd.rank) throw InputError("simple root of wrong dimension");
  for (const auto& a : rd.simple_coroots)
    if (int(a.size()) != rd.rank) throw InputError("simple coroot of wrong dimension");
  int s = rd.num_simple();
  IntMatrix c = rd.cartan_matrix();
  for (int i = 0; i < s; ++i) {
    if (c.at(i, i) != 2)
      throw InvalidCartan("<a_i^vee, a_i> = " + c.at(i, i).get_str() + ", expected 2");
    for (int j = 0; j < s; ++j) {
      if (i == j) continue;
      if (c.at(i, j) > 0) throw InvalidCartan("positive off-diagonal Cartan entry");
      if ((c.at(i, j) == 0) != (c.at(j, i) == 0))
        throw InvalidCartan("asymmetric vanishing in the Cartan matrix");
    }
  }
  std::vector<RatVec> rows;
  for (const auto& a : rd.simple_roots) rows.push_back(to_rational(a));
  if (rank_of_rows(rows) != s) throw DependentRoots("simple roots are linearly dependent");
}

// ---------------------------------------------------------------------------

std::string matrix_key(const IntMatrix& m) {
  std::string s = std::to_string(m.rows) + "x" + std::to_string(m.cols);
  for (const auto& x : m.a) s += ":" + x.get_str();
  return s;
}

int WeylGroup::index_of(const IntMatrix& m) const {
  auto it = element_index.find(matrix_key(m));
  return it == element_index.end() ? -1 : it->second;
}

int WeylGroup::mul(int i, int j) const {
  int k = index_of(elements[i].mul(elements[j]));
  assert(k >= 0);
  return k;
}

bool WeylGroup::is_positive_root(const IntVec& beta) const {
  return positive_root_keys.count(vector_key(beta)) > 0;
}

namespace {

IntMatrix reflection_matrix(const RootDatum& rd, int i) {
  IntMatrix m = IntMatrix::identity(rd.rank);
  const IntVec& root = rd.simple_roots[i];
  const IntVec& coroot = rd.simple_coroots[i];
  for (int r = 0; r < rd.rank; ++r)
    for (int c = 0; c < rd.rank; ++c) m.at(r, c) -= root[r] * coroot[c];
  return m;
}

}  // namespace

WeylGroup generate_weyl(const RootDatum& rd, int max_order) {
  validate(rd);
  WeylGroup w;
  int s = rd.num_simple();
  std::vector<IntMatrix> gens;
  for (int i = 0; i < s; ++i) gens.push_back(reflection_matrix(rd, i));

  IntMatrix id = IntMatrix::identity(rd.rank);
  w.elements.push_back(id);
  w.element_index[matrix_key(id)] = 0;
  std::deque<int> todo{0};
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      IntMatrix next = w.elements[cur].mul(g);
      std::string key = matrix_key(next);
      if (w.element_index.count(key)) continue;
      if (int(w.elements.size()) >= max_order)
        throw OrderExceeded("Weyl group order exceeds " + std::to_string(max_order));
      w.element_index[key] = int(w.elements.size());
      todo.push_back(int(w.elements.size()));
      w.elements.push_back(std::move(next));
    }
  }
  w.simple_reflections.resize(s);
  for (int i = 0; i < s; ++i) w.simple_reflections[i] = w.index_of(gens[i]);

  // All roots: the W-orbit of the simple roots. A root is positive when its
  // (unique) expansion in the simple roots has nonnegative coordinates.
  std::set<std::string> seen;
  std::vector<IntVec> roots;
  for (const auto& a : rd.simple_roots)
    for (const auto& m : w.elements) {
      IntVec beta = m.apply(a);
      if (seen.insert(vector_key(beta)).second) roots.push_back(beta);
    }
  RatMatrix root_cols(rd.rank, s);
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < s; ++j) root_cols.at(i, j) = Rational(rd.simple_roots[j][i]);
  for (const auto& beta : roots) {
    auto coords = solve(root_cols, to_rational(beta));
    if (!coords) throw InvariantError("root outside the span of the simple roots");
    bool nonneg = true, nonpos = true;
    for (const auto& c : *coords) {
      if (c < 0) nonneg = false;
      if (c > 0) nonpos = false;
    }
    if (!nonneg && !nonpos)
      throw InvariantError("root with mixed signs in the simple basis");
    if (nonneg) {
      w.positive_roots.push_back(beta);
      w.positive_root_keys.insert(vector_key(beta));
    }
  }
  if (roots.size() != 2 * w.positive_roots.size())
    throw InvariantError("|Phi| != 2 |Phi^+|");

  // l(w) = number of positive roots sent to negative ones
  w.lengths.resize(w.elements.size());
  size_t max_len = 0;
  for (size_t e = 0; e < w.elements.size(); ++e) {
    int inv = 0;
    for (const auto& beta : w.positive_roots) {
      IntVec img = w.elements[e].apply(beta);
      for (auto& x : img) x = -x;
      if (w.is_positive_root(img)) ++inv;
    }
    w.lengths[e] = inv;
    max_len = std::max(max_len, size_t(inv));
  }
  if (!w.positive_roots.empty() && max_len != w.positive_roots.size())
    throw InvariantError("maximal length differs from |Phi^+|");
  return w;
}

std::vector<int> parabolic_subgroup(const WeylGroup& w, const std::vector<int>& s) {
  std::set<int> members{0};
  std::deque<int> todo{0};
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop_front();
    for (int i : s) {
      int next = w.mul(cur, w.simple_reflections[i]);
      if (members.insert(next).second) todo.push_back(next);
    }
  }
  return std::vector<int>(members.begin(), members.end());
}

std::vector<IntVec> positive_roots_in_span(const RootDatum& rd, const WeylGroup& w,
                                           const std::vector<int>& s) {
  int ns = rd.num_simple();
  RatMatrix root_cols(rd.rank, ns);
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < ns; ++j) root_cols.at(i, j) = Rational(rd.simple_roots[j][i]);
  std::vector<bool> allowed(ns, false);
  for (int i : s) allowed[i] = true;
  std::vector<IntVec> result;
  for (const auto& beta : w.positive_roots) {
    auto coords = solve(root_cols, to_rational(beta));
    assert(coords);
    bool in_span = true;
    for (int j = 0; j < ns; ++j)
      if (!allowed[j] && (*coords)[j] != 0) in_span = false;
    if (in_span) result.push_back(beta);
  }
  return result;
}

ParabolicData parabolic_data(const RootDatum& rd, const WeylGroup& w,
                             const std::vector<int>& s) {
  ParabolicData pd;
  pd.subset = s;
  pd.elements = parabolic_subgroup(w, s);
  for (const auto& beta : positive_roots_in_span(rd, w, s)) {
    pd.roots.push_back(beta);
    IntVec neg(beta.size());
    for (size_t i = 0; i < beta.size(); ++i) neg[i] = -beta[i];
    pd.roots.push_back(std::move(neg));
  }
  return pd;
}

QPolynomial parabolic_poincare(const RootDatum& rd, const WeylGroup& w,
                               const std::vector<int>& s) {
  (void)rd;
  QPolynomial p;
  for (int e : parabolic_subgroup(w, s)) p = p + QPolynomial::monomial(1, w.lengths[e]);
  return p;
}

QPolynomial quotient_poincare(const RootDatum& rd, const WeylGroup& w,
                              const std::vector<int>& i) {
  QPolynomial p;
  for (size_t e = 0; e < w.elements.size(); ++e) {
    bool minimal = true;
    for (int idx : i) {
      if (!w.is_positive_root(w.elements[e].apply(rd.simple_roots[idx]))) {
        minimal = false;
        break;
      }
    }
    if (minimal) p = p + QPolynomial::monomial(1, w.lengths[e]);
  }
  // W(q) = W^I(q) * W_I(q) exactly, for every I
  std::vector<int> all(rd.num_simple());
  for (int k = 0; k < rd.num_simple(); ++k) all[k] = k;
  QPolynomial full = parabolic_poincare(rd, w, all);
  if (p * parabolic_poincare(rd, w, i) != full)
    throw InvariantError("coset polynomial does not divide the group polynomial");
  return p;
}

bool dominant_side(const RootDatum& rd, const RatVec& point) {
  if (int(point.size()) != rd.rank) throw InputError("dominant_side: wrong dimension");
  for (int i = 0; i < rd.num_simple(); ++i)
    if (rd.pairing(i, point) < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

RootDatum torus_datum(int rank) {
  RootDatum rd;
  rd.rank = rank;
  rd.label = "torus" + std::to_string(rank);
  return rd;
}

RootDatum gl2_datum() {
  RootDatum rd;
  rd.rank = 2;
  rd.simple_roots = {{1, -1}};
  rd.simple_coroots = {{1, -1}};
  rd.label = "GL2";
  return rd;
}

RootDatum from_cartan_matrix(const IntMatrix& c, std::string label) {
  RootDatum rd;
  rd.rank = c.rows;
  for (int j = 0; j < c.cols; ++j) rd.simple_roots.push_back(c.col(j));
  for (int i = 0; i < c.rows; ++i) {
    IntVec e(c.rows, 0);
    e[i] = 1;
    rd.simple_coroots.push_back(e);
  }
  rd.label = std::move(label);
  validate(rd);
  return rd;
}

namespace {

IntVec unit(int n, int i, int sign = 1) {
  IntVec e(n, 0);
  e[i] = sign;
  return e;
}

IntVec unit_diff(int n, int i, int j) {
  IntVec e(n, 0);
  e[i] = 1;
  e[j] = -1;
  return e;
}

}  // namespace

RootDatum type_a(int n) {
  if (n < 1) throw InputError("type A rank must be >= 1");
  RootDatum rd;
  rd.rank = n + 1;
  for (int i = 0; i < n; ++i) {
    rd.simple_roots.push_back(unit_diff(n + 1, i, i + 1));
    rd.simple_coroots.push_back(unit_diff(n + 1, i, i + 1));
  }
  rd.label = "A" + std::to_string(n);
  return rd;
}

RootDatum type_b(int n) {
  if (n < 2) throw InputError("type B rank must be >= 2");
  RootDatum rd;
  rd.rank = n;
  for (int i = 0; i + 1 < n; ++i) {
    rd.simple_roots.push_back(unit_diff(n, i, i + 1));
    rd.simple_coroots.push_back(unit_diff(n, i, i + 1));
  }
  rd.simple_roots.push_back(unit(n, n - 1));
  rd.simple_coroots.push_back(unit(n, n - 1, 2));
  rd.label = "B" + std::to_string(n);
  return rd;
}

RootDatum type_c(int n) {
  if (n < 2) throw InputError("type C rank must be >= 2");
  RootDatum rd;
  rd.rank = n;
  for (int i = 0; i + 1 < n; ++i) {
    rd.simple_roots.push_back(unit_diff(n, i, i + 1));
    rd.simple_coroots.push_back(unit_diff(n, i, i + 1));
  }
  rd.simple_roots.push_back(unit(n, n - 1, 2));
  rd.simple_coroots.push_back(unit(n, n - 1));
  rd.label = "C" + std::to_string(n);
  return rd;
}

RootDatum type_d(int n) {
  if (n < 3) throw InputError("type D rank must be >= 3");
  RootDatum rd;
  rd.rank = n;
  for (int i = 0; i + 1 < n; ++i) {
    rd.simple_roots.push_back(unit_diff(n, i, i + 1));
    rd.simple_coroots.push_back(unit_diff(n, i, i + 1));
  }
  IntVec last(n, 0);
  last[n - 2] = 1;
  last[n - 1] = 1;
  rd.simple_roots.push_back(last);
  rd.simple_coroots.push_back(last);
  rd.label = "D" + std::to_string(n);
  return rd;
}

RootDatum type_g2() {
  IntMatrix c(2, 2);
  c.at(0, 0) = 2;
  c.at(0, 1) = -1;
  c.at(1, 0) = -3;
  c.at(1, 1) = 2;
  return from_cartan_matrix(c, "G2");
}

RootDatum product(const RootDatum& a, const RootDatum& b, std::string label) {
  RootDatum rd;
  rd.rank = a.rank + b.rank;
  auto pad_left = [&](const IntVec& v) {
    IntVec r(rd.rank, 0);
    for (int i = 0; i < a.rank; ++i) r[i] = v[i];
    return r;
  };
  auto pad_right = [&](const IntVec& v) {
    IntVec r(rd.rank, 0);
    for (int i = 0; i < b.rank; ++i) r[a.rank + i] = v[i];
    return r;
  };
  for (size_t i = 0; i < a.simple_roots.size(); ++i) {
    rd.simple_roots.push_back(pad_left(a.simple_roots[i]));
    rd.simple_coroots.push_back(pad_left(a.simple_coroots[i]));
  }
  for (size_t i = 0; i < b.simple_roots.size(); ++i) {
    rd.simple_roots.push_back(pad_right(b.simple_roots[i]));
    rd.simple_coroots.push_back(pad_right(b.simple_coroots[i]));
  }
  rd.label = std::move(label);
  return rd;
}

RootDatum preset_root_datum(const std::string& name) {
  if (name == "torus1") return torus_datum(1);
  if (name == "torus2") return torus_datum(2);
  if (name == "torus3") return torus_datum(3);
  if (name == "torus4") return torus_datum(4);
  if (name == "GL2") return gl2_datum();
  if (name == "A1") {
    RootDatum rd;
    rd.rank = 1;
    rd.simple_roots = {{2}};
    rd.simple_coroots = {{1}};
    rd.label = "A1";
    return rd;
  }
  if (name == "A1xA1") {
    RootDatum rd;
    rd.rank = 2;
    rd.simple_roots = {{2, 0}, {0, 2}};
    rd.simple_coroots = {{1, 0}, {0, 1}};
    rd.label = "A1xA1";
    return rd;
  }
  if (name == "A2") return type_a(2);
  if (name == "B2") return type_b(2);
  if (name == "G2") return type_g2();
  throw InputError("unknown root datum preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  return {"torus1", "torus2", "torus3", "torus4", "A1", "A1xA1", "A2", "B2", "G2", "GL2"};
}

}  // namespace redih
