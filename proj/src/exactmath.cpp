#include "redih/exactmath.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace redih {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  auto dot_pos = s.find('.');
  if (dot_pos == std::string::npos) {
    // integer or "a/b"
    try {
      Rational r(s);
      if (r.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument&) {
      throw InputError("bad rational literal '" + s + "'");
    }
  }
  std::string head = s.substr(0, dot_pos);
  std::string tail = s.substr(dot_pos + 1);
  bool negative = !head.empty() && head[0] == '-';
  if (!head.empty() && (head[0] == '-' || head[0] == '+')) head = head.substr(1);
  if (head.empty()) head = "0";
  if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos ||
      head.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("bad rational literal '" + s + "'");
  Int scale = 1;
  for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
  Int num = Int(head) * scale + Int(tail);
  if (negative) num = -num;
  return make_rational(num, scale);
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Int dot(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Rational dot(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec to_rational(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

bool is_lattice_vector(const RatVec& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

IntVec to_integer(const RatVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (!is_integer(v[i])) throw InputError("vector entry is not an integer");
    r[i] = v[i].get_num();
  }
  return r;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return v;
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

IntVec clear_denominators(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_num() * (l / v[i].get_den());
  return primitive(r);
}

std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_num().get_str();
    if (v[i].get_den() != 1) s += "/" + v[i].get_den().get_str();
  }
  return s + ")";
}

std::string vector_key(const IntVec& v) {
  std::string s;
  for (const auto& x : v) s += ":" + x.get_str();
  return s;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
  assert(cols == o.rows);
  IntMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

IntVec IntMatrix::apply(const IntVec& x) const {
  assert(int(x.size()) == cols);
  IntVec r(rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r[i] += at(i, j) * x[j];
  return r;
}

RatVec IntMatrix::apply(const RatVec& x) const {
  assert(int(x.size()) == cols);
  RatVec r(rows, Rational(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r[i] += Rational(at(i, j)) * x[j];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntVec IntMatrix::row(int i) const {
  IntVec r(cols);
  for (int j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

IntVec IntMatrix::col(int j) const {
  IntVec r(rows);
  for (int i = 0; i < rows; ++i) r[i] = at(i, j);
  return r;
}

Int determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw InputError("determinant of a non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows != m.cols) return false;
  Int d = determinant(m);
  return d == 1 || d == -1;
}

// ---------------------------------------------------------------------------
// RatMatrix, rational Gaussian elimination

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    assert(rows[i].size() == rows[0].size());
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_cols(const std::vector<RatVec>& cols) {
  if (cols.empty()) return RatMatrix();
  RatMatrix m(int(cols[0].size()), int(cols.size()));
  for (int j = 0; j < m.cols; ++j) {
    assert(cols[j].size() == cols[0].size());
    for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(RatMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(p, j));
    Rational inv = m.at(row, col);
    for (int j = col; j < m.cols; ++j) m.at(row, j) /= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(const RatMatrix& m) {
  RatMatrix c = m;
  return int(row_reduce(c).size());
}

int rank_of_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return 0;
  return rank(RatMatrix::from_rows(rows));
}

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
  assert(int(b.size()) == a.rows);
  RatMatrix aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  std::vector<int> pivots = row_reduce(aug);
  for (int p : pivots)
    if (p == a.cols) return std::nullopt;  // row (0 ... 0 | 1)
  RatVec x(a.cols, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), a.cols);
  return x;
}

std::vector<RatVec> kernel(const RatMatrix& a) {
  RatMatrix m = a;
  std::vector<int> pivots = row_reduce(m);
  std::vector<bool> is_pivot(a.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (int f = 0; f < a.cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec x(a.cols, Rational(0));
    x[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m.at(int(r), f);
    basis.push_back(x);
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct SnfWork {
  IntMatrix s, u, u_inv, v;

  // row_i += k * row_j on s and u; the inverse column operation on u_inv
  void row_add(int i, int j, const Int& k) {
    for (int c = 0; c < s.cols; ++c) s.at(i, c) += k * s.at(j, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) += k * u.at(j, c);
    for (int r = 0; r < u_inv.rows; ++r) u_inv.at(r, j) -= k * u_inv.at(r, i);
  }
  void row_swap(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < s.cols; ++c) std::swap(s.at(i, c), s.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    for (int r = 0; r < u_inv.rows; ++r) std::swap(u_inv.at(r, i), u_inv.at(r, j));
  }
  void row_negate(int i) {
    for (int c = 0; c < s.cols; ++c) s.at(i, c) = -s.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    for (int r = 0; r < u_inv.rows; ++r) u_inv.at(r, i) = -u_inv.at(r, i);
  }
  void col_add(int i, int j, const Int& k) {  // col_i += k * col_j
    for (int r = 0; r < s.rows; ++r) s.at(r, i) += k * s.at(r, j);
    for (int r = 0; r < v.rows; ++r) v.at(r, i) += k * v.at(r, j);
  }
  void col_swap(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < s.rows; ++r) std::swap(s.at(r, i), s.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }

  bool lone(int t) const {
    for (int i = t + 1; i < s.rows; ++i)
      if (s.at(i, t) != 0) return false;
    for (int j = t + 1; j < s.cols; ++j)
      if (s.at(t, j) != 0) return false;
    return true;
  }

  // Smallest nonzero |entry| in the trailing submatrix, or false if none.
  bool pivot(int t, int& pi, int& pj) const {
    bool found = false;
    Int best;
    for (int i = t; i < s.rows; ++i)
      for (int j = t; j < s.cols; ++j) {
        if (s.at(i, j) == 0) continue;
        Int v = abs(s.at(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          pi = i;
          pj = j;
        }
      }
    return found;
  }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  SnfWork w;
  w.s = m;
  w.u = IntMatrix::identity(m.rows);
  w.u_inv = IntMatrix::identity(m.rows);
  w.v = IntMatrix::identity(m.cols);

  int nmin = std::min(m.rows, m.cols);
  int rank = 0;
  for (int t = 0; t < nmin; ++t) {
    int pi, pj;
    if (!w.pivot(t, pi, pj)) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);
    while (!w.lone(t)) {
      for (int i = t + 1; i < w.s.rows; ++i)
        if (w.s.at(i, t) != 0) w.row_add(i, t, -(w.s.at(i, t) / w.s.at(t, t)));
      for (int j = t + 1; j < w.s.cols; ++j)
        if (w.s.at(t, j) != 0) w.col_add(j, t, -(w.s.at(t, j) / w.s.at(t, t)));
      if (!w.pivot(t, pi, pj)) break;
      w.row_swap(t, pi);
      w.col_swap(t, pj);
    }
    // force d_t | everything below before moving on
    bool retry = true;
    while (retry) {
      retry = false;
      for (int i = t + 1; i < w.s.rows && !retry; ++i)
        for (int j = t + 1; j < w.s.cols && !retry; ++j)
          if (w.s.at(i, j) % w.s.at(t, t) != 0) {
            w.row_add(t, i, 1);
            while (!w.lone(t)) {
              for (int r = t + 1; r < w.s.rows; ++r)
                if (w.s.at(r, t) != 0) w.row_add(r, t, -(w.s.at(r, t) / w.s.at(t, t)));
              for (int c = t + 1; c < w.s.cols; ++c)
                if (w.s.at(t, c) != 0) w.col_add(c, t, -(w.s.at(t, c) / w.s.at(t, t)));
              int qi, qj;
              if (!w.pivot(t, qi, qj)) break;
              w.row_swap(t, qi);
              w.col_swap(t, qj);
            }
            retry = true;
          }
    }
    if (w.s.at(t, t) < 0) w.row_negate(t);
    ++rank;
  }

  SmithNormalForm out;
  out.u = w.u;
  out.u_inv = w.u_inv;
  out.v = w.v;
  out.s = w.s;
  out.rank = rank;
  assert(out.u.mul(m).mul(out.v) == out.s);
  assert(out.u.mul(out.u_inv) == IntMatrix::identity(m.rows));
  return out;
}

std::vector<IntVec> integer_kernel(const IntMatrix& m) {
  if (m.rows == 0) {  // no conditions: kernel is everything
    std::vector<IntVec> basis;
    for (int j = 0; j < m.cols; ++j) {
      IntVec e(m.cols, 0);
      e[j] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  SmithNormalForm snf = smith_normal_form(m);
  std::vector<IntVec> basis;
  for (int j = snf.rank; j < m.cols; ++j) basis.push_back(snf.v.col(j));
  return basis;
}

std::vector<IntVec> saturate(const std::vector<IntVec>& generators, int ambient_rank) {
  std::vector<IntVec> gens;
  for (const auto& g : generators) {
    if (int(g.size()) != ambient_rank)
      throw InputError("saturate: generator of wrong dimension");
    if (!is_zero(g)) gens.push_back(g);
  }
  if (gens.empty()) return {};
  // The saturation is the integer kernel of the orthogonal complement.
  IntMatrix a(int(gens.size()), ambient_rank);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) a.at(i, j) = gens[i][j];
  std::vector<IntVec> ortho = integer_kernel(a);
  IntMatrix b(int(ortho.size()), ambient_rank);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) b.at(i, j) = ortho[i][j];
  return integer_kernel(b);
}

bool same_lattice(const std::vector<IntVec>& a, const std::vector<IntVec>& b, int rank) {
  // Each generator of one set must be an integer combination of the other.
  auto contains = [rank](const std::vector<IntVec>& basis, const IntVec& x) {
    if (is_zero(x)) return true;
    if (basis.empty()) return false;
    // Solve basis^T c = x over Q, then demand integer coordinates. A basis
    // of a lattice gives a unique expansion.
    RatMatrix m(rank, int(basis.size()));
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < int(basis.size()); ++j) m.at(i, j) = Rational(basis[j][i]);
    auto c = solve(m, to_rational(x));
    if (!c) return false;
    return is_lattice_vector(*c);
  };
  for (const auto& x : a)
    if (!contains(b, x)) return false;
  for (const auto& x : b)
    if (!contains(a, x)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin

void StrictSystem::add(RatVec coefficients, Rational constant, Relation relation) {
  constraints.push_back({std::move(coefficients), std::move(constant), relation});
}

int StrictSystem::dimension() const {
  return constraints.empty() ? -1 : int(constraints[0].coefficients.size());
}

namespace {

struct Ineq {
  RatVec a;
  Rational c;
  bool strict;  // a . x > c when set, a . x >= c otherwise
};

std::string ineq_key(const Ineq& q) {
  // scale so that the first nonzero coefficient is +-1
  Rational scale(1);
  for (const auto& x : q.a)
    if (x != 0) {
      scale = abs(x);
      break;
    }
  std::string key = q.strict ? "s" : "w";
  for (const auto& x : q.a) key += ":" + Rational(x / scale).get_str();
  key += "|" + Rational(q.c / scale).get_str();
  return key;
}

// Checks a ground constraint (all coefficients zero). Returns false when
// it is violated.
bool ground_ok(const Ineq& q) { return q.strict ? (0 > q.c) : (0 >= q.c); }

}  // namespace

std::optional<RatVec> solve(const StrictSystem& sys) {
  if (sys.constraints.empty()) return RatVec{};
  size_t n = sys.constraints[0].coefficients.size();
  std::vector<Ineq> current;
  for (const auto& c : sys.constraints) {
    if (c.coefficients.size() != n)
      throw InputError("feasible: constraint dimension mismatch");
    switch (c.relation) {
      case Relation::GreaterEqual:
        current.push_back({c.coefficients, c.constant, false});
        break;
      case Relation::Greater:
        current.push_back({c.coefficients, c.constant, true});
        break;
      case Relation::Equal: {
        current.push_back({c.coefficients, c.constant, false});
        RatVec neg(n);
        for (size_t i = 0; i < n; ++i) neg[i] = -c.coefficients[i];
        current.push_back({std::move(neg), -c.constant, false});
        break;
      }
    }
  }

  // layers[k] = system over variables 0..k, kept for back-substitution
  std::vector<std::vector<Ineq>> layers(n);
  for (int k = int(n) - 1; k >= 0; --k) {
    // split off ground constraints, dedup the rest
    std::vector<Ineq> kept;
    std::set<std::string> seen;
    for (auto& q : current) {
      bool ground = true;
      for (const auto& x : q.a)
        if (x != 0) {
          ground = false;
          break;
        }
      if (ground) {
        if (!ground_ok(q)) return std::nullopt;
        continue;
      }
      if (seen.insert(ineq_key(q)).second) kept.push_back(std::move(q));
    }
    layers[k] = std::move(kept);

    // eliminate variable k
    std::vector<const Ineq*> lower, upper;
    std::vector<Ineq> next;
    for (const auto& q : layers[k]) {
      if (q.a[k] > 0)
        lower.push_back(&q);
      else if (q.a[k] < 0)
        upper.push_back(&q);
      else
        next.push_back(q);
    }
    for (const Ineq* lo : lower)
      for (const Ineq* up : upper) {
        // lo: a.x >= c with a_k > 0; up: b.x >= d with b_k < 0
        Ineq q;
        q.a.resize(n, Rational(0));
        Rational ak = lo->a[k], bk = up->a[k];
        for (size_t i = 0; i < n; ++i) q.a[i] = ak * up->a[i] - bk * lo->a[i];
        q.c = ak * up->c - bk * lo->c;
        q.strict = lo->strict || up->strict;
        assert(q.a[k] == 0);
        if (is_zero(q.a)) {
          if (!ground_ok(q)) return std::nullopt;
        } else {
          next.push_back(std::move(q));
        }
      }
    current = std::move(next);
  }
  for (const auto& q : current)
    if (!ground_ok(q)) return std::nullopt;

  // back-substitution: assign x_0, x_1, ... in order
  RatVec x(n, Rational(0));
  for (size_t k = 0; k < n; ++k) {
    bool has_lower = false, has_upper = false;
    Rational lower, upper;
    bool lower_strict = false, upper_strict = false;
    for (const auto& q : layers[k]) {
      if (q.a[k] == 0) continue;
      Rational residual = q.c;
      for (size_t i = 0; i < k; ++i) residual -= q.a[i] * x[i];
      Rational bound = residual / q.a[k];
      if (q.a[k] > 0) {
        if (!has_lower || bound > lower) {
          lower = bound;
          lower_strict = q.strict;
          has_lower = true;
        } else if (bound == lower && q.strict) {
          lower_strict = true;
        }
      } else {
        if (!has_upper || bound < upper) {
          upper = bound;
          upper_strict = q.strict;
          has_upper = true;
        } else if (bound == upper && q.strict) {
          upper_strict = true;
        }
      }
    }
    if (has_lower && has_upper) {
      if (lower == upper) {
        if (lower_strict || upper_strict)
          throw InvariantError("Fourier-Motzkin back-substitution hit an empty interval");
        x[k] = lower;
      } else {
        assert(lower < upper);
        x[k] = (lower + upper) / 2;
      }
    } else if (has_lower) {
      x[k] = lower_strict ? lower + 1 : lower;
    } else if (has_upper) {
      x[k] = upper_strict ? upper - 1 : upper;
    }  // else unconstrained, keep 0
  }
  return x;
}

bool feasible(const StrictSystem& sys) { return solve(sys).has_value(); }

}  // namespace redih
