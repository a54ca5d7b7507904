#include "redih/polyhedra.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace redih {

namespace {

std::string ratvec_key(const RatVec& v) {
  std::string s;
  for (const auto& x : v) s += ":" + x.get_str();
  return s;
}

bool ratvec_less(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

}  // namespace

bool RationalPolytope::facet_tight(int facet, const RatVec& point) const {
  return dot(facets[facet].covector, point) == facets[facet].constant;
}

bool RationalPolytope::is_lattice() const {
  for (const auto& v : vertices)
    if (!is_lattice_vector(v)) return false;
  return true;
}

std::string RationalPolytope::key() const {
  std::string s = "P" + std::to_string(ambient_rank);
  for (const auto& v : vertices) s += "|" + ratvec_key(v);
  return s;
}

bool RationalPolytope::same_vertex_set(const RationalPolytope& o) const {
  return ambient_rank == o.ambient_rank && vertices == o.vertices;
}

// ---------------------------------------------------------------------------

RationalPolytope polytope_from_vertices(int ambient_rank, std::vector<RatVec> points) {
  if (points.empty()) throw InputError("polytope needs at least one point");
  for (const auto& p : points)
    if (int(p.size()) != ambient_rank) throw InputError("point of wrong dimension");

  std::sort(points.begin(), points.end(), ratvec_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  int m = int(points.size());

  RationalPolytope poly;
  poly.ambient_rank = ambient_rank;

  // Affine hull: basis of the difference span and integer equations for it.
  const RatVec& p0 = points[0];
  std::vector<RatVec> diffs;
  for (int i = 1; i < m; ++i) diffs.push_back(sub(points[i], p0));
  std::vector<RatVec> basis;  // greedily chosen independent differences
  for (const auto& d : diffs) {
    basis.push_back(d);
    if (rank_of_rows(basis) != int(basis.size())) basis.pop_back();
  }
  int dim = int(basis.size());
  poly.dim = dim;

  if (ambient_rank > 0) {
    std::vector<IntVec> int_diffs;
    for (const auto& d : diffs) {
      IntVec v = clear_denominators(d);
      if (!is_zero(v)) int_diffs.push_back(v);
    }
    IntMatrix dm(int(int_diffs.size()), ambient_rank);
    for (int i = 0; i < dm.rows; ++i)
      for (int j = 0; j < ambient_rank; ++j) dm.at(i, j) = int_diffs[i][j];
    for (const auto& cov : integer_kernel(dm))
      poly.affine_hull.push_back({cov, dot(cov, p0)});
  }

  if (dim == 0) {
    poly.vertices = {p0};
    return poly;
  }

  // Coordinates inside the affine hull: x = p0 + B y.
  RatMatrix bmat = RatMatrix::from_cols(basis);
  std::vector<RatVec> coords(m);
  for (int i = 0; i < m; ++i) {
    auto y = solve(bmat, sub(points[i], p0));
    assert(y);
    coords[i] = *y;
  }

  // Supporting hyperplanes spanned by dim-subsets of the points.
  struct HullFacet {
    IntVec normal;  // in hull coordinates, primitive, polytope on the >= side
    Rational c;
  };
  std::vector<HullFacet> hull_facets;
  std::set<std::string> facet_seen;
  std::vector<int> subset(dim);
  for (int i = 0; i < dim; ++i) subset[i] = i;
  auto advance = [&]() {
    int k = dim - 1;
    while (k >= 0 && subset[k] == m - dim + k) --k;
    if (k < 0) return false;
    ++subset[k];
    for (int j = k + 1; j < dim; ++j) subset[j] = subset[j - 1] + 1;
    return true;
  };
  do {
    std::vector<RatVec> rows;
    for (int i = 1; i < dim; ++i) rows.push_back(sub(coords[subset[i]], coords[subset[0]]));
    RatMatrix rm = rows.empty() ? RatMatrix(0, dim) : RatMatrix::from_rows(rows);
    auto normals = kernel(rm);
    if (normals.size() != 1) continue;  // affinely dependent subset
    IntVec n = clear_denominators(normals[0]);
    Rational c = dot(n, coords[subset[0]]);
    bool above = true, below = true;
    for (int i = 0; i < m; ++i) {
      Rational val = dot(n, coords[i]);
      if (val < c) above = false;
      if (val > c) below = false;
    }
    if (!above && !below) continue;
    if (!above) {
      for (auto& x : n) x = -x;
      c = -c;
    }
    // a facet must be supported by a set of affine rank dim-1
    std::vector<RatVec> tight;
    for (int i = 0; i < m; ++i)
      if (dot(n, coords[i]) == c) tight.push_back(coords[i]);
    std::vector<RatVec> tdiffs;
    for (size_t i = 1; i < tight.size(); ++i) tdiffs.push_back(sub(tight[i], tight[0]));
    if (rank_of_rows(tdiffs) != dim - 1) continue;
    std::string key = vector_key(n) + "|" + Rational(c).get_str();
    if (facet_seen.insert(key).second) hull_facets.push_back({std::move(n), std::move(c)});
  } while (advance());

  // Vertices: points where the tight facet normals span the full hull space.
  std::vector<int> vertex_of;
  for (int i = 0; i < m; ++i) {
    std::vector<RatVec> tight_normals;
    for (const auto& f : hull_facets)
      if (dot(f.normal, coords[i]) == f.c) tight_normals.push_back(to_rational(f.normal));
    if (rank_of_rows(tight_normals) == dim) vertex_of.push_back(i);
  }
  for (int i : vertex_of) poly.vertices.push_back(points[i]);

  // Lift facet normals to ambient covectors: solve B^T a = n.
  RatMatrix bt(dim, ambient_rank);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < ambient_rank; ++j) bt.at(i, j) = basis[i][j];
  for (const auto& f : hull_facets) {
    auto a = solve(bt, to_rational(f.normal));
    assert(a);
    // clear_denominators keeps the direction; the constant is re-derived as
    // the minimum over the vertices, which the facet attains.
    IntVec cov = clear_denominators(*a);
    Rational c = dot(cov, poly.vertices[0]);
    for (const auto& v : poly.vertices) {
      Rational val = dot(cov, v);
      if (val < c) c = val;
    }
    poly.facets.push_back({std::move(cov), std::move(c)});
  }
  return poly;
}

std::vector<Face> enumerate_faces(const RationalPolytope& p) {
  int nv = int(p.vertices.size());
  int nf = int(p.facets.size());
  // vertex-facet incidence
  std::vector<std::vector<bool>> tight(nv, std::vector<bool>(nf, false));
  for (int v = 0; v < nv; ++v)
    for (int f = 0; f < nf; ++f) tight[v][f] = p.facet_tight(f, p.vertices[v]);

  auto face_dim = [&](const std::vector<int>& verts) {
    std::vector<RatVec> diffs;
    for (size_t i = 1; i < verts.size(); ++i)
      diffs.push_back(sub(p.vertices[verts[i]], p.vertices[verts[0]]));
    return rank_of_rows(diffs);
  };
  auto all_tight_facets = [&](const std::vector<int>& verts) {
    std::vector<int> result;
    for (int f = 0; f < nf; ++f) {
      bool all = true;
      for (int v : verts)
        if (!tight[v][f]) {
          all = false;
          break;
        }
      if (all) result.push_back(f);
    }
    return result;
  };

  std::map<std::vector<int>, Face> faces;
  std::vector<int> all(nv);
  for (int v = 0; v < nv; ++v) all[v] = v;
  Face whole{all, p.dim, all_tight_facets(all)};
  faces[all] = whole;
  std::vector<std::vector<int>> todo{all};
  while (!todo.empty()) {
    std::vector<int> cur = todo.back();
    todo.pop_back();
    for (int f = 0; f < nf; ++f) {
      std::vector<int> verts;
      for (int v : cur)
        if (tight[v][f]) verts.push_back(v);
      if (verts.empty() || verts == cur) continue;
      if (faces.count(verts)) continue;
      faces[verts] = Face{verts, face_dim(verts), all_tight_facets(verts)};
      todo.push_back(verts);
    }
  }
  std::vector<Face> out;
  for (auto& [k, f] : faces) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_indices < b.vertex_indices;
  });
  return out;
}

RationalPolytope face_polytope(const RationalPolytope& p, const Face& f) {
  std::vector<RatVec> pts;
  for (int v : f.vertex_indices) pts.push_back(p.vertices[v]);
  return polytope_from_vertices(p.ambient_rank, pts);
}

RatVec relint_point(const RationalPolytope& p) {
  RatVec b(p.ambient_rank, Rational(0));
  for (const auto& v : p.vertices)
    for (int i = 0; i < p.ambient_rank; ++i) b[i] += v[i];
  Rational inv = make_rational(1, Int(int(p.vertices.size())));
  for (auto& x : b) x *= inv;
  return b;
}

namespace {

// relint(p) as strict constraints appended to the system
void add_relint_constraints(StrictSystem& sys, const RationalPolytope& p) {
  for (const auto& h : p.affine_hull)
    sys.add(to_rational(h.covector), h.constant, Relation::Equal);
  for (const auto& f : p.facets)
    sys.add(to_rational(f.covector), f.constant, Relation::Greater);
}

}  // namespace

bool relints_disjoint(const RationalPolytope& p, const RationalPolytope& q) {
  if (p.ambient_rank != q.ambient_rank)
    throw InputError("relints_disjoint: ambient rank mismatch");
  StrictSystem sys;
  add_relint_constraints(sys, p);
  add_relint_constraints(sys, q);
  if (sys.constraints.empty()) {
    // both polytopes fill a rank-0 space: they intersect
    return false;
  }
  return !feasible(sys);
}

std::vector<IntVec> difference_lattice(const RationalPolytope& p) {
  if (!p.is_lattice()) throw NoLatticePoint("difference lattice of a non-lattice polytope");
  std::vector<IntVec> diffs;
  IntVec v0 = to_integer(p.vertices[0]);
  for (size_t i = 1; i < p.vertices.size(); ++i)
    diffs.push_back(sub(to_integer(p.vertices[i]), v0));
  return saturate(diffs, p.ambient_rank);
}

QuotientMap quotient_map(const std::vector<IntVec>& kernel_basis, int ambient_rank) {
  QuotientMap qm;
  qm.source_rank = ambient_rank;
  qm.kernel_basis = kernel_basis;
  int k = int(kernel_basis.size());
  qm.target_rank = ambient_rank - k;
  if (k == 0) {
    qm.projection = IntMatrix::identity(ambient_rank);
    qm.section = IntMatrix::identity(ambient_rank);
    return qm;
  }
  IntMatrix b(ambient_rank, k);
  for (int j = 0; j < k; ++j) {
    if (int(kernel_basis[j].size()) != ambient_rank)
      throw InputError("quotient_map: kernel vector of wrong dimension");
    for (int i = 0; i < ambient_rank; ++i) b.at(i, j) = kernel_basis[j][i];
  }
  SmithNormalForm snf = smith_normal_form(b);
  if (snf.rank != k) throw InputError("quotient_map: kernel basis is not independent");
  for (int t = 0; t < k; ++t)
    if (snf.s.at(t, t) != 1)
      throw InputError("quotient_map: kernel basis is not saturated");
  qm.projection = IntMatrix(qm.target_rank, ambient_rank);
  for (int i = 0; i < qm.target_rank; ++i)
    for (int j = 0; j < ambient_rank; ++j) qm.projection.at(i, j) = snf.u.at(k + i, j);
  qm.section = IntMatrix(ambient_rank, qm.target_rank);
  for (int i = 0; i < ambient_rank; ++i)
    for (int j = 0; j < qm.target_rank; ++j) qm.section.at(i, j) = snf.u_inv.at(i, k + j);
  // projection kills the kernel and splits the quotient
  for (const auto& v : kernel_basis)
    if (!is_zero(qm.projection.apply(v)))
      throw InvariantError("quotient projection does not kill the kernel");
  if (!(qm.projection.mul(qm.section) == IntMatrix::identity(qm.target_rank)))
    throw InvariantError("quotient projection is not split by the section");
  return qm;
}

// ---------------------------------------------------------------------------
// Cones

bool Cone::same_ray_set(const Cone& o) const {
  if (ambient_rank != o.ambient_rank || extreme_rays.size() != o.extreme_rays.size())
    return false;
  std::set<std::string> mine;
  for (const auto& r : extreme_rays) mine.insert(vector_key(r));
  for (const auto& r : o.extreme_rays)
    if (!mine.count(vector_key(r))) return false;
  return true;
}

Cone cone_from_generators(int ambient_rank, std::vector<IntVec> gens) {
  Cone cone;
  cone.ambient_rank = ambient_rank;
  std::set<std::string> seen;
  for (auto& g : gens) {
    if (int(g.size()) != ambient_rank) throw InputError("cone generator of wrong dimension");
    if (is_zero(g)) continue;
    IntVec p = primitive(g);
    if (seen.insert(vector_key(p)).second) cone.generators.push_back(std::move(p));
  }
  if (cone.generators.empty()) {
    cone.pointed = true;
    cone.dim = 0;
    return cone;
  }
  std::vector<RatVec> rows;
  for (const auto& g : cone.generators) rows.push_back(to_rational(g));
  cone.dim = rank_of_rows(rows);

  // pointed iff some functional is strictly positive on every generator
  StrictSystem pointed_sys;
  for (const auto& g : cone.generators)
    pointed_sys.add(to_rational(g), Rational(1), Relation::GreaterEqual);
  auto witness = solve(pointed_sys);
  cone.pointed = witness.has_value();
  if (!cone.pointed) throw NotPointed("cone contains a line");

  // Extreme rays through the cross-section at the witness functional: the
  // vertices of conv{ g / <y,g> } are exactly the extreme rays, and the
  // primitive generators are recovered unchanged.
  std::vector<RatVec> section;
  for (const auto& g : cone.generators) {
    Rational level = dot(*witness, to_rational(g));
    RatVec p(g.size());
    for (size_t i = 0; i < g.size(); ++i) p[i] = Rational(g[i]) / level;
    section.push_back(std::move(p));
  }
  RationalPolytope cross = polytope_from_vertices(ambient_rank, section);
  for (const auto& v : cross.vertices) cone.extreme_rays.push_back(clear_denominators(v));
  {
    std::set<std::string> gen_keys;
    for (const auto& g : cone.generators) gen_keys.insert(vector_key(g));
    for (const auto& r : cone.extreme_rays)
      if (!gen_keys.count(vector_key(r)))
        throw InvariantError("extreme ray is not one of the generators");
  }
  if (cone.extreme_rays.empty())
    throw InvariantError("pointed nonzero cone without extreme rays");
  return cone;
}

Cone normal_cone(const RationalPolytope& delta, const Face& phi, const QuotientMap& qm) {
  if (!delta.is_lattice()) throw NoLatticePoint("normal cone of a non-lattice polytope");
  std::vector<IntVec> gens;
  for (const auto& v : delta.vertices) {
    IntVec vi = to_integer(v);
    for (int w : phi.vertex_indices) {
      IntVec wi = to_integer(delta.vertices[w]);
      gens.push_back(qm.project(sub(vi, wi)));
    }
  }
  Cone cone = cone_from_generators(qm.target_rank, std::move(gens));
  if (cone.dim != delta.dim - phi.dim)
    throw InvariantError("normal cone has wrong dimension");
  return cone;
}

LinkSlice link_slice(const Cone& sigma, const IntVec& f, const Int& multiplier) {
  if (!sigma.pointed || sigma.is_zero())
    throw InputError("link_slice needs a pointed nonzero cone");
  if (multiplier < 1) throw InputError("link_slice: multiplier must be positive");
  Int n = 1;
  std::vector<Int> values;
  for (const auto& ray : sigma.extreme_rays) {
    Int val = dot(f, ray);
    if (val <= 0) throw NotPositive("functional not positive on an extreme ray");
    values.push_back(val);
    n = lcm(n, val);
  }
  n *= multiplier;
  std::vector<RatVec> pts;
  for (size_t i = 0; i < sigma.extreme_rays.size(); ++i) {
    Int scale = n / values[i];
    RatVec v(sigma.ambient_rank);
    for (int j = 0; j < sigma.ambient_rank; ++j)
      v[j] = Rational(scale * sigma.extreme_rays[i][j]);
    pts.push_back(std::move(v));
  }
  LinkSlice ls{polytope_from_vertices(sigma.ambient_rank, pts), n};
  if (ls.polytope.vertices.size() != sigma.extreme_rays.size())
    throw InvariantError("link slice lost a vertex");
  if (!ls.polytope.is_lattice())
    throw InvariantError("link slice has a non-lattice vertex");
  return ls;
}

RationalPolytope transform(const RationalPolytope& p, const IntMatrix& w) {
  if (!is_unimodular(w)) throw InputError("transform: matrix is not invertible over Z");
  std::vector<RatVec> pts;
  for (const auto& v : p.vertices) pts.push_back(w.apply(v));
  return polytope_from_vertices(p.ambient_rank, pts);
}

RationalPolytope scale_polytope(const RationalPolytope& p, const Int& k) {
  if (k < 1) throw InputError("scale_polytope: factor must be positive");
  std::vector<RatVec> pts;
  for (const auto& v : p.vertices) {
    RatVec s(v.size());
    for (size_t i = 0; i < v.size(); ++i) s[i] = v[i] * Rational(k);
    pts.push_back(std::move(s));
  }
  return polytope_from_vertices(p.ambient_rank, pts);
}

}  // namespace redih
