#pragma once

// Exact rational polytopes and cones: face lattices, relative interiors,
// difference lattices, quotient projections, normal cones, extreme rays
// and link slices. Facets are found by exhaustive supporting-hyperplane
// search inside the affine hull, which is plenty at desk scale.

#include <optional>
#include <string>
#include <vector>

#include "redih/exactmath.hpp"

namespace redih {

struct HalfSpace {
  IntVec covector;   // primitive
  Rational constant;  // covector . x >= constant on the polytope
};

struct Hyperplane {
  IntVec covector;
  Rational constant;  // covector . x = constant on the polytope
};

struct RationalPolytope {
  int ambient_rank = 0;
  std::vector<RatVec> vertices;        // extreme points only, sorted
  std::vector<HalfSpace> facets;       // irredundant, inside the affine hull
  std::vector<Hyperplane> affine_hull;
  int dim = 0;

  bool facet_tight(int facet, const RatVec& point) const;
  bool is_lattice() const;
  std::string key() const;  // canonical serialization
  bool same_vertex_set(const RationalPolytope& o) const;
};

// Hull of the given points: duplicates and non-extreme points removed,
// affine hull, dimension and facets computed.
RationalPolytope polytope_from_vertices(int ambient_rank, std::vector<RatVec> points);

struct Face {
  std::vector<int> vertex_indices;  // sorted, into the parent's vertices
  int dim = 0;
  std::vector<int> tight_facets;    // all parent facets containing the face
};

// Every nonempty face exactly once, the polytope itself included, sorted
// by (dim, vertex indices). Computed by intersecting facet subsets.
std::vector<Face> enumerate_faces(const RationalPolytope& p);

RationalPolytope face_polytope(const RationalPolytope& p, const Face& f);

// Vertex barycenter; lies in the relative interior.
RatVec relint_point(const RationalPolytope& p);

// True iff relint(p) and relint(q) share no point; decided by one strict
// feasibility problem.
bool relints_disjoint(const RationalPolytope& p, const RationalPolytope& q);

// Saturated basis of the lattice spanned by differences of lattice points
// of a lattice polytope (differences of vertices, then saturation).
// Throws NoLatticePoint when some vertex is not integral.
std::vector<IntVec> difference_lattice(const RationalPolytope& p);

struct QuotientMap {
  int source_rank = 0;
  int target_rank = 0;
  IntMatrix projection;             // (target x source), kills the kernel
  IntMatrix section;                // (source x target), projection * section = id
  std::vector<IntVec> kernel_basis;

  IntVec project(const IntVec& x) const { return projection.apply(x); }
  IntVec lift(const IntVec& y) const { return section.apply(y); }
};

// Projection onto a complement of the given saturated sublattice, computed
// through the Smith normal form.
QuotientMap quotient_map(const std::vector<IntVec>& kernel_basis, int ambient_rank);

struct Cone {
  int ambient_rank = 0;
  std::vector<IntVec> generators;    // primitive, deduplicated, nonzero
  std::vector<IntVec> extreme_rays;  // primitive
  bool pointed = true;
  int dim = 0;

  bool is_zero() const { return generators.empty(); }
  bool same_ray_set(const Cone& o) const;
};

// Cone from generators; throws NotPointed when the cone contains a line.
Cone cone_from_generators(int ambient_rank, std::vector<IntVec> gens);

// Image in the quotient of the cone generated by the differences
// vertex(delta) - vertex(phi). Throws NotPointed if the image contains a
// line (phi is then not a face, or the lattice data is corrupt).
Cone normal_cone(const RationalPolytope& delta, const Face& phi, const QuotientMap& qm);

struct LinkSlice {
  RationalPolytope polytope;  // sigma cut at height f = n; lattice vertices
  Int n;
};

// Cuts a pointed nonzero cone at level n = multiplier * lcm_rho f(rho).
// Requires f(rho) > 0 on every extreme ray (NotPositive otherwise).
LinkSlice link_slice(const Cone& sigma, const IntVec& f, const Int& multiplier = 1);

// Image polytope under an integer matrix invertible over the integers.
RationalPolytope transform(const RationalPolytope& p, const IntMatrix& w);

RationalPolytope scale_polytope(const RationalPolytope& p, const Int& k);

}  // namespace redih
