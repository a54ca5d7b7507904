#pragma once

// The two recursive formulas: per-orbit virtual Poincare polynomials,
// local stalk polynomials through links, and the global intersection
// cohomology polynomial, with memoization and runtime self-checks.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "redih/admissibility.hpp"
#include "redih/polyhedra.hpp"
#include "redih/qpolynomial.hpp"
#include "redih/rootdatum.hpp"

namespace redih {

struct VarietyDescriptor {
  RootDatum rd;
  WeylGroup weyl;
  RationalPolytope delta;    // lattice, admissible
  FaceSymmetry delta_symmetry;
};

// Validates the datum, generates the Weyl group and checks admissibility
// (NotAdmissible when the polytope fails either condition).
VarietyDescriptor make_variety(const RootDatum& rd, const RationalPolytope& delta,
                               int max_weyl_order = 2048);

// |Phi| - |Phi_{J(delta)}| + dim delta.
int variety_dim(const VarietyDescriptor& v);
int orbit_dim(const VarietyDescriptor& v, const FaceSymmetry& sym, int face_dim);

struct IHResult;

struct LinkInfo {
  RootDatum quotient_rd;
  RationalPolytope polytope;
  Int n;
  std::shared_ptr<const IHResult> result;
};

struct OrbitReport {
  AdmissibleFace face;
  int orbit_dim = 0;
  int d_x = 0;
  QPolynomial virtual_poincare;
  QPolynomial stalk;
  std::optional<LinkInfo> link;  // present when d_x >= 2
};

struct IHResult {
  int variety_dim = 0;
  QPolynomial global;
  std::vector<OrbitReport> orbits;
};

struct SliceDescriptor {
  AdmissibleFace parent_face;
  RootDatum quotient_rd;  // simple roots: images of J; coroots: restrictions
  Cone sigma;             // normal cone to delta along the face
  IntVec functional;      // integral, positive on sigma - {0}, normalizer-invariant
  Int level;              // the height n of the slice
  VarietyDescriptor link;
  int d_x = 0;
};

struct EngineOptions {
  int max_weyl_order = 2048;
  int link_scale = 1;  // multiplies the minimal slice height n
};

class Engine {
 public:
  explicit Engine(EngineOptions options = {}) : options_(options) {}

  // Global polynomial with the per-orbit table; memoized on the serialized
  // (root datum, polytope) pair. All result invariants are checked before
  // returning: constant term 1, nonnegative coefficients, palindromy at
  // degree 2 dim X, exact degree.
  std::shared_ptr<const IHResult> global_ih(const VarietyDescriptor& v);

  // (W^I)^2 q^{N_K} (q-1)^{dim phi} W_K, where N_K = |Phi^+_K|. Throws
  // DegreeMismatch unless the degree equals the orbit dimension.
  QPolynomial orbit_virtual_poincare(const VarietyDescriptor& v,
                                     const AdmissibleFace& af) const;

  // Quotient datum, normal cone, invariant functional, link variety and
  // codimension for a proper admissible face.
  SliceDescriptor slice_descriptor(const VarietyDescriptor& v, const AdmissibleFace& af);

  // 1 when d_x <= 1, otherwise the truncation of (1-q) IP_link to
  // t-degrees <= d_x - 1.
  QPolynomial local_stalk(const VarietyDescriptor& v, const AdmissibleFace& af);

  // P^{GxG}(t) IP_X(t) up to the given q-order: the classifying series for
  // rank 2 r_G with flag polynomial (W_Pi)^2, times the global polynomial.
  QSeries equivariant_series(const VarietyDescriptor& v, int order);

  const EngineOptions& options() const { return options_; }

 private:
  EngineOptions options_;
  std::map<std::string, std::shared_ptr<const IHResult>> memo_;
};

std::string variety_key(const VarietyDescriptor& v);

}  // namespace redih
