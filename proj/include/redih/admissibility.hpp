#pragma once

// Admissibility of polytopes and faces under a Weyl group action, and the
// symmetry data attached to each admissible face: the simple roots J
// generating the pointwise stabilizer, I generating the setwise
// stabilizer, and the orthogonal complement K = I - J.

#include <optional>
#include <vector>

#include "redih/polyhedra.hpp"
#include "redih/rootdatum.hpp"

namespace redih {

struct FaceSymmetry {
  std::vector<int> I;  // setwise stabilizer is W_I
  std::vector<int> J;  // pointwise stabilizer is W_J
  std::vector<int> K;  // I - J, orthogonal to J
  size_t normalizer_order = 0;
  size_t centralizer_order = 0;
};

struct AdmissibleFace {
  Face face;
  RationalPolytope polytope;  // the face with its own hull data
  FaceSymmetry symmetry;
  std::vector<IntVec> diff_lattice;  // saturated
  QuotientMap quotient;
};

struct AdmissibilityVerdict {
  bool admissible = false;
  int failed_condition = 0;        // 1 or 2 when not admissible
  std::optional<int> witness_w;    // overlapping translate for condition 2
  std::string detail;
};

// The two conditions: (i) the relative interior meets the closed dominant
// chamber, (ii) distinct Weyl translates have disjoint relative interiors.
// Requires a lattice polytope.
AdmissibilityVerdict admissibility_verdict(const RootDatum& rd, const WeylGroup& w,
                                           const RationalPolytope& p);
bool is_admissible(const RootDatum& rd, const WeylGroup& w, const RationalPolytope& p);

// Stabilizer data of an admissible face, computed by enumeration and
// cross-checked against the parabolic subgroups it must equal
// (NonParabolicSymmetry otherwise).
FaceSymmetry face_symmetry(const RootDatum& rd, const WeylGroup& w,
                           const RationalPolytope& phi);

// All admissible faces of an admissible polytope, each with its symmetry,
// saturated difference lattice and quotient map; delta itself included.
std::vector<AdmissibleFace> admissible_faces(const RootDatum& rd, const WeylGroup& w,
                                             const RationalPolytope& delta);

}  // namespace redih
