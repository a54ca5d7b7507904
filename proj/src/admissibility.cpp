#include "redih/admissibility.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace redih {

namespace {

std::set<std::string> vertex_key_set(const std::vector<RatVec>& verts) {
  std::set<std::string> s;
  for (const auto& v : verts) {
    std::string k;
    for (const auto& x : v) k += ":" + x.get_str();
    s.insert(k);
  }
  return s;
}

}  // namespace

AdmissibilityVerdict admissibility_verdict(const RootDatum& rd, const WeylGroup& w,
                                           const RationalPolytope& p) {
  if (p.ambient_rank != rd.rank)
    throw InputError("polytope rank differs from the root datum rank");
  if (!p.is_lattice())
    throw InputError("admissibility is defined for lattice polytopes only");

  AdmissibilityVerdict verdict;

  // (i) the relative interior meets the closed dominant chamber
  StrictSystem sys;
  for (const auto& h : p.affine_hull)
    sys.add(to_rational(h.covector), h.constant, Relation::Equal);
  for (const auto& f : p.facets)
    sys.add(to_rational(f.covector), f.constant, Relation::Greater);
  for (int i = 0; i < rd.num_simple(); ++i)
    sys.add(to_rational(rd.simple_coroots[i]), Rational(0), Relation::GreaterEqual);
  if (rd.num_simple() > 0 && !feasible(sys)) {
    verdict.failed_condition = 1;
    RatVec bary = relint_point(p);
    for (int i = 0; i < rd.num_simple(); ++i)
      if (rd.pairing(i, bary) < 0) {
        verdict.detail = "relative interior misses the dominant chamber; barycenter " +
                         to_string(bary) + " violates wall " + std::to_string(i);
        break;
      }
    if (verdict.detail.empty())
      verdict.detail = "relative interior misses the dominant chamber";
    return verdict;
  }

  // (ii) distinct translates have disjoint relative interiors; the image
  // hull is only built once the vertex sets are known to differ
  auto verts = vertex_key_set(p.vertices);
  for (size_t e = 1; e < w.size(); ++e) {
    std::vector<RatVec> mapped;
    for (const auto& v : p.vertices) mapped.push_back(w.elements[e].apply(v));
    if (vertex_key_set(mapped) == verts) continue;
    RationalPolytope image = transform(p, w.elements[e]);
    if (!relints_disjoint(p, image)) {
      verdict.failed_condition = 2;
      verdict.witness_w = int(e);
      verdict.detail = "translate by Weyl element #" + std::to_string(e) +
                       " overlaps the relative interior";
      return verdict;
    }
  }
  verdict.admissible = true;
  return verdict;
}

bool is_admissible(const RootDatum& rd, const WeylGroup& w, const RationalPolytope& p) {
  return admissibility_verdict(rd, w, p).admissible;
}

FaceSymmetry face_symmetry(const RootDatum& rd, const WeylGroup& w,
                           const RationalPolytope& phi) {
  FaceSymmetry sym;
  auto verts = vertex_key_set(phi.vertices);

  std::set<int> normalizer, centralizer;
  for (size_t e = 0; e < w.size(); ++e) {
    bool pointwise = true;
    std::set<std::string> image;
    for (const auto& v : phi.vertices) {
      RatVec img = w.elements[e].apply(v);
      if (img != v) pointwise = false;
      std::string k;
      for (const auto& x : img) k += ":" + x.get_str();
      image.insert(k);
    }
    if (image == verts) normalizer.insert(int(e));
    if (pointwise) centralizer.insert(int(e));
  }
  sym.normalizer_order = normalizer.size();
  sym.centralizer_order = centralizer.size();

  for (int i = 0; i < rd.num_simple(); ++i) {
    int s = w.simple_reflections[i];
    if (normalizer.count(s)) sym.I.push_back(i);
    if (centralizer.count(s)) sym.J.push_back(i);
  }

  // the stabilizers must be the standard parabolics on those sets
  auto as_set = [](std::vector<int> v) { return std::set<int>(v.begin(), v.end()); };
  if (as_set(parabolic_subgroup(w, sym.I)) != normalizer)
    throw NonParabolicSymmetry("setwise stabilizer is not generated by its simple reflections");
  if (as_set(parabolic_subgroup(w, sym.J)) != centralizer)
    throw NonParabolicSymmetry("pointwise stabilizer is not generated by its simple reflections");

  // wall characterization of J
  for (int i = 0; i < rd.num_simple(); ++i) {
    bool on_wall = true;
    for (const auto& v : phi.vertices)
      if (rd.pairing(i, v) != 0) {
        on_wall = false;
        break;
      }
    bool in_j = std::find(sym.J.begin(), sym.J.end(), i) != sym.J.end();
    if (on_wall != in_j)
      throw InvariantError("wall characterization of J fails for simple root " +
                           std::to_string(i));
  }

  for (int i : sym.I)
    if (std::find(sym.J.begin(), sym.J.end(), i) == sym.J.end()) sym.K.push_back(i);

  // K is orthogonal to J, both pairings
  for (int j : sym.J)
    for (int k : sym.K)
      if (rd.pairing(j, rd.simple_roots[k]) != 0 || rd.pairing(k, rd.simple_roots[j]) != 0)
        throw InvariantError("K is not orthogonal to J");
  return sym;
}

std::vector<AdmissibleFace> admissible_faces(const RootDatum& rd, const WeylGroup& w,
                                             const RationalPolytope& delta) {
  {
    auto verdict = admissibility_verdict(rd, w, delta);
    if (!verdict.admissible)
      throw NotAdmissible(verdict.detail, verdict.failed_condition);
  }
  std::vector<AdmissibleFace> out;
  for (const Face& f : enumerate_faces(delta)) {
    RationalPolytope pol = face_polytope(delta, f);
    if (!is_admissible(rd, w, pol)) continue;
    AdmissibleFace af;
    af.face = f;
    af.symmetry = face_symmetry(rd, w, pol);
    af.diff_lattice = difference_lattice(pol);
    af.quotient = quotient_map(af.diff_lattice, rd.rank);
    af.polytope = std::move(pol);
    out.push_back(std::move(af));
  }

  // No two admissible faces may lie in one W-orbit; that would make the
  // orbit sum double-count. Distinct faces have distinct vertex sets, so
  // only nontrivial elements can identify them.
  std::vector<std::set<std::string>> keys;
  for (const auto& af : out) keys.push_back(vertex_key_set(af.polytope.vertices));
  for (size_t a = 0; a < out.size(); ++a)
    for (size_t b = a + 1; b < out.size(); ++b) {
      if (out[a].face.dim != out[b].face.dim ||
          out[a].polytope.vertices.size() != out[b].polytope.vertices.size())
        continue;
      for (size_t e = 1; e < w.size(); ++e) {
        std::set<std::string> image;
        for (const auto& vert : out[b].polytope.vertices) {
          std::string k;
          for (const auto& x : w.elements[e].apply(vert)) k += ":" + x.get_str();
          image.insert(k);
        }
        if (image == keys[a])
          throw InvariantError("admissible faces " + out[a].polytope.key() + " and " +
                               out[b].polytope.key() + " lie in one Weyl orbit");
      }
    }
  return out;
}

}  // namespace redih
