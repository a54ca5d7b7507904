#include "redih/engine.hpp"

#include <algorithm>
#include <cassert>

namespace redih {

VarietyDescriptor make_variety(const RootDatum& rd, const RationalPolytope& delta,
                               int max_weyl_order) {
  validate(rd);
  VarietyDescriptor v;
  v.rd = rd;
  v.weyl = generate_weyl(rd, max_weyl_order);
  auto verdict = admissibility_verdict(rd, v.weyl, delta);
  if (!verdict.admissible) throw NotAdmissible(verdict.detail, verdict.failed_condition);
  v.delta = delta;
  v.delta_symmetry = face_symmetry(rd, v.weyl, delta);
  return v;
}

int variety_dim(const VarietyDescriptor& v) {
  int phi_all = 2 * int(v.weyl.positive_roots.size());
  int phi_j = 2 * int(positive_roots_in_span(v.rd, v.weyl, v.delta_symmetry.J).size());
  return phi_all - phi_j + v.delta.dim;
}

int orbit_dim(const VarietyDescriptor& v, const FaceSymmetry& sym, int face_dim) {
  int phi_all = 2 * int(v.weyl.positive_roots.size());
  int phi_j = 2 * int(positive_roots_in_span(v.rd, v.weyl, sym.J).size());
  return phi_all - phi_j + face_dim;
}

std::string variety_key(const VarietyDescriptor& v) {
  std::string key = "rd:" + std::to_string(v.rd.rank);
  for (const auto& a : v.rd.simple_roots) key += "|r" + vector_key(a);
  for (const auto& a : v.rd.simple_coroots) key += "|c" + vector_key(a);
  return key + "#" + v.delta.key();
}

QPolynomial Engine::orbit_virtual_poincare(const VarietyDescriptor& v,
                                           const AdmissibleFace& af) const {
  const FaceSymmetry& sym = af.symmetry;
  QPolynomial wi = quotient_poincare(v.rd, v.weyl, sym.I);
  QPolynomial wk = parabolic_poincare(v.rd, v.weyl, sym.K);
  int n_k = int(positive_roots_in_span(v.rd, v.weyl, sym.K).size());
  QPolynomial q_minus_1 = QPolynomial::from_coefficients({-1, 1});
  QPolynomial result = wi * wi * QPolynomial::monomial(1, n_k) * wk;
  for (int i = 0; i < af.face.dim; ++i) result = result * q_minus_1;
  int expected = orbit_dim(v, sym, af.face.dim);
  if (result.degree() != expected)
    throw DegreeMismatch("orbit polynomial has degree " + std::to_string(result.degree()) +
                         ", orbit dimension is " + std::to_string(expected) + " at face " +
                         af.polytope.key());
  return result;
}

SliceDescriptor Engine::slice_descriptor(const VarietyDescriptor& v,
                                         const AdmissibleFace& af) {
  if (af.face.dim == v.delta.dim)
    throw InputError("slice_descriptor needs a proper face");

  SliceDescriptor sd;
  sd.parent_face = af;
  const QuotientMap& qm = af.quotient;

  // Quotient root datum: simple roots are the projected J-roots, coroots the
  // J-coroots pulled back through the section. The J-coroots kill the
  // difference lattice, so the Cartan pairings survive untouched.
  sd.quotient_rd.rank = qm.target_rank;
  sd.quotient_rd.label = v.rd.label + "/face";
  for (int j : af.symmetry.J) {
    sd.quotient_rd.simple_roots.push_back(qm.project(v.rd.simple_roots[j]));
    IntVec coroot(qm.target_rank);
    for (int c = 0; c < qm.target_rank; ++c)
      coroot[c] = dot(v.rd.simple_coroots[j], qm.section.col(c));
    sd.quotient_rd.simple_coroots.push_back(std::move(coroot));
    for (const auto& k : qm.kernel_basis)
      if (dot(v.rd.simple_coroots[j], k) != 0)
        throw InvariantError("J-coroot does not vanish on the difference lattice");
  }
  validate(sd.quotient_rd);
  IntMatrix expected_cartan(int(af.symmetry.J.size()), int(af.symmetry.J.size()));
  for (size_t a = 0; a < af.symmetry.J.size(); ++a)
    for (size_t b = 0; b < af.symmetry.J.size(); ++b)
      expected_cartan.at(int(a), int(b)) =
          v.rd.pairing(af.symmetry.J[a], v.rd.simple_roots[af.symmetry.J[b]]);
  if (!(sd.quotient_rd.cartan_matrix() == expected_cartan))
    throw InvariantError("Cartan pairings change under the quotient projection");

  sd.sigma = normal_cone(v.delta, af.face, qm);

  // W_J acts on the quotient; the invariant functional is the average of a
  // strictly positive one over the normalizer of sigma.
  WeylGroup wj = generate_weyl(sd.quotient_rd, options_.max_weyl_order);
  std::vector<IntMatrix> normalizer;
  for (const auto& mat : wj.elements) {
    std::vector<IntVec> mapped;
    for (const auto& ray : sd.sigma.extreme_rays) mapped.push_back(mat.apply(ray));
    Cone image;
    image.ambient_rank = sd.sigma.ambient_rank;
    image.extreme_rays = std::move(mapped);
    for (auto& r : image.extreme_rays) r = primitive(r);
    if (sd.sigma.same_ray_set(image)) normalizer.push_back(mat);
  }

  StrictSystem pos;
  for (const auto& ray : sd.sigma.extreme_rays)
    pos.add(to_rational(ray), Rational(1), Relation::GreaterEqual);
  auto witness = solve(pos);
  if (!witness) throw NotPointed("no functional is positive on the normal cone");
  RatVec averaged(qm.target_rank, Rational(0));
  for (const auto& mat : normalizer) {
    // accumulate witness composed with the action
    for (int c = 0; c < qm.target_rank; ++c)
      for (int r = 0; r < qm.target_rank; ++r)
        averaged[c] += (*witness)[r] * Rational(mat.at(r, c));
  }
  if (is_zero(averaged))
    throw InvariantError("normalizer-averaged functional vanished");
  sd.functional = clear_denominators(averaged);
  for (const auto& ray : sd.sigma.extreme_rays)
    if (dot(sd.functional, ray) <= 0)
      throw NotPositive("averaged functional loses positivity on a ray");
  for (const auto& mat : normalizer) {
    for (int c = 0; c < qm.target_rank; ++c) {
      Int val = 0;
      for (int r = 0; r < qm.target_rank; ++r) val += sd.functional[r] * mat.at(r, c);
      if (val != sd.functional[c])
        throw InvariantError("functional is not invariant under the cone normalizer");
    }
  }

  LinkSlice ls = link_slice(sd.sigma, sd.functional, Int(options_.link_scale));
  sd.level = ls.n;

  auto link_verdict = admissibility_verdict(sd.quotient_rd, wj, ls.polytope);
  if (!link_verdict.admissible)
    throw LinkNotAdmissible("link polytope fails admissibility: " + link_verdict.detail);
  sd.link.rd = sd.quotient_rd;
  sd.link.weyl = std::move(wj);
  sd.link.delta_symmetry = face_symmetry(sd.quotient_rd, sd.link.weyl, ls.polytope);
  sd.link.delta = std::move(ls.polytope);

  // d_x three ways: total minus orbit, the J-ladder form, and through the
  // link dimension.
  int dx1 = variety_dim(v) - orbit_dim(v, af.symmetry, af.face.dim);
  int phi_j_face = 2 * int(positive_roots_in_span(v.rd, v.weyl, af.symmetry.J).size());
  int phi_j_delta = 2 * int(positive_roots_in_span(v.rd, v.weyl, v.delta_symmetry.J).size());
  int dx2 = (phi_j_face - phi_j_delta) + v.delta.dim - af.face.dim;
  int dx3 = variety_dim(sd.link) + 1;
  if (dx1 != dx2 || dx1 != dx3)
    throw InvariantError("slice dimension mismatch: " + std::to_string(dx1) + " / " +
                         std::to_string(dx2) + " / " + std::to_string(dx3));
  sd.d_x = dx1;
  return sd;
}

QPolynomial Engine::local_stalk(const VarietyDescriptor& v, const AdmissibleFace& af) {
  int d_x = variety_dim(v) - orbit_dim(v, af.symmetry, af.face.dim);
  if (d_x <= 1) return QPolynomial::one();
  SliceDescriptor sd = slice_descriptor(v, af);
  auto link_result = global_ih(sd.link);
  QPolynomial one_minus_q = QPolynomial::from_coefficients({1, -1});
  return truncate_t(one_minus_q * link_result->global, d_x - 1);
}

std::shared_ptr<const IHResult> Engine::global_ih(const VarietyDescriptor& v) {
  std::string key = variety_key(v);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  auto result = std::make_shared<IHResult>();
  result->variety_dim = variety_dim(v);
  int dim_x = result->variety_dim;

  QPolynomial one_minus_q = QPolynomial::from_coefficients({1, -1});
  for (const AdmissibleFace& af : admissible_faces(v.rd, v.weyl, v.delta)) {
    OrbitReport report;
    report.orbit_dim = orbit_dim(v, af.symmetry, af.face.dim);
    report.d_x = dim_x - report.orbit_dim;
    report.virtual_poincare = orbit_virtual_poincare(v, af);
    if (report.d_x <= 1) {
      report.stalk = QPolynomial::one();
    } else {
      SliceDescriptor sd = slice_descriptor(v, af);
      auto link_result = global_ih(sd.link);
      report.stalk = truncate_t(one_minus_q * link_result->global, report.d_x - 1);
      report.link = LinkInfo{sd.quotient_rd, sd.link.delta, sd.level, link_result};
    }
    if (report.stalk.coefficient(0) != 1)
      throw InvariantError("stalk constant term differs from 1 at face " +
                           af.polytope.key());
    if (!nonnegative_coefficients(report.stalk))
      throw InvariantError("stalk with a negative coefficient at face " +
                           af.polytope.key());
    if (2 * report.stalk.degree() > report.d_x - 1 && report.d_x >= 1)
      throw InvariantError("stalk exceeds the truncation bound at face " +
                           af.polytope.key());
    report.face = af;
    result->global = result->global + report.virtual_poincare * report.stalk;
    result->orbits.push_back(std::move(report));
  }

  if (result->global.coefficient(0) != 1)
    throw InvariantError("global polynomial has constant term != 1");
  if (!nonnegative_coefficients(result->global))
    throw InvariantError("global polynomial has a negative coefficient");
  if (!is_palindromic(result->global, 2 * dim_x))
    throw InvariantError("global polynomial is not palindromic at degree " +
                         std::to_string(2 * dim_x));
  if (result->global.degree() != dim_x)
    throw InvariantError("global polynomial has wrong degree");

  memo_[key] = result;
  return result;
}

QSeries Engine::equivariant_series(const VarietyDescriptor& v, int order) {
  std::vector<int> all(v.rd.num_simple());
  for (int i = 0; i < v.rd.num_simple(); ++i) all[i] = i;
  QPolynomial flag = parabolic_poincare(v.rd, v.weyl, all);
  QSeries classifying = classifying_series(2 * v.rd.rank, flag * flag, order);
  return classifying.mul(global_ih(v)->global);
}

}  // namespace redih
