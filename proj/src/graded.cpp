#include "hopfgr/graded.hpp"

#include <string>

namespace hopfgr {

namespace {

template <class S>
Index first_difference(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return -1;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return j;
  return -1;
}

// Compares without recording the identity name, so that loops over degrees
// record each identity once.
template <class S>
bool agree(CheckReport& r, const std::string& name, const Mat<S>& lhs, const Mat<S>& rhs, std::vector<Index> where) {
  if (!r.passed) return false;
  if (same(lhs, rhs)) return true;
  r.fail(name, first_difference(lhs, rhs),
         lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols() ? std::string() : "sides have different shapes");
  r.location = std::move(where);
  return false;
}

template <class S>
bool shaped(CheckReport& r, const std::string& what, const Mat<S>& f, Index rows, Index cols,
            std::vector<Index> where) {
  if (!r.passed) return false;
  if (f.rows() == rows && f.cols() == cols) return true;
  r.fail("shape", -1, what + " is " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) + ", expected " +
                          std::to_string(rows) + "x" + std::to_string(cols));
  r.location = std::move(where);
  return false;
}

template <class S>
bool family_complete(CheckReport& r, const std::string& what, const Family<S>& f, Index n) {
  bool ok = static_cast<Index>(f.size()) == n + 1;
  for (Index a = 0; ok && a <= n; ++a) ok = static_cast<Index>(f[a].size()) == n + 1 - a;
  if (!ok) r.fail("shape", -1, what + " family does not cover a+b <= " + std::to_string(n));
  return ok;
}

template <class S>
Mat<S> apply_pair(const Mat<S>& f, const Mat<S>& g, const Mat<S>& x) {
  return apply_local(f, 1, g.rows(), apply_local(g, f.cols(), 1, x));
}

template <class S>
Family<S> empty_family(Index n) {
  Family<S> f(n + 1);
  for (Index a = 0; a <= n; ++a) f[a].resize(n + 1 - a);
  return f;
}

template <class S>
GradedPiece<S> make_piece(const Subspace<S>& upper, const Subspace<S>& lower) {
  GradedPiece<S> p;
  p.upper = upper;
  p.lower = lower;
  const auto q = quotient_with_section(Subspace<S>::span(upper.coordinates(lower.basis())));
  p.proj = q.proj;
  p.section = q.section;
  p.lift = compose(upper.basis(), q.section);
  p.quotient = quotient_with_section(lower).proj;
  p.embed = compose(p.quotient, p.lift);
  return p;
}

template <class S>
Mat<S> to_component(const GradedPiece<S>& p, const Mat<S>& v) {
  return compose(p.proj, p.upper.coordinates(v));
}

template <class S>
std::vector<Index> piece_dims(const std::vector<GradedPiece<S>>& pieces) {
  std::vector<Index> d;
  for (const auto& p : pieces) d.push_back(p.proj.rows());
  return d;
}

// Delta^{gr}_{a,b}: lift, apply Delta, project to E/lower_a (x) E/lower_b and
// read off in the embedded components.
template <class S>
GradedCoalgebra<S> coalgebra_from(const std::vector<GradedPiece<S>>& pieces, const Coalgebra<S>& e) {
  const Index n = static_cast<Index>(pieces.size()) - 1;
  GradedCoalgebra<S> g{piece_dims(pieces), empty_family<S>(n), compose(e.counit, pieces[0].lift)};
  for (Index a = 0; a <= n; ++a)
    for (Index b = 0; a + b <= n; ++b) {
      const auto &pa = pieces[a], &pb = pieces[b], &pn = pieces[a + b];
      if (!is_zero(apply_pair(pa.quotient, pb.quotient, compose(e.comult, pn.lower.basis()))))
        throw KernelNotContained("induced comultiplication (" + std::to_string(a) + "," + std::to_string(b) +
                                 ") is not well defined");
      g.comult[a][b] = lift_through_mono(apply_pair(pa.quotient, pb.quotient, compose(e.comult, pn.lift)),
                                         tensor_map(pa.embed, pb.embed));
    }
  return g;
}

template <class S>
GradedAlgebra<S> algebra_from(const std::vector<GradedPiece<S>>& pieces, const Algebra<S>& e) {
  const Index n = static_cast<Index>(pieces.size()) - 1;
  GradedAlgebra<S> g{piece_dims(pieces), empty_family<S>(n), to_component(pieces[0], e.unit)};
  for (Index a = 0; a <= n; ++a)
    for (Index b = 0; a + b <= n; ++b) {
      const auto &pa = pieces[a], &pb = pieces[b], &pn = pieces[a + b];
      if (!pn.lower.contains(compose(e.mult, tensor_map(pa.lower.basis(), pb.upper.basis()))) ||
          !pn.lower.contains(compose(e.mult, tensor_map(pa.upper.basis(), pb.lower.basis()))))
        throw KernelNotContained("induced multiplication (" + std::to_string(a) + "," + std::to_string(b) +
                                 ") is not well defined");
      g.mult[a][b] = to_component(pn, compose(e.mult, tensor_map(pa.lift, pb.lift)));
    }
  return g;
}

template <class S>
Family<S> braiding_from(const std::vector<GradedPiece<S>>& pieces, const Bialgebra<S>& e) {
  const Index n = static_cast<Index>(pieces.size()) - 1;
  Family<S> c = empty_family<S>(n);
  for (Index a = 0; a <= n; ++a)
    for (Index b = 0; a + b <= n; ++b) {
      const auto &pa = pieces[a], &pb = pieces[b];
      if (e.flip_braided()) {
        c[a][b] = flip<S>(pa.proj.rows(), pb.proj.rows());
        continue;
      }
      const std::string where = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      const auto up = Subspace<S>::tensor(pb.upper, pa.upper);
      const auto low = sum(Subspace<S>::tensor(pb.lower, pa.upper), Subspace<S>::tensor(pb.upper, pa.lower));
      if (!up.contains(compose(e.braiding(), tensor_map(pa.upper.basis(), pb.upper.basis()))))
        throw BraidingDoesNotDescend("braiding does not preserve the component " + where);
      if (!low.contains(compose(e.braiding(), tensor_map(pa.lower.basis(), pb.upper.basis()))) ||
          !low.contains(compose(e.braiding(), tensor_map(pa.upper.basis(), pb.lower.basis()))))
        throw BraidingDoesNotDescend("braiding does not preserve the lower terms of " + where);
      const Mat<S> coords =
          lift_through_mono(compose(e.braiding(), tensor_map(pa.lift, pb.lift)), tensor_map(pb.upper.basis(), pa.upper.basis()));
      c[a][b] = compose(tensor_map(pb.proj, pa.proj), coords);
    }
  return c;
}

bool covers(const std::optional<Index>& stabilized_at, Index n) { return stabilized_at && *stabilized_at <= n + 1; }

}  // namespace

template <class S>
CheckReport verify_graded_coalgebra(const GradedCoalgebra<S>& g) {
  CheckReport r;
  const Index n = g.degree();
  const auto& d = g.dims;
  r.checked.push_back("shape");
  if (!family_complete(r, "comultiplication", g.comult, n)) return r;
  if (!shaped(r, "counit", g.counit0, 1, d[0], {0})) return r;
  for (Index a = 0; a <= n; ++a)
    for (Index b = 0; a + b <= n; ++b)
      if (!shaped(r, "Delta_{a,b}", g.comult[a][b], d[a] * d[b], d[a + b], {a, b})) return r;

  r.checked.push_back("graded coassociativity");
  for (Index a = 0; a <= n; ++a)
    for (Index b = 0; a + b <= n; ++b)
      for (Index c = 0; a + b + c <= n; ++c) {
        const Mat<S> lhs = apply_local(g.comult[a][b], 1, d[c], g.comult[a + b][c]);
        const Mat<S> rhs = apply_local(g.comult[b][c], d[a], 1, g.comult[a][b + c]);
        if (!agree(r, "graded coassociativity", lhs, rhs, {a, b, c})) return r;
      }
  r.checked.push_back("graded right counit");
  r.checked.push_back("graded left counit");
  for (Index k = 0; k <= n; ++k) {
    if (!agree(r, "graded right counit", apply_local(g.counit0, d[k], 1, g.comult[k][0]), identity<S>(d[k]), {k}))
      return r;
    if (!agree(r, "graded left counit", apply_local(g.counit0, 1, d[k], g.comult[0][k]), identity<S>(d[k]), {k}))
      return r;
  }
  return r;
}

template <class S>
CheckReport verify_graded_algebra(const GradedAlgebra<S>& g) {
  CheckReport r;
  const Index n = g.degree();
  const auto& d = g.dims;
  r.checked.push_back("shape");
  if (!family_complete(r, "multiplication", g.mult, n)) return r;
  if (!shaped(r, "unit", g.unit0, d[0], 1, {0})) return r;
  for (Index a = 0; a <= n; ++a)
    for (Index b = 0; a + b <= n; ++b)
      if (!shaped(r, "m_{a,b}", g.mult[a][b], d[a + b], d[a] * d[b], {a, b})) return r;

  r.checked.push_back("graded associativity");
  for (Index a = 0; a <= n; ++a)
    for (Index b = 0; a + b <= n; ++b)
      for (Index c = 0; a + b + c <= n; ++c) {
        const Mat<S> lhs = compose(g.mult[a + b][c], tensor_map(g.mult[a][b], identity<S>(d[c])));
        const Mat<S> rhs = compose(g.mult[a][b + c], tensor_map(identity<S>(d[a]), g.mult[b][c]));
        if (!agree(r, "graded associativity", lhs, rhs, {a, b, c})) return r;
      }
  r.checked.push_back("graded right unit");
  r.checked.push_back("graded left unit");
  for (Index k = 0; k <= n; ++k) {
    if (!agree(r, "graded right unit", compose(g.mult[k][0], tensor_map(identity<S>(d[k]), g.unit0)),
               identity<S>(d[k]), {k}))
      return r;
    if (!agree(r, "graded left unit", compose(g.mult[0][k], tensor_map(g.unit0, identity<S>(d[k]))),
               identity<S>(d[k]), {k}))
      return r;
  }
  return r;
}

template <class S>
CheckReport verify_graded_bialgebra(const GradedBialgebra<S>& g) {
  CheckReport r;
  if (g.coalgebra.dims != g.algebra.dims) {
    r.fail("shape", -1, "algebra and coalgebra components differ");
    return r;
  }
  r.merge(verify_graded_coalgebra(g.coalgebra));
  r.merge(verify_graded_algebra(g.algebra));
  if (!r.passed) return r;
  const Index n = g.degree();
  const auto& d = g.dims();
  const auto& m = g.algebra.mult;
  const auto& delta = g.coalgebra.comult;
  if (!family_complete(r, "braiding", g.braiding, n)) return r;
  for (Index a = 0; a <= n; ++a)
    for (Index b = 0; a + b <= n; ++b)
      if (!shaped(r, "c_{a,b}", g.braiding[a][b], d[a] * d[b], d[a] * d[b], {a, b})) return r;

  r.checked.push_back("graded Delta o m compatibility");
  for (Index a = 0; a <= n; ++a)
    for (Index b = 0; a + b <= n; ++b)
      for (Index s = 0; s <= a + b; ++s) {
        const Index t = a + b - s;
        const Mat<S> lhs = compose(delta[s][t], m[a][b]);
        Mat<S> rhs = zeros<S>(d[s] * d[t], d[a] * d[b]);
        for (Index s1 = 0; s1 <= a && s1 <= s; ++s1) {
          const Index t1 = a - s1, s2 = s - s1;
          if (s2 > b) continue;
          const Index t2 = b - s2;
          const Mat<S> split = tensor_map(delta[s1][t1], delta[s2][t2]);
          const Mat<S> swap = tensor_map(identity<S>(d[s1]), g.braiding[t1][s2], identity<S>(d[t2]));
          rhs += compose(tensor_map(m[s1][s2], m[t1][t2]), swap, split);
        }
        if (!agree(r, "graded Delta o m compatibility", lhs, rhs, {a, b, s})) return r;
      }
  const Mat<S>& u = g.algebra.unit0;
  const Mat<S>& eps = g.coalgebra.counit0;
  r.checked.push_back("graded eps o m");
  if (!agree(r, "graded eps o m", compose(eps, m[0][0]), tensor_map(eps, eps), {0, 0})) return r;
  r.checked.push_back("graded Delta o u");
  if (!agree(r, "graded Delta o u", compose(delta[0][0], u), tensor_map(u, u), {0})) return r;
  r.checked.push_back("graded eps o u");
  if (!agree(r, "graded eps o u", compose(eps, u), identity<S>(1), {0})) return r;
  if (g.complete) r.merge(verify_bialgebra(total_bialgebra(g)), "total: ");
  return r;
}

template <class S>
StronglyGraded is_strongly_graded_coalgebra(const GradedCoalgebra<S>& g) {
  const Index n = g.degree();
  for (Index k = 0; k <= n; ++k)
    for (Index a = 0; a <= k; ++a)
      if (!is_injective(g.comult[a][k - a])) return {false, std::pair<Index, Index>(a, k - a)};
  return {};
}

template <class S>
StronglyGraded is_strongly_graded_algebra(const GradedAlgebra<S>& g) {
  const Index n = g.degree();
  for (Index k = 0; k <= n; ++k)
    for (Index a = 0; a <= k; ++a)
      if (!is_surjective(g.mult[a][k - a])) return {false, std::pair<Index, Index>(a, k - a)};
  return {};
}

template <class S>
WithWitness<GradedCoalgebra<S>, S> associated_graded_coalgebra(const Subspace<S>& c, const Coalgebra<S>& e,
                                                               Index max_degree) {
  if (!is_subcoalgebra(c, e)) throw NotSubcoalgebra("associated graded coalgebra needs a subcoalgebra");
  const auto tower = wedge_tower(c, e, max_degree + 1);
  GradedWitness<S> w;
  w.stabilized_at = tower.stabilized_at;
  for (Index k = 0; k <= max_degree; ++k) w.pieces.push_back(make_piece(tower.power(k + 1), tower.power(k)));
  return {coalgebra_from(w.pieces, e), std::move(w)};
}

template <class S>
WithWitness<GradedAlgebra<S>, S> associated_graded_algebra(const Subspace<S>& i, const Algebra<S>& a,
                                                           Index max_degree) {
  if (!is_ideal(i, a)) throw NotIdeal("associated graded algebra needs an ideal");
  const auto tower = power_tower(i, a, max_degree + 1);
  GradedWitness<S> w;
  w.stabilized_at = tower.stabilized_at;
  for (Index k = 0; k <= max_degree; ++k) w.pieces.push_back(make_piece(tower.power(k), tower.power(k + 1)));
  return {algebra_from(w.pieces, a), std::move(w)};
}

template <class S>
Mat<S> wedge_multiplication(const Bialgebra<S>& e, const WedgeTower<S>& tower, Index a, Index b) {
  const Mat<S> prod = compose(e.mult(), tensor_map(tower.power(a + 1).basis(), tower.power(b + 1).basis()));
  return corestrict(prod, tower.power(a + b + 1));
}

template <class S>
Mat<S> quotient_comultiplication(const Bialgebra<S>& e, const PowerTower<S>& tower, Index a, Index b) {
  const Mat<S> split = apply_pair(quotient_with_section(tower.power(a + 1)).proj,
                                  quotient_with_section(tower.power(b + 1)).proj, e.comult());
  return factor_through_quotient(split, tower.power(a + b + 1));
}

template <class S>
GradedAlgebra<S> wedge_tower_algebra(const Bialgebra<S>& e, const WedgeTower<S>& tower, Index max_degree) {
  GradedAlgebra<S> g{{}, empty_family<S>(max_degree), tower.power(1).coordinates(e.unit())};
  for (Index k = 0; k <= max_degree; ++k) g.dims.push_back(tower.power(k + 1).dim());
  for (Index a = 0; a <= max_degree; ++a)
    for (Index b = 0; a + b <= max_degree; ++b) g.mult[a][b] = wedge_multiplication(e, tower, a, b);
  return g;
}

template <class S>
GradedCoalgebra<S> power_tower_coalgebra(const Bialgebra<S>& e, const PowerTower<S>& tower, Index max_degree) {
  GradedCoalgebra<S> g{{}, empty_family<S>(max_degree),
                       compose(e.counit(), quotient_with_section(tower.power(1)).section)};
  for (Index k = 0; k <= max_degree; ++k) g.dims.push_back(e.dim() - tower.power(k + 1).dim());
  for (Index a = 0; a <= max_degree; ++a)
    for (Index b = 0; a + b <= max_degree; ++b) g.comult[a][b] = quotient_comultiplication(e, tower, a, b);
  return g;
}

template <class S>
CheckReport check_wedge_multiplication(const Bialgebra<S>& e, const Subspace<S>& b, Index max_degree) {
  if (!predicates(b, e).is_subbialgebra) throw NotSubbialgebra("wedge multiplication needs a subbialgebra");
  CheckReport r;
  const Index n = max_degree;
  const auto tower = wedge_tower(b, e.coalgebra(), n + 1);
  r.checked.push_back("products of tower levels drop a level");
  for (Index u = 0; u <= n + 1; ++u)
    for (Index v = 0; u + v <= n + 1; ++v) {
      if (u + v == 0) continue;
      const Mat<S> lhs = compose(quotient_with_section(tower.power(u + v - 1)).proj, e.mult(),
                                 tensor_map(tower.power(u).basis(), tower.power(v).basis()));
      if (!agree(r, "products of tower levels drop a level", lhs, Mat<S>(zeros<S>(lhs.rows(), lhs.cols())), {u, v}))
        return r;
    }
  GradedAlgebra<S> g;
  try {
    g = wedge_tower_algebra(e, tower, n);
  } catch (const ImageNotContained& ex) {
    r.fail("wedge multiplication exists", -1, ex.what());
    return r;
  }
  r.merge(verify_graded_algebra(g), "wedge family: ");
  auto incl = [&](Index k) { return tower.power(k + 1).coordinates(tower.power(k).basis()); };
  r.checked.push_back("wedge family and inclusions");
  for (Index a = 0; a <= n; ++a)
    for (Index c = 0; a + c + 1 <= n; ++c) {
      const Mat<S> left = compose(g.mult[a + 1][c], tensor_map(incl(a + 1), identity<S>(g.dims[c])));
      const Mat<S> right = compose(g.mult[c][a + 1], tensor_map(identity<S>(g.dims[c]), incl(a + 1)));
      if (!agree(r, "wedge family and inclusions", left, compose(incl(a + c + 1), g.mult[a][c]), {a, c})) return r;
      if (!agree(r, "wedge family and inclusions", right, compose(incl(a + c + 1), g.mult[c][a]), {c, a})) return r;
    }
  r.checked.push_back("lowest wedge product is the product of B");
  agree(r, "lowest wedge product is the product of B", g.mult[0][0], restrict_to(e, b).mult(), {0, 0});
  return r;
}

template <class S>
CheckReport check_quotient_comultiplication(const Bialgebra<S>& e, const Mat<S>& pi, Index max_degree) {
  const auto bq = quotient_by(e, pi);
  CheckReport r;
  const Index n = max_degree;
  const auto tower = power_tower(kernel(pi), e.algebra(), n + 1);
  auto p = [&](Index k) { return quotient_with_section(tower.power(k)).proj; };
  auto sigma = [&](Index k) { return quotient_with_section(tower.power(k)).section; };
  r.checked.push_back("coproducts of power levels rise a level");
  for (Index u = 0; u <= n + 1; ++u)
    for (Index v = 0; u + v <= n + 1; ++v) {
      if (u + v == 0) continue;
      const Mat<S> lhs = apply_pair(p(u), p(v), compose(e.comult(), tower.power(u + v - 1).basis()));
      if (!agree(r, "coproducts of power levels rise a level", lhs, Mat<S>(zeros<S>(lhs.rows(), lhs.cols())),
                 {u, v}))
        return r;
    }
  GradedCoalgebra<S> g;
  try {
    g = power_tower_coalgebra(e, tower, n);
  } catch (const KernelNotContained& ex) {
    r.fail("quotient comultiplication exists", -1, ex.what());
    return r;
  }
  r.merge(verify_graded_coalgebra(g), "quotient family: ");
  // E/I^{k+1} -> E/I^k
  auto down = [&](Index k) { return compose(p(k), sigma(k + 1)); };
  r.checked.push_back("quotient family and projections");
  for (Index a = 0; a <= n; ++a)
    for (Index c = 0; a + c + 1 <= n; ++c) {
      const Mat<S> rhs = compose(g.comult[a][c], down(a + c + 1));
      const Mat<S> left = apply_local(down(a + 1), 1, g.dims[c], g.comult[a + 1][c]);
      const Mat<S> right = apply_local(down(a + 1), g.dims[c], 1, g.comult[c][a + 1]);
      if (!agree(r, "quotient family and projections", left, rhs, {a, c})) return r;
      if (!agree(r, "quotient family and projections", right, compose(g.comult[c][a], down(a + c + 1)), {c, a}))
        return r;
    }
  // E/I -> B
  const Mat<S> t = compose(pi, sigma(1));
  r.checked.push_back("lowest quotient coproduct is the coproduct of B");
  agree(r, "lowest quotient coproduct is the coproduct of B", compose(tensor_map(t, t), g.comult[0][0]),
        compose(bq.comult(), t), {0, 0});
  r.checked.push_back("lowest quotient counit is the counit of B");
  agree(r, "lowest quotient counit is the counit of B", g.counit0, compose(bq.counit(), t), {0});
  return r;
}

template <class S>
WithWitness<GradedBialgebra<S>, S> graded_bialgebra_from_subbialgebra(const Bialgebra<S>& e, const Subspace<S>& b,
                                                                      Index max_degree) {
  if (!predicates(b, e).is_subbialgebra) throw NotSubbialgebra("graded bialgebra needs a subbialgebra");
  const auto tower = wedge_tower(b, e.coalgebra(), max_degree + 1);
  GradedWitness<S> w;
  w.stabilized_at = tower.stabilized_at;
  for (Index k = 0; k <= max_degree; ++k) w.pieces.push_back(make_piece(tower.power(k + 1), tower.power(k)));
  GradedBialgebra<S> g{e.field(), coalgebra_from(w.pieces, e.coalgebra()), algebra_from(w.pieces, e.algebra()),
                       braiding_from(w.pieces, e), e.flip_braided(), covers(tower.stabilized_at, max_degree)};
  return {std::move(g), std::move(w)};
}

template <class S>
WithWitness<GradedBialgebra<S>, S> graded_bialgebra_from_quotient(const Bialgebra<S>& e, const Mat<S>& pi,
                                                                  Index max_degree) {
  quotient_by(e, pi);
  const auto tower = power_tower(kernel(pi), e.algebra(), max_degree + 1);
  GradedWitness<S> w;
  w.stabilized_at = tower.stabilized_at;
  for (Index k = 0; k <= max_degree; ++k) w.pieces.push_back(make_piece(tower.power(k), tower.power(k + 1)));
  GradedBialgebra<S> g{e.field(), coalgebra_from(w.pieces, e.coalgebra()), algebra_from(w.pieces, e.algebra()),
                       braiding_from(w.pieces, e), e.flip_braided(), covers(tower.stabilized_at, max_degree)};
  return {std::move(g), std::move(w)};
}

template <class S>
Mat<S> theta(const Bialgebra<S>&, const WedgeTower<S>& tower, const GradedWitness<S>& witness, Index a, Index b) {
  const auto w = sweedler_sequence(tower, a + b + 1);
  const auto &pa = witness.pieces.at(a), &pb = witness.pieces.at(b);
  return lift_through_mono(apply_pair(pa.quotient, pb.quotient, w.beta), tensor_map(pa.embed, pb.embed));
}

template <class S>
CheckReport check_subbialgebra_factorizations(const Bialgebra<S>& e, const Subspace<S>& b,
                                              const WithWitness<GradedBialgebra<S>, S>& gr) {
  CheckReport r;
  const auto& g = gr.object;
  const auto& pieces = gr.witness.pieces;
  const Index n = g.degree();
  const auto tower = wedge_tower(b, e.coalgebra(), n + 2);
  r.checked.push_back("induced multiplication");
  r.checked.push_back("induced comultiplication");
  for (Index a = 0; a <= n; ++a)
    for (Index c = 0; a + c <= n; ++c) {
      const auto &pa = pieces[a], &pc = pieces[c], &pn = pieces[a + c];
      const Mat<S> mw = wedge_multiplication(e, tower, a, c);
      if (!agree(r, "induced multiplication", compose(pn.proj, mw),
                 compose(g.algebra.mult[a][c], tensor_map(pa.proj, pc.proj)), {a, c}))
        return r;
      const Mat<S> lhs = compose(tensor_map(pa.embed, pc.embed), g.coalgebra.comult[a][c]);
      const Mat<S> rhs = apply_pair(pa.quotient, pc.quotient, compose(e.comult(), pn.lift));
      if (!agree(r, "induced comultiplication", lhs, rhs, {a, c})) return r;
    }
  r.checked.push_back("theta exists");
  r.checked.push_back("theta alpha");
  r.checked.push_back("theta gamma");
  for (Index a = 0; a <= n; ++a)
    for (Index c = 0; a + c <= n; ++c) {
      const auto &pa = pieces[a], &pc = pieces[c], &pn = pieces[a + c];
      const auto w = sweedler_sequence(tower, a + c + 1);
      Mat<S> th;
      try {
        th = theta(e, tower, gr.witness, a, c);
      } catch (const ImageNotContained& ex) {
        r.fail("theta exists", -1, ex.what());
        r.location = {a, c};
        return r;
      }
      if (!agree(r, "theta alpha", compose(th, w.alpha), compose(g.coalgebra.comult[a][c], pn.proj), {a, c}))
        return r;
      std::vector<Mat<S>> blocks;
      for (const auto& [u, v] : w.left_terms) {
        if (u == a + 1 && v == c + 1)
          blocks.push_back(tensor_map(pa.proj, pc.proj));
        else
          blocks.push_back(zeros<S>(pa.proj.rows() * pc.proj.rows(), tower.power(u).dim() * tower.power(v).dim()));
      }
      if (!agree(r, "theta gamma", compose(th, w.gamma), block_codiag(blocks, pa.proj.rows() * pc.proj.rows()), {a, c}))
        return r;
    }
  return r;
}

template <class S>
CheckReport check_quotient_factorizations(const Bialgebra<S>& e, const Mat<S>& pi,
                                          const WithWitness<GradedBialgebra<S>, S>& gr) {
  CheckReport r;
  const auto& g = gr.object;
  const auto& pieces = gr.witness.pieces;
  const Index n = g.degree();
  const auto tower = power_tower(kernel(pi), e.algebra(), n + 1);
  r.checked.push_back("induced comultiplication");
  r.checked.push_back("induced multiplication");
  for (Index a = 0; a <= n; ++a)
    for (Index c = 0; a + c <= n; ++c) {
      const auto &pa = pieces[a], &pc = pieces[c], &pn = pieces[a + c];
      const Mat<S> dv = quotient_comultiplication(e, tower, a, c);
      if (!agree(r, "induced comultiplication", compose(tensor_map(pa.embed, pc.embed), g.coalgebra.comult[a][c]),
                 compose(dv, pn.embed), {a, c}))
        return r;
      const Mat<S> mi =
          corestrict(compose(e.mult(), tensor_map(pa.upper.basis(), pc.upper.basis())), pn.upper);
      if (!agree(r, "induced multiplication", compose(pn.proj, mi),
                 compose(g.algebra.mult[a][c], tensor_map(pa.proj, pc.proj)), {a, c}))
        return r;
    }
  r.checked.push_back("counit factors through the quotient");
  const auto bq = quotient_by(e, pi);
  agree(r, "counit factors through the quotient", g.coalgebra.counit0, compose(bq.counit(), pi, pieces[0].lift), {0});
  return r;
}

template <class S>
Bialgebra<S> degree_zero(const GradedBialgebra<S>& g) {
  std::optional<Mat<S>> c;
  if (!g.flip) c = g.braiding[0][0];
  return Bialgebra<S>(g.field, g.algebra.mult[0][0], g.algebra.unit0, g.coalgebra.comult[0][0], g.coalgebra.counit0,
                      std::move(c));
}

namespace {

std::vector<Index> offsets(const std::vector<Index>& d) {
  std::vector<Index> off(d.size() + 1, 0);
  for (std::size_t k = 0; k < d.size(); ++k) off[k + 1] = off[k] + d[k];
  return off;
}

}  // namespace

template <class S>
Coalgebra<S> total_coalgebra(const GradedCoalgebra<S>& g) {
  const auto& d = g.dims;
  const Index n = g.degree();
  const auto off = offsets(d);
  const Index total = off.back();
  Mat<S> delta = zeros<S>(total * total, total), eps = zeros<S>(1, total);
  eps.leftCols(d[0]) = g.counit0;
  for (Index a = 0; a <= n; ++a)
    for (Index b = 0; a + b <= n; ++b) {
      const Mat<S>& dab = g.comult[a][b];
      for (Index i = 0; i < d[a]; ++i)
        for (Index j = 0; j < d[b]; ++j)
          for (Index k = 0; k < d[a + b]; ++k)
            delta((off[a] + i) * total + off[b] + j, off[a + b] + k) = dab(i * d[b] + j, k);
    }
  return {total, delta, eps};
}

template <class S>
Algebra<S> total_algebra(const GradedAlgebra<S>& g) {
  const auto& d = g.dims;
  const Index n = g.degree();
  const auto off = offsets(d);
  const Index total = off.back();
  Mat<S> m = zeros<S>(total, total * total), u = zeros<S>(total, 1);
  u.topRows(d[0]) = g.unit0;
  for (Index a = 0; a <= n; ++a)
    for (Index b = 0; a + b <= n; ++b) {
      const Mat<S>& mab = g.mult[a][b];
      for (Index i = 0; i < d[a]; ++i)
        for (Index j = 0; j < d[b]; ++j)
          for (Index k = 0; k < d[a + b]; ++k)
            m(off[a + b] + k, (off[a] + i) * total + off[b] + j) = mab(k, i * d[b] + j);
    }
  return {total, m, u};
}

template <class S>
Bialgebra<S> total_bialgebra(const GradedBialgebra<S>& g) {
  const auto& d = g.dims();
  const Index n = g.degree();
  const auto off = offsets(d);
  const Index total = off.back();
  const auto coalg = total_coalgebra(g.coalgebra);
  const auto alg = total_algebra(g.algebra);
  std::optional<Mat<S>> braid;
  if (!g.flip) {
    Mat<S> c = zeros<S>(total * total, total * total);
    for (Index a = 0; a <= n; ++a)
      for (Index b = 0; a + b <= n; ++b) {
        const Mat<S>& cab = g.braiding[a][b];
        for (Index i = 0; i < d[a]; ++i)
          for (Index j = 0; j < d[b]; ++j)
            for (Index k = 0; k < d[b]; ++k)
              for (Index l = 0; l < d[a]; ++l)
                c((off[b] + k) * total + off[a] + l, (off[a] + i) * total + off[b] + j) = cab(k * d[a] + l, i * d[b] + j);
      }
    braid = c;
  }
  return Bialgebra<S>(g.field, alg.mult, alg.unit, coalg.comult, coalg.counit, std::move(braid));
}

#define HOPFGR_GRADED(S)                                                                                            \
  template CheckReport verify_graded_coalgebra(const GradedCoalgebra<S>&);                                          \
  template CheckReport verify_graded_algebra(const GradedAlgebra<S>&);                                              \
  template CheckReport verify_graded_bialgebra(const GradedBialgebra<S>&);                                          \
  template StronglyGraded is_strongly_graded_coalgebra(const GradedCoalgebra<S>&);                                  \
  template StronglyGraded is_strongly_graded_algebra(const GradedAlgebra<S>&);                                      \
  template WithWitness<GradedCoalgebra<S>, S> associated_graded_coalgebra(const Subspace<S>&, const Coalgebra<S>&,  \
                                                                          Index);                                   \
  template WithWitness<GradedAlgebra<S>, S> associated_graded_algebra(const Subspace<S>&, const Algebra<S>&, Index); \
  template Mat<S> wedge_multiplication(const Bialgebra<S>&, const WedgeTower<S>&, Index, Index);                    \
  template Mat<S> quotient_comultiplication(const Bialgebra<S>&, const PowerTower<S>&, Index, Index);               \
  template GradedAlgebra<S> wedge_tower_algebra(const Bialgebra<S>&, const WedgeTower<S>&, Index);                  \
  template GradedCoalgebra<S> power_tower_coalgebra(const Bialgebra<S>&, const PowerTower<S>&, Index);              \
  template CheckReport check_wedge_multiplication(const Bialgebra<S>&, const Subspace<S>&, Index);                  \
  template CheckReport check_quotient_comultiplication(const Bialgebra<S>&, const Mat<S>&, Index);                  \
  template WithWitness<GradedBialgebra<S>, S> graded_bialgebra_from_subbialgebra(const Bialgebra<S>&,               \
                                                                                 const Subspace<S>&, Index);        \
  template WithWitness<GradedBialgebra<S>, S> graded_bialgebra_from_quotient(const Bialgebra<S>&, const Mat<S>&,    \
                                                                             Index);                                \
  template CheckReport check_subbialgebra_factorizations(const Bialgebra<S>&, const Subspace<S>&,                   \
                                                         const WithWitness<GradedBialgebra<S>, S>&);                \
  template CheckReport check_quotient_factorizations(const Bialgebra<S>&, const Mat<S>&,                            \
                                                     const WithWitness<GradedBialgebra<S>, S>&);                    \
  template Mat<S> theta(const Bialgebra<S>&, const WedgeTower<S>&, const GradedWitness<S>&, Index, Index);          \
  template Bialgebra<S> degree_zero(const GradedBialgebra<S>&);                                                     \
  template Coalgebra<S> total_coalgebra(const GradedCoalgebra<S>&);                                                \
  template Algebra<S> total_algebra(const GradedAlgebra<S>&);                                                      \
  template Bialgebra<S> total_bialgebra(const GradedBialgebra<S>&);

HOPFGR_GRADED(Rational)
HOPFGR_GRADED(ModP)

}  // namespace hopfgr
