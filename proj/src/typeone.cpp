#include "hopfgr/typeone.hpp"

#include <string>

namespace hopfgr {

namespace {

template <class S>
Mat<S> apply_pair(const Mat<S>& f, const Mat<S>& g, const Mat<S>& x) {
  return apply_local(f, 1, g.rows(), apply_local(g, f.cols(), 1, x));
}

template <class S>
bool shape_ok(const Mat<S>& f, Index rows, Index cols) {
  return f.rows() == rows && f.cols() == cols;
}

template <class S>
void require_bimodule(const Bimodule<S>& m, const std::string& what) {
  const auto r = verify_bimodule(m);
  if (!r) throw ActionAxiomFailure(what + ": " + r.failed_identity + (r.detail.empty() ? "" : " (" + r.detail + ")"));
}

template <class S>
void require_bicomodule(const Bicomodule<S>& m, const std::string& what) {
  const auto r = verify_bicomodule(m);
  if (!r) throw CoactionAxiomFailure(what + ": " + r.failed_identity + (r.detail.empty() ? "" : " (" + r.detail + ")"));
}

// Inclusion of the components lo..hi-1 into the direct sum.
Index offset_of(const std::vector<Index>& dims, Index k) {
  Index off = 0;
  for (Index i = 0; i < k; ++i) off += dims[i];
  return off;
}

template <class S>
Mat<S> range_inclusion(const std::vector<Index>& dims, Index lo, Index hi) {
  const Index total = offset_of(dims, static_cast<Index>(dims.size()));
  const Index from = offset_of(dims, lo), to = offset_of(dims, hi);
  Mat<S> f = zeros<S>(total, to - from);
  for (Index i = 0; i < to - from; ++i) f(from + i, i) = S(1);
  return f;
}

std::string degree_text(Index n) { return std::to_string(n); }

std::string pair_text(Index a, Index b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

template <class S>
void fail(Condition<S>& c, Index degree, std::vector<Index> location, std::string detail, Mat<S> witness) {
  c.holds = false;
  c.degree = degree;
  c.location = std::move(location);
  c.detail = std::move(detail);
  c.witness = std::move(witness);
}

template <class S>
void finish(TypeOneReport<S>& rep, bool assert_agreement) {
  const bool first = rep.conditions[0].holds;
  rep.agreement = true;
  for (const auto& c : rep.conditions) rep.agreement = rep.agreement && c.holds == first;
  if (!rep.agreement && assert_agreement) {
    std::string values;
    for (std::size_t k = 0; k < rep.conditions.size(); ++k)
      values += (k ? ", " : "") + std::to_string(k + 1) + "=" + (rep.conditions[k].holds ? "true" : "false");
    throw AgreementFailure(std::string("type-one conditions disagree on the ") + to_string(rep.side) + " side: " + values);
  }
}

template <class S>
Bimodule<S> empty_bimodule(const Algebra<S>& base) {
  return {base, 0, zeros<S>(0, 0), zeros<S>(0, 0)};
}

template <class S>
Bicomodule<S> empty_bicomodule(const Coalgebra<S>& base) {
  return {base, 0, zeros<S>(0, 0), zeros<S>(0, 0)};
}

}  // namespace

const char* to_string(Side s) { return s == Side::sub ? "sub" : "quot"; }

template <class S>
CheckReport verify_bimodule(const Bimodule<S>& m) {
  CheckReport r;
  const Index b = m.base.dim, d = m.dim;
  if (!shape_ok(m.base.mult, b, b * b) || !shape_ok(m.base.unit, b, 1)) {
    r.fail("shape", -1, "base algebra maps have the wrong shape");
    return r;
  }
  if (!shape_ok(m.left, d, b * d) || !shape_ok(m.right, d, d * b)) {
    r.fail("shape", -1, "action maps have the wrong shape");
    return r;
  }
  const Mat<S> ib = identity<S>(b), id = identity<S>(d);
  r.expect_equal("left action associativity", compose(m.left, tensor_map(m.base.mult, id)),
                 compose(m.left, tensor_map(ib, m.left)));
  r.expect_equal("left action unit", compose(m.left, tensor_map(m.base.unit, id)), id);
  r.expect_equal("right action associativity", compose(m.right, tensor_map(id, m.base.mult)),
                 compose(m.right, tensor_map(m.right, ib)));
  r.expect_equal("right action unit", compose(m.right, tensor_map(id, m.base.unit)), id);
  r.expect_equal("actions commute", compose(m.right, tensor_map(m.left, ib)), compose(m.left, tensor_map(ib, m.right)));
  return r;
}

template <class S>
CheckReport verify_bicomodule(const Bicomodule<S>& m) {
  CheckReport r;
  const Index b = m.base.dim, d = m.dim;
  if (!shape_ok(m.base.comult, b * b, b) || !shape_ok(m.base.counit, 1, b)) {
    r.fail("shape", -1, "base coalgebra maps have the wrong shape");
    return r;
  }
  if (!shape_ok(m.left, b * d, d) || !shape_ok(m.right, d * b, d)) {
    r.fail("shape", -1, "coaction maps have the wrong shape");
    return r;
  }
  const Mat<S> ib = identity<S>(b), id = identity<S>(d);
  r.expect_equal("left coaction coassociativity", compose(tensor_map(m.base.comult, id), m.left),
                 compose(tensor_map(ib, m.left), m.left));
  r.expect_equal("left coaction counit", compose(tensor_map(m.base.counit, id), m.left), id);
  r.expect_equal("right coaction coassociativity", compose(tensor_map(id, m.base.comult), m.right),
                 compose(tensor_map(m.right, ib), m.right));
  r.expect_equal("right coaction counit", compose(tensor_map(id, m.base.counit), m.right), id);
  r.expect_equal("coactions commute", compose(tensor_map(m.left, ib), m.right), compose(tensor_map(ib, m.right), m.left));
  return r;
}

template <class S>
RelativeTensor<S> tensor_over(const Bimodule<S>& v, const Bimodule<S>& w) {
  require_bimodule(v, "left factor");
  require_bimodule(w, "right factor");
  if (v.base.dim != w.base.dim || !same(v.base.mult, w.base.mult) || !same(v.base.unit, w.base.unit))
    throw ActionAxiomFailure("factors are modules over different algebras");
  const Index dv = v.dim, dw = w.dim;
  const Mat<S> ib = identity<S>(v.base.dim), iv = identity<S>(dv), iw = identity<S>(dw);
  const Mat<S> relations = tensor_map(v.right, iw) - tensor_map(iv, w.left);
  const auto q = quotient_with_section(image(relations));
  RelativeTensor<S> t;
  t.chi = q.proj;
  t.module.base = v.base;
  t.module.dim = q.dim();
  t.module.left =
      factor_through_epi(compose(q.proj, tensor_map(v.left, iw)), tensor_map(ib, q.proj), tensor_map(ib, q.section));
  t.module.right =
      factor_through_epi(compose(q.proj, tensor_map(iv, w.right)), tensor_map(q.proj, ib), tensor_map(q.section, ib));
  return t;
}

template <class S>
RelativeCotensor<S> cotensor_over(const Bicomodule<S>& v, const Bicomodule<S>& w) {
  require_bicomodule(v, "left factor");
  require_bicomodule(w, "right factor");
  if (v.base.dim != w.base.dim || !same(v.base.comult, w.base.comult) || !same(v.base.counit, w.base.counit))
    throw CoactionAxiomFailure("factors are comodules over different coalgebras");
  const Index dv = v.dim, dw = w.dim;
  const Mat<S> ib = identity<S>(v.base.dim), iv = identity<S>(dv), iw = identity<S>(dw);
  const Mat<S> relations = tensor_map(v.right, iw) - tensor_map(iv, w.left);
  const auto z = kernel(relations);
  RelativeCotensor<S> t;
  t.zeta = z.basis();
  t.comodule.base = v.base;
  t.comodule.dim = z.dim();
  t.comodule.left = lift_through_mono(compose(tensor_map(v.left, iw), t.zeta), tensor_map(ib, t.zeta));
  t.comodule.right = lift_through_mono(compose(tensor_map(iv, w.right), t.zeta), tensor_map(t.zeta, ib));
  return t;
}

template <class S>
std::vector<RelativeTensorPower<S>> tensor_powers(const Bimodule<S>& m, Index max_n) {
  require_bimodule(m, "generator");
  std::vector<RelativeTensorPower<S>> out;
  out.push_back({0, Bimodule<S>{m.base, m.base.dim, m.base.mult, m.base.mult}, m.base.unit, zeros<S>(0, 0)});
  if (max_n >= 1) out.push_back({1, m, identity<S>(m.dim), m.left});
  for (Index n = 2; n <= max_n; ++n) {
    const auto& prev = out.back();
    auto t = tensor_over(prev.power, m);
    Mat<S> chi = compose(t.chi, tensor_map(prev.chi, identity<S>(m.dim)));
    out.push_back({n, std::move(t.module), std::move(chi), std::move(t.chi)});
  }
  return out;
}

template <class S>
std::vector<RelativeCotensorPower<S>> cotensor_powers(const Bicomodule<S>& m, Index max_n) {
  require_bicomodule(m, "generator");
  std::vector<RelativeCotensorPower<S>> out;
  out.push_back({0, Bicomodule<S>{m.base, m.base.dim, m.base.comult, m.base.comult}, m.base.counit, zeros<S>(0, 0)});
  if (max_n >= 1) out.push_back({1, m, identity<S>(m.dim), m.left});
  for (Index n = 2; n <= max_n; ++n) {
    const auto& prev = out.back();
    auto t = cotensor_over(prev.power, m);
    Mat<S> zeta = compose(tensor_map(prev.zeta, identity<S>(m.dim)), t.zeta);
    out.push_back({n, std::move(t.comodule), std::move(zeta), std::move(t.zeta)});
  }
  return out;
}

template <class S>
std::optional<Index> PhiFamily<S>::first_failure() const {
  for (const auto& c : components)
    if (!c.epi) return c.degree;
  return std::nullopt;
}

template <class S>
std::optional<Index> PsiFamily<S>::first_failure() const {
  for (const auto& c : components)
    if (!c.mono) return c.degree;
  return std::nullopt;
}

namespace {

template <class S>
PhiComponent<S> phi_component(Index n, Mat<S> map) {
  auto im = image(map);
  const bool epi = im.dim() == map.rows();
  return {n, std::move(map), epi, std::move(im)};
}

template <class S>
PsiComponent<S> psi_component(Index n, Mat<S> map) {
  auto ker = kernel(map);
  const bool mono = ker.dim() == 0;
  return {n, std::move(map), mono, std::move(ker)};
}

// phi_n from phi_{n-1}: phi_n step = mult_{n-1,1} (phi_{n-1} (x) id).
template <class S>
Mat<S> phi_step(const RelativeTensorPower<S>& p, const Mat<S>& prev, const Mat<S>& mult, Index gen_dim) {
  return factor_through_epi(compose(mult, tensor_map(prev, identity<S>(gen_dim))), p.step, right_inverse(p.step));
}

// psi_n from psi_{n-1}: step psi_n = (psi_{n-1} (x) id) comult_{n-1,1}.
template <class S>
Mat<S> psi_step(const RelativeCotensorPower<S>& p, const Mat<S>& prev, const Mat<S>& comult, Index gen_dim) {
  return lift_through_mono(compose(tensor_map(prev, identity<S>(gen_dim)), comult), p.step);
}

void mismatch(const std::string& what, Index n, const Error& e) {
  throw ConstructionMismatch(what + "_" + std::to_string(n) + ": " + e.what());
}

}  // namespace

template <class S>
PhiFamily<S> phi_components(const Bialgebra<S>& e, const Subspace<S>& b, Index max_degree) {
  if (!predicates(b, e).is_subbialgebra) throw NotSubbialgebra("phi components need a subbialgebra");
  const auto tower = wedge_tower(b, e.coalgebra(), max_degree + 1);
  const Algebra<S> base{tower.power(1).dim(), wedge_multiplication(e, tower, 0, 0),
                        tower.power(1).coordinates(e.unit())};
  PhiFamily<S> f;
  f.generator = {base, tower.power(2).dim(), wedge_multiplication(e, tower, 0, 1), wedge_multiplication(e, tower, 1, 0)};
  f.powers = tensor_powers(f.generator, max_degree);
  const Mat<S> inc = tower.power(2).basis();
  Mat<S> product = inc;
  for (Index n = 0; n <= max_degree; ++n) {
    if (n <= 1) {
      f.components.push_back(phi_component(n, identity<S>(f.powers[n].power.dim)));
      continue;
    }
    const auto& p = f.powers[n];
    Mat<S> map, direct;
    try {
      map = phi_step(p, f.components.back().map, wedge_multiplication(e, tower, n - 1, 1), f.generator.dim);
      product = compose(e.mult(), tensor_map(inc, product));
      direct = factor_through_epi(tower.power(n + 1).coordinates(product), p.chi, right_inverse(p.chi));
    } catch (const Error& ex) {
      mismatch("phi", n, ex);
    }
    if (!same(map, direct)) throw ConstructionMismatch("phi_" + degree_text(n) + ": recursion and product formula differ");
    f.components.push_back(phi_component(n, std::move(map)));
  }
  return f;
}

template <class S>
PsiFamily<S> psi_components(const Bialgebra<S>& e, const Mat<S>& pi, Index max_degree) {
  quotient_by(e, pi);
  const auto tower = power_tower(kernel(pi), e.algebra(), max_degree + 1);
  const auto q1 = quotient_with_section(tower.power(1));
  const auto q2 = quotient_with_section(tower.power(2));
  const Coalgebra<S> base{q1.dim(), quotient_comultiplication(e, tower, 0, 0), compose(e.counit(), q1.section)};
  PsiFamily<S> f;
  f.generator = {base, q2.dim(), quotient_comultiplication(e, tower, 0, 1), quotient_comultiplication(e, tower, 1, 0)};
  f.powers = cotensor_powers(f.generator, max_degree);
  Mat<S> split = q2.proj;
  for (Index n = 0; n <= max_degree; ++n) {
    if (n <= 1) {
      f.components.push_back(psi_component(n, identity<S>(f.powers[n].power.dim)));
      continue;
    }
    const auto& p = f.powers[n];
    Mat<S> map, direct;
    try {
      map = psi_step(p, f.components.back().map, quotient_comultiplication(e, tower, n - 1, 1), f.generator.dim);
      split = apply_pair(q2.proj, split, e.comult());
      direct = lift_through_mono(factor_through_quotient(split, tower.power(n + 1)), p.zeta);
    } catch (const Error& ex) {
      mismatch("psi", n, ex);
    }
    if (!same(map, direct))
      throw ConstructionMismatch("psi_" + degree_text(n) + ": recursion and comultiplication formula differ");
    f.components.push_back(psi_component(n, std::move(map)));
  }
  return f;
}

template <class S>
PhiFamily<S> graded_phi(const GradedAlgebra<S>& g) {
  const Index top = g.degree();
  const Algebra<S> base{g.dims[0], g.mult[0][0], g.unit0};
  PhiFamily<S> f;
  f.generator = top >= 1 ? Bimodule<S>{base, g.dims[1], g.mult[0][1], g.mult[1][0]} : empty_bimodule(base);
  f.powers = tensor_powers(f.generator, top);
  const auto total = total_algebra(g);
  const Mat<S> inc = range_inclusion<S>(g.dims, 1, std::min<Index>(2, top + 1));
  Mat<S> product = inc;
  for (Index t = 0; t <= top; ++t) {
    if (t <= 1) {
      f.components.push_back(phi_component(t, identity<S>(f.powers[t].power.dim)));
      continue;
    }
    const auto& p = f.powers[t];
    Mat<S> map, direct;
    try {
      map = phi_step(p, f.components.back().map, g.mult[t - 1][1], f.generator.dim);
      product = compose(total.mult, tensor_map(inc, product));
      const Mat<S> rows = range_inclusion<S>(g.dims, t, t + 1).transpose();
      direct = factor_through_epi(compose(rows, product), p.chi, right_inverse(p.chi));
    } catch (const Error& ex) {
      mismatch("phi", t, ex);
    }
    if (!same(map, direct)) throw ConstructionMismatch("phi_" + degree_text(t) + ": recursion and product formula differ");
    f.components.push_back(phi_component(t, std::move(map)));
  }
  return f;
}

template <class S>
PsiFamily<S> graded_psi(const GradedCoalgebra<S>& g) {
  const Index top = g.degree();
  const Coalgebra<S> base{g.dims[0], g.comult[0][0], g.counit0};
  PsiFamily<S> f;
  f.generator = top >= 1 ? Bicomodule<S>{base, g.dims[1], g.comult[0][1], g.comult[1][0]} : empty_bicomodule(base);
  f.powers = cotensor_powers(f.generator, top);
  const auto total = total_coalgebra(g);
  const Mat<S> proj = range_inclusion<S>(g.dims, 1, std::min<Index>(2, top + 1)).transpose();
  Mat<S> split = proj;
  for (Index m = 0; m <= top; ++m) {
    if (m <= 1) {
      f.components.push_back(psi_component(m, identity<S>(f.powers[m].power.dim)));
      continue;
    }
    const auto& p = f.powers[m];
    Mat<S> map, direct;
    try {
      map = psi_step(p, f.components.back().map, g.comult[m - 1][1], f.generator.dim);
      split = apply_pair(proj, split, total.comult);
      direct = lift_through_mono(compose(split, range_inclusion<S>(g.dims, m, m + 1)), p.zeta);
    } catch (const Error& ex) {
      mismatch("psi", m, ex);
    }
    if (!same(map, direct))
      throw ConstructionMismatch("psi_" + degree_text(m) + ": recursion and comultiplication formula differ");
    f.components.push_back(psi_component(m, std::move(map)));
  }
  return f;
}

template <class S>
Subspace<S> iterated_wedge(const Subspace<S>& c, const Coalgebra<S>& e, Index n) {
  Subspace<S> w = c;
  for (Index k = 2; k <= n; ++k) w = wedge(w, c, e);
  return w;
}

template <class S>
Subspace<S> iterated_product(const Subspace<S>& s, const Algebra<S>& a, Index n) {
  Subspace<S> p = s;
  for (Index k = 2; k <= n; ++k) p = ideal_product(p, s, a);
  return p;
}

template <class S>
TypeOneReport<S> typeone_check_sub(const Bialgebra<S>& e, const Subspace<S>& b, Index max_degree,
                                   bool assert_agreement) {
  if (!predicates(b, e).is_subbialgebra) throw NotSubbialgebra("type-one check needs a subbialgebra");
  const Index top = max_degree;
  TypeOneReport<S> rep;
  rep.side = Side::sub;
  rep.max_degree = top;
  const auto gr = graded_bialgebra_from_subbialgebra(e, b, top);
  const auto tower = wedge_tower(b, e.coalgebra(), top + 1);

  if (const auto s = is_strongly_graded_algebra(gr.object.algebra); !s) {
    const auto [i, j] = *s.first_failure;
    fail(rep.conditions[1], i + j, {i, j}, "graded multiplication " + pair_text(i, j) + " is not onto",
         image(gr.object.algebra.mult[i][j]).basis());
  }

  const auto levels = wedge_tower_algebra(e, tower, top);
  if (const auto s = is_strongly_graded_algebra(levels); !s) {
    const auto [i, j] = *s.first_failure;
    fail(rep.conditions[2], i + j, {i, j}, "wedge multiplication " + pair_text(i, j) + " is not onto",
         compose(tower.power(i + j + 1).basis(), image(levels.mult[i][j]).basis()));
  }

  for (Index n = 2; n <= top; ++n) {
    const auto prod = iterated_product(tower.power(2), e.algebra(), n);
    if (prod != tower.power(n + 1)) {
      fail(rep.conditions[3], n, {n}, "power " + degree_text(n) + " of the second wedge level is a proper subspace",
           prod.basis());
      break;
    }
  }

  auto& c1 = rep.conditions[0];
  if (const auto s = is_strongly_graded_coalgebra(gr.object.coalgebra); !s) {
    const auto [i, j] = *s.first_failure;
    fail(c1, i + j, {i, j}, "graded comultiplication " + pair_text(i, j) + " is not injective",
         kernel(gr.object.coalgebra.comult[i][j]).basis());
  } else {
    const auto phi = phi_components(e, b, top);
    if (const auto n = phi.first_failure()) {
      fail(c1, *n, {*n}, "phi_" + degree_text(*n) + " is not onto",
           compose(tower.power(*n + 1).basis(), phi.components[*n].image.basis()));
    } else {
      const auto psi = graded_psi(gr.object.coalgebra);
      if (const auto m = psi.first_failure())
        fail(c1, *m, {*m}, "graded psi_" + degree_text(*m) + " is not injective", psi.components[*m].kernel.basis());
    }
  }
  finish(rep, assert_agreement);
  return rep;
}

template <class S>
TypeOneReport<S> typeone_check_quot(const Bialgebra<S>& e, const Mat<S>& pi, Index max_degree,
                                    bool assert_agreement) {
  quotient_by(e, pi);
  const Index top = max_degree;
  TypeOneReport<S> rep;
  rep.side = Side::quot;
  rep.max_degree = top;
  const auto gr = graded_bialgebra_from_quotient(e, pi, top);
  const auto tower = power_tower(kernel(pi), e.algebra(), top + 1);

  if (const auto s = is_strongly_graded_coalgebra(gr.object.coalgebra); !s) {
    const auto [i, j] = *s.first_failure;
    fail(rep.conditions[1], i + j, {i, j}, "graded comultiplication " + pair_text(i, j) + " is not injective",
         kernel(gr.object.coalgebra.comult[i][j]).basis());
  }

  const auto quotients = power_tower_coalgebra(e, tower, top);
  if (const auto s = is_strongly_graded_coalgebra(quotients); !s) {
    const auto [i, j] = *s.first_failure;
    fail(rep.conditions[2], i + j, {i, j}, "quotient comultiplication " + pair_text(i, j) + " is not injective",
         compose(quotient_with_section(tower.power(i + j + 1)).section, kernel(quotients.comult[i][j]).basis()));
  }

  for (Index n = 2; n <= top; ++n) {
    const auto w = iterated_wedge(tower.power(2), e.coalgebra(), n);
    if (w != tower.power(n + 1)) {
      fail(rep.conditions[3], n, {n}, "wedge power " + degree_text(n) + " of the second ideal power is too large",
           w.basis());
      break;
    }
  }

  auto& c1 = rep.conditions[0];
  if (const auto s = is_strongly_graded_algebra(gr.object.algebra); !s) {
    const auto [i, j] = *s.first_failure;
    fail(c1, i + j, {i, j}, "graded multiplication " + pair_text(i, j) + " is not onto",
         image(gr.object.algebra.mult[i][j]).basis());
  } else {
    const auto psi = psi_components(e, pi, top);
    if (const auto n = psi.first_failure()) {
      fail(c1, *n, {*n}, "psi_" + degree_text(*n) + " is not injective",
           compose(quotient_with_section(tower.power(*n + 1)).section, psi.components[*n].kernel.basis()));
    } else {
      const auto phi = graded_phi(gr.object.algebra);
      if (const auto t = phi.first_failure())
        fail(c1, *t, {*t}, "graded phi_" + degree_text(*t) + " is not onto", phi.components[*t].image.basis());
    }
  }
  finish(rep, assert_agreement);
  return rep;
}

namespace {

void require_agreement(const CheckReport& r, bool reference, const std::vector<std::pair<std::string, bool>>& values) {
  std::string off;
  for (const auto& [name, v] : values)
    if (v != reference) off += (off.empty() ? "" : ", ") + name;
  if (!off.empty())
    throw AgreementFailure("characterizations disagree with strong grading (" +
                           std::string(reference ? "true" : "false") + "): " + off +
                           (r.passed ? "" : "; first failure " + r.failed_identity));
}

}  // namespace

template <class S>
CheckReport universal_map_assertions(const GradedCoalgebra<S>& g) {
  const Index top = g.degree();
  CheckReport r;
  const bool strongly = is_strongly_graded_coalgebra(g).holds;
  bool by_one = true;
  for (Index a = 0; a + 1 <= top; ++a) by_one = by_one && is_injective(g.comult[a][1]);
  const auto psi = graded_psi(g);
  const bool each = !psi.first_failure();
  std::vector<Mat<S>> maps;
  for (const auto& c : psi.components) maps.push_back(c.map);
  const bool whole = is_injective(direct_sum(maps));
  const auto total = total_coalgebra(g);
  const auto tower = wedge_tower(Subspace<S>::span(range_inclusion<S>(g.dims, 0, 1)), total, std::max<Index>(top + 1, 2));
  bool wedges = true;
  for (Index n = 1; n <= top + 1; ++n)
    wedges = wedges && tower.power(n) == Subspace<S>::span(range_inclusion<S>(g.dims, 0, std::min(n, top + 1)));
  const bool second = tower.power(2) == Subspace<S>::span(range_inclusion<S>(g.dims, 0, std::min<Index>(2, top + 1)));

  r.expect("strongly graded", strongly);
  r.expect("Delta_{a,1} injective", by_one);
  r.expect("psi_m injective", each);
  r.expect("psi injective", whole);
  r.expect("wedge powers of degree zero", wedges);
  r.expect("second wedge power of degree zero", second);
  require_agreement(r, strongly,
                    {{"Delta_{a,1}", by_one}, {"psi_m", each}, {"psi", whole}, {"wedge powers", wedges},
                     {"second wedge power", second}});
  return r;
}

template <class S>
CheckReport universal_map_assertions(const GradedAlgebra<S>& g) {
  const Index top = g.degree();
  CheckReport r;
  const bool strongly = is_strongly_graded_algebra(g).holds;
  bool by_one = true;
  for (Index a = 0; a + 1 <= top; ++a) by_one = by_one && is_surjective(g.mult[a][1]);
  const auto phi = graded_phi(g);
  const bool each = !phi.first_failure();
  std::vector<Mat<S>> maps;
  for (const auto& c : phi.components) maps.push_back(c.map);
  const bool whole = is_surjective(direct_sum(maps));
  const Index parts = top + 1;
  const auto total = total_algebra(g);
  const auto tower =
      power_tower(Subspace<S>::span(range_inclusion<S>(g.dims, std::min<Index>(1, parts), parts)), total,
                  std::max<Index>(top + 1, 2));
  bool powers = true;
  for (Index n = 1; n <= top + 1; ++n)
    powers = powers && tower.power(n) == Subspace<S>::span(range_inclusion<S>(g.dims, std::min(n, parts), parts));
  const bool second = tower.power(2) == Subspace<S>::span(range_inclusion<S>(g.dims, std::min<Index>(2, parts), parts));

  r.expect("strongly graded", strongly);
  r.expect("m_{a,1} onto", by_one);
  r.expect("phi_t onto", each);
  r.expect("phi onto", whole);
  r.expect("powers of the augmentation ideal", powers);
  r.expect("square of the augmentation ideal", second);
  require_agreement(r, strongly,
                    {{"m_{a,1}", by_one}, {"phi_t", each}, {"phi", whole}, {"ideal powers", powers},
                     {"ideal square", second}});
  return r;
}

template <class S>
CheckReport universal_map_assertions(const GradedBialgebra<S>& g, Side side) {
  return side == Side::sub ? universal_map_assertions(g.coalgebra) : universal_map_assertions(g.algebra);
}

#define HOPFGR_TYPEONE(S)                                                                                        \
  template CheckReport verify_bimodule(const Bimodule<S>&);                                                      \
  template CheckReport verify_bicomodule(const Bicomodule<S>&);                                                  \
  template RelativeTensor<S> tensor_over(const Bimodule<S>&, const Bimodule<S>&);                                \
  template RelativeCotensor<S> cotensor_over(const Bicomodule<S>&, const Bicomodule<S>&);                        \
  template std::vector<RelativeTensorPower<S>> tensor_powers(const Bimodule<S>&, Index);                         \
  template std::vector<RelativeCotensorPower<S>> cotensor_powers(const Bicomodule<S>&, Index);                   \
  template struct PhiFamily<S>;                                                                                  \
  template struct PsiFamily<S>;                                                                                  \
  template PhiFamily<S> phi_components(const Bialgebra<S>&, const Subspace<S>&, Index);                          \
  template PsiFamily<S> psi_components(const Bialgebra<S>&, const Mat<S>&, Index);                               \
  template PhiFamily<S> graded_phi(const GradedAlgebra<S>&);                                                     \
  template PsiFamily<S> graded_psi(const GradedCoalgebra<S>&);                                                   \
  template Subspace<S> iterated_wedge(const Subspace<S>&, const Coalgebra<S>&, Index);                           \
  template Subspace<S> iterated_product(const Subspace<S>&, const Algebra<S>&, Index);                           \
  template TypeOneReport<S> typeone_check_sub(const Bialgebra<S>&, const Subspace<S>&, Index, bool);             \
  template TypeOneReport<S> typeone_check_quot(const Bialgebra<S>&, const Mat<S>&, Index, bool);                 \
  template CheckReport universal_map_assertions(const GradedCoalgebra<S>&);                                      \
  template CheckReport universal_map_assertions(const GradedAlgebra<S>&);                                        \
  template CheckReport universal_map_assertions(const GradedBialgebra<S>&, Side);

HOPFGR_TYPEONE(Rational)
HOPFGR_TYPEONE(ModP)

}  // namespace hopfgr
