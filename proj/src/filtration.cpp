#include "hopfgr/filtration.hpp"

#include <string>

namespace hopfgr {

const char* to_string(StopReason r) {
  return r == StopReason::stabilized ? "stabilized" : "degree_cap";
}

template <class S>
const Subspace<S>& Tower<S>::power(Index n) const {
  if (n < 0) throw std::out_of_range("negative tower level");
  if (n < static_cast<Index>(powers.size())) return powers[n];
  if (stabilized_at) return powers.back();
  throw std::out_of_range("tower level " + std::to_string(n) + " beyond degree cap " + std::to_string(degree()));
}

template <class S>
std::vector<Index> Tower<S>::dims() const {
  std::vector<Index> out;
  for (const auto& p : powers) out.push_back(p.dim());
  return out;
}

namespace {

template <class S>
void require_ambient(const Subspace<S>& s, Index n, const char* what) {
  if (s.ambient() != n)
    throw AmbientMismatch(std::string(what) + ": subspace of K^" + std::to_string(s.ambient()) + " in a space of dimension " +
                          std::to_string(n));
}

// (f (x) g) x for x with rows dom(f) * dom(g).
template <class S>
Mat<S> apply_pair(const Mat<S>& f, const Mat<S>& g, const Mat<S>& x) {
  return apply_local(f, 1, g.rows(), apply_local(g, f.cols(), 1, x));
}

template <class S, class Step>
void grow(Tower<S>& t, Subspace<S> first, Index max_degree, Step step) {
  t.powers.push_back(std::move(first));
  for (Index n = 1; n <= max_degree + 1; ++n) {
    Subspace<S> next = step(t.powers.back());
    if (next == t.powers.back()) {
      t.stabilized_at = n - 1;
      t.stop = StopReason::stabilized;
      return;
    }
    if (n > max_degree) break;
    t.powers.push_back(std::move(next));
  }
  t.stop = StopReason::degree_cap;
}

}  // namespace

template <class S>
Subspace<S> wedge(const Subspace<S>& c, const Subspace<S>& d, const Coalgebra<S>& e) {
  require_ambient(c, e.dim, "wedge");
  require_ambient(d, e.dim, "wedge");
  return kernel(apply_pair(quotient_with_section(c).proj, quotient_with_section(d).proj, e.comult));
}

template <class S>
WedgeTower<S> wedge_tower(const Subspace<S>& c, const Coalgebra<S>& e, Index max_degree) {
  require_ambient(c, e.dim, "wedge_tower");
  WedgeTower<S> t;
  t.base = c;
  t.host = e;
  t.base_is_subcoalgebra = is_subcoalgebra(c, e);
  grow(t, Subspace<S>::zero(e.dim), max_degree, [&](const Subspace<S>& prev) { return wedge(prev, c, e); });
  return t;
}

template <class S>
bool wedge_associativity_check(const Subspace<S>& c, const Subspace<S>& d, const Subspace<S>& f,
                               const Coalgebra<S>& e) {
  return wedge(wedge(c, d, e), f, e) == wedge(c, wedge(d, f, e), e);
}

template <class S>
Subspace<S> ideal_product(const Subspace<S>& i, const Subspace<S>& j, const Algebra<S>& a) {
  require_ambient(i, a.dim, "ideal_product");
  require_ambient(j, a.dim, "ideal_product");
  return image(compose(a.mult, tensor_map(i.basis(), j.basis())));
}

template <class S>
PowerTower<S> power_tower(const Subspace<S>& i, const Algebra<S>& a, Index max_degree) {
  require_ambient(i, a.dim, "power_tower");
  PowerTower<S> t;
  t.base = i;
  t.host = a;
  t.base_is_ideal = is_ideal(i, a);
  grow(t, Subspace<S>::full(a.dim), max_degree, [&](const Subspace<S>& prev) { return ideal_product(prev, i, a); });
  return t;
}

template <class S>
bool is_subcoalgebra(const Subspace<S>& s, const Coalgebra<S>& e) {
  require_ambient(s, e.dim, "is_subcoalgebra");
  const Mat<S> p = quotient_with_section(s).proj;
  const Mat<S> ds = compose(e.comult, s.basis());
  // Delta(S) inside S (x) S iff it is killed by p (x) id and id (x) p.
  return is_zero(apply_local(p, 1, e.dim, ds)) && is_zero(apply_local(p, e.dim, 1, ds));
}

template <class S>
bool is_ideal(const Subspace<S>& s, const Algebra<S>& a) {
  require_ambient(s, a.dim, "is_ideal");
  const Mat<S> p = quotient_with_section(s).proj;
  const Mat<S> id = identity<S>(a.dim);
  return is_zero(compose(p, a.mult, tensor_map(id, s.basis()))) && is_zero(compose(p, a.mult, tensor_map(s.basis(), id)));
}

template <class S>
Predicates predicates(const Subspace<S>& s, const Bialgebra<S>& e) {
  require_ambient(s, e.dim(), "predicates");
  Predicates out;
  const Mat<S> p = quotient_with_section(s).proj;
  out.is_subcoalgebra = is_subcoalgebra(s, e.coalgebra());
  out.is_ideal = is_ideal(s, e.algebra());
  out.is_subalgebra =
      s.contains(e.unit()) && is_zero(compose(p, e.mult(), tensor_map(s.basis(), s.basis())));
  out.is_subbialgebra = out.is_subcoalgebra && out.is_subalgebra;
  out.is_coideal = is_zero(compose(e.counit(), s.basis())) &&
                   is_zero(apply_pair(p, p, compose(e.comult(), s.basis())));
  return out;
}

namespace {

template <class S>
[[noreturn]] void exactness_failure(const SequenceWitness<S>& w, const std::string& what) {
  throw ExactnessFailure(std::string(w.dual ? "dual " : "") + "sequence in degree " + std::to_string(w.degree) + ": " +
                         what);
}

// Columns of nabla: i_a (x) i_b for the listed pairs. Rows of delta_stack:
// p_a (x) p_b for the listed pairs.
template <class S>
void assemble(SequenceWitness<S>& w, const std::vector<Subspace<S>>& left, const std::vector<Subspace<S>>& right,
              Index dim) {
  std::vector<Mat<S>> cols, rows;
  for (std::size_t k = 0; k < left.size(); k += 2) cols.push_back(tensor_map(left[k].basis(), left[k + 1].basis()));
  for (std::size_t k = 0; k < right.size(); k += 2)
    rows.push_back(tensor_map(quotient_with_section(right[k]).proj, quotient_with_section(right[k + 1]).proj));
  w.nabla = block_codiag(cols, dim * dim);
  w.delta_stack = block_diag(rows, dim * dim);
  if (image(w.nabla) != kernel(w.delta_stack)) exactness_failure(w, "image of nabla differs from kernel of the stack");
}

}  // namespace

template <class S>
SequenceWitness<S> sweedler_sequence(const WedgeTower<S>& tower, Index n) {
  if (n < 0) throw std::out_of_range("negative degree");
  SequenceWitness<S> w;
  w.degree = n;
  const Index dim = tower.host.dim;
  std::vector<Subspace<S>> left, right;
  for (Index a = 1; a <= n; ++a) {
    w.left_terms.emplace_back(a, n + 1 - a);
    left.push_back(tower.power(a));
    left.push_back(tower.power(n + 1 - a));
  }
  for (Index a = 0; a <= n; ++a) {
    w.right_terms.emplace_back(a, n - a);
    right.push_back(tower.power(a));
    right.push_back(tower.power(n - a));
  }
  assemble(w, left, right, dim);
  const Subspace<S> im = image(w.nabla);
  w.beta = im.basis();
  w.gamma = corestrict(w.nabla, im);
  const Mat<S> di = compose(tower.host.comult, tower.power(n).basis());
  if (!im.contains(di)) exactness_failure(w, "Delta does not map X_n into the image of nabla");
  w.alpha = corestrict(di, im);
  if (!same(compose(w.beta, w.gamma), w.nabla)) exactness_failure(w, "beta gamma differs from nabla");
  if (!same(compose(w.beta, w.alpha), di)) exactness_failure(w, "beta alpha differs from Delta i");
  return w;
}

template <class S>
SequenceWitness<S> sweedler_sequence(const PowerTower<S>& tower, Index n) {
  if (n < 0) throw std::out_of_range("negative degree");
  SequenceWitness<S> w;
  w.degree = n;
  w.dual = true;
  const Index dim = tower.host.dim;
  std::vector<Subspace<S>> left, right;
  for (Index a = 0; a <= n; ++a) {
    w.left_terms.emplace_back(a, n - a);
    left.push_back(tower.power(a));
    left.push_back(tower.power(n - a));
  }
  for (Index a = 1; a <= n; ++a) {
    w.right_terms.emplace_back(a, n + 1 - a);
    right.push_back(tower.power(a));
    right.push_back(tower.power(n + 1 - a));
  }
  assemble(w, left, right, dim);
  const Subspace<S> im = image(w.delta_stack);
  w.beta = im.basis();
  w.gamma = corestrict(w.delta_stack, im);
  const Mat<S> pm = compose(quotient_with_section(tower.power(n)).proj, tower.host.mult);
  try {
    w.alpha = factor_through_epi(pm, w.gamma, right_inverse(w.gamma));
  } catch (const KernelNotContained&) {
    exactness_failure(w, "p m does not vanish on the kernel of gamma");
  }
  if (!same(compose(w.beta, w.gamma), w.delta_stack)) exactness_failure(w, "beta gamma differs from the stack");
  if (!same(compose(w.alpha, w.gamma), pm)) exactness_failure(w, "alpha gamma differs from p m");
  return w;
}

#define HOPFGR_FILTRATION(S)                                                                        \
  template struct Tower<S>;                                                                         \
  template Subspace<S> wedge(const Subspace<S>&, const Subspace<S>&, const Coalgebra<S>&);          \
  template WedgeTower<S> wedge_tower(const Subspace<S>&, const Coalgebra<S>&, Index);               \
  template bool wedge_associativity_check(const Subspace<S>&, const Subspace<S>&, const Subspace<S>&, \
                                          const Coalgebra<S>&);                                     \
  template Subspace<S> ideal_product(const Subspace<S>&, const Subspace<S>&, const Algebra<S>&);    \
  template PowerTower<S> power_tower(const Subspace<S>&, const Algebra<S>&, Index);                 \
  template bool is_subcoalgebra(const Subspace<S>&, const Coalgebra<S>&);                           \
  template bool is_ideal(const Subspace<S>&, const Algebra<S>&);                                    \
  template Predicates predicates(const Subspace<S>&, const Bialgebra<S>&);                          \
  template SequenceWitness<S> sweedler_sequence(const WedgeTower<S>&, Index);                       \
  template SequenceWitness<S> sweedler_sequence(const PowerTower<S>&, Index);

HOPFGR_FILTRATION(Rational)
HOPFGR_FILTRATION(ModP)

}  // namespace hopfgr
