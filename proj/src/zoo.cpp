#include "hopfgr/zoo.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <stdexcept>

namespace hopfgr {

template <class S>
const NamedSubspace<S>* ZooEntry<S>::find_subspace(const std::string& n) const {
  for (const auto& s : subspaces)
    if (s.name == n) return &s;
  return nullptr;
}

template <class S>
const NamedQuotient<S>* ZooEntry<S>::find_quotient(const std::string& n) const {
  for (const auto& q : quotients)
    if (q.name == n) return &q;
  return nullptr;
}

namespace {

// Structure matrices filled entry by entry.
template <class S>
struct Tables {
  const Field<S>& field;
  Index n;
  Mat<S> mult, unit, comult, counit;

  Tables(const Field<S>& f, Index dim)
      : field(f),
        n(dim),
        mult(Mat<S>::Constant(dim, dim * dim, f.from_int(0))),
        unit(Mat<S>::Constant(dim, 1, f.from_int(0))),
        comult(Mat<S>::Constant(dim * dim, dim, f.from_int(0))),
        counit(Mat<S>::Constant(1, dim, f.from_int(0))) {}

  void product(Index i, Index j, Index k, long c) { mult(k, i * n + j) += field.from_int(c); }
  void coproduct(Index k, Index i, Index j, long c) { comult(i * n + j, k) += field.from_int(c); }
  Bialgebra<S> done() const { return Bialgebra<S>(field, mult, unit, comult, counit); }
};

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class S>
Mat<S> columns_of(const Field<S>& f, Index rows, const std::vector<std::vector<long>>& cols) {
  Mat<S> m(rows, static_cast<Index>(cols.size()));
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = f.from_int(cols[j][i]);
  return m;
}

template <class S>
Mat<S> rows_of(const Field<S>& f, const std::vector<std::vector<long>>& rows) {
  const Index r = static_cast<Index>(rows.size());
  Mat<S> m(r, r ? static_cast<Index>(rows[0].size()) : 0);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = f.from_int(rows[i][j]);
  return m;
}

}  // namespace

// Groups

int FiniteGroup::inv(int a) const {
  for (int b = 0; b < order(); ++b)
    if (mul(a, b) == 0) return b;
  throw InvalidStructure("group element without inverse");
}

std::vector<std::vector<int>> FiniteGroup::subgroups() const {
  std::vector<std::vector<int>> out;
  const int n = order();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a)
      for (int b = 0; b < n && closed; ++b)
        if ((mask >> a & 1u) && (mask >> b & 1u) && !(mask >> mul(a, b) & 1u)) closed = false;
    if (!closed) continue;
    std::vector<int> h;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1u) h.push_back(a);
    out.push_back(h);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::vector<std::vector<int>> FiniteGroup::normal_subgroups() const {
  std::vector<std::vector<int>> out;
  for (const auto& h : subgroups()) {
    bool normal = true;
    for (int g = 0; g < order() && normal; ++g)
      for (int x : h)
        if (!std::binary_search(h.begin(), h.end(), mul(mul(g, x), inv(g)))) {
          normal = false;
          break;
        }
    if (normal) out.push_back(h);
  }
  return out;
}

std::pair<FiniteGroup, std::vector<int>> FiniteGroup::quotient(const std::vector<int>& normal) const {
  std::vector<int> coset(order(), -1);
  int count = 0;
  for (int a = 0; a < order(); ++a) {
    if (coset[a] >= 0) continue;
    for (int x : normal) coset[mul(a, x)] = count;
    ++count;
  }
  std::vector<int> rep(count);
  for (int a = order() - 1; a >= 0; --a) rep[coset[a]] = a;
  FiniteGroup q;
  q.name = name + "/N" + std::to_string(normal.size());
  q.table.assign(count, std::vector<int>(count));
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) q.table[i][j] = coset[mul(rep[i], rep[j])];
  return {q, coset};
}

FiniteGroup FiniteGroup::cyclic(int n) {
  FiniteGroup g;
  g.name = "C" + std::to_string(n);
  g.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  return g;
}

FiniteGroup FiniteGroup::klein_four() {
  FiniteGroup g;
  g.name = "V4";
  g.table.assign(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) g.table[a][b] = a ^ b;
  return g;
}

FiniteGroup FiniteGroup::symmetric_three() {
  // Permutations of {0,1,2} in a fixed order, identity first.
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  FiniteGroup g;
  g.name = "S3";
  g.table.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[a][perms[b][k]];
      g.table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return g;
}

// Builders

template <class S>
Bialgebra<S> group_algebra(const Field<S>& field, const FiniteGroup& g) {
  Tables<S> t(field, g.order());
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) t.product(a, b, g.mul(a, b), 1);
    t.coproduct(a, a, a, 1);
    t.counit(0, a) = field.from_int(1);
  }
  t.unit(0, 0) = field.from_int(1);
  return t.done();
}

template <class S>
Bialgebra<S> sweedler(const Field<S>& field) {
  enum { one, g, x, gx };
  Tables<S> t(field, 4);
  for (int a = 0; a < 4; ++a) {
    t.product(one, a, a, 1);
    if (a != one) t.product(a, one, a, 1);
  }
  t.product(g, g, one, 1);
  t.product(g, x, gx, 1);
  t.product(g, gx, x, 1);
  t.product(x, g, gx, -1);
  t.product(gx, g, x, -1);
  t.unit(one, 0) = field.from_int(1);
  t.coproduct(one, one, one, 1);
  t.coproduct(g, g, g, 1);
  t.coproduct(x, x, one, 1);
  t.coproduct(x, g, x, 1);
  t.coproduct(gx, gx, g, 1);
  t.coproduct(gx, one, gx, 1);
  t.counit(0, one) = field.from_int(1);
  t.counit(0, g) = field.from_int(1);
  return t.done();
}

template <class S>
Bialgebra<S> truncated_primitive(const Field<S>& field, int n) {
  for (int i = 1; i < n; ++i)
    if (!is_zero(field.from_int(binomial(n, i))))
      throw InvalidStructure("x^" + std::to_string(n) + " = 0 is not a coideal in this characteristic");
  Tables<S> t(field, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; a + b < n; ++b) t.product(a, b, a + b, 1);
    for (int i = 0; i <= a; ++i) t.coproduct(a, i, a - i, binomial(a, i));
  }
  t.unit(0, 0) = field.from_int(1);
  t.counit(0, 0) = field.from_int(1);
  return t.done();
}

template <class S>
Bialgebra<S> super_exterior(const Field<S>& field) {
  Tables<S> t(field, 2);
  t.product(0, 0, 0, 1);
  t.product(0, 1, 1, 1);
  t.product(1, 0, 1, 1);
  t.unit(0, 0) = field.from_int(1);
  t.coproduct(0, 0, 0, 1);
  t.coproduct(1, 1, 0, 1);
  t.coproduct(1, 0, 1, 1);
  t.counit(0, 0) = field.from_int(1);
  Mat<S> c = Mat<S>::Constant(4, 4, field.from_int(0));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) c(b * 2 + a, a * 2 + b) = field.from_int(a && b ? -1 : 1);
  return Bialgebra<S>(field, t.mult, t.unit, t.comult, t.counit, c);
}

// Named entries

namespace {

template <class S>
Mat<S> unit_span(const Bialgebra<S>& e) {
  return e.unit();
}

ZooEntry<Rational> trivial_k() {
  Field<Rational> q;
  auto e = group_algebra(q, FiniteGroup::cyclic(1));
  ZooEntry<Rational> z{"trivial_K", e, {"1"}, {}, {}};
  z.subspaces.push_back({"K", Subspace<Rational>::full(1), true});
  z.quotients.push_back({"id", identity<Rational>(1), true});
  return z;
}

ZooEntry<Rational> group_c2() {
  Field<Rational> q;
  auto e = group_algebra(q, FiniteGroup::cyclic(2));
  ZooEntry<Rational> z{"group_algebra_C2", e, {"1", "g"}, {}, {}};
  z.subspaces.push_back({"K1", Subspace<Rational>::span(unit_span(e)), true});
  z.subspaces.push_back({"E", Subspace<Rational>::full(2), true});
  z.quotients.push_back({"eps", e.counit(), true});
  z.quotients.push_back({"id", identity<Rational>(2), true});
  return z;
}

ZooEntry<Rational> group_c4() {
  Field<Rational> q;
  auto c4 = FiniteGroup::cyclic(4);
  auto e = group_algebra(q, c4);
  ZooEntry<Rational> z{"group_algebra_C4", e, {"1", "g", "g2", "g3"}, {}, {}};
  z.subspaces.push_back({"QC2", Subspace<Rational>::span(columns_of(q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}})), true});
  z.subspaces.push_back({"K1", Subspace<Rational>::span(unit_span(e)), true});
  z.quotients.push_back({"eps", e.counit(), true});
  // g -> h onto Q[C2]
  z.quotients.push_back({"to_C2", rows_of(q, {{1, 0, 1, 0}, {0, 1, 0, 1}}), true});
  return z;
}

ZooEntry<Rational> sweedler_h4() {
  Field<Rational> q;
  auto e = sweedler(q);
  ZooEntry<Rational> z{"sweedler_h4", e, {"1", "g", "x", "gx"}, {}, {}};
  z.subspaces.push_back({"B", Subspace<Rational>::span(columns_of(q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}})), true});
  z.subspaces.push_back({"K1", Subspace<Rational>::span(unit_span(e)), true});
  z.subspaces.push_back({"E", Subspace<Rational>::full(4), true});
  z.quotients.push_back({"pi", rows_of(q, {{1, 0, 0, 0}, {0, 1, 0, 0}}), true});
  z.quotients.push_back({"eps", e.counit(), true});
  z.quotients.push_back({"id", identity<Rational>(4), true});
  return z;
}

ZooEntry<ModP> trunc_binomial() {
  Field<ModP> f(2);
  auto e = truncated_primitive(f, 4);
  ZooEntry<ModP> z{"trunc_binomial_F2_4", e, {"1", "x", "x2", "x3"}, {}, {}};
  z.subspaces.push_back({"K1", Subspace<ModP>::span(unit_span(e)), true});
  z.subspaces.push_back({"E", Subspace<ModP>::full(4), true});
  z.quotients.push_back({"eps", e.counit(), false});
  z.quotients.push_back({"id", identity<ModP>(4), true});
  return z;
}

ZooEntry<ModP> divided_power_dual() {
  Field<ModP> f(2);
  auto e = dualize(truncated_primitive(f, 4));
  ZooEntry<ModP> z{"divided_power_dual_F2_4", e, {"xi0", "xi1", "xi2", "xi3"}, {}, {}};
  z.subspaces.push_back({"K1", Subspace<ModP>::span(unit_span(e)), false});
  z.subspaces.push_back({"E", Subspace<ModP>::full(4), true});
  z.quotients.push_back({"eps", e.counit(), true});
  return z;
}

}  // namespace

std::vector<std::string> zoo_names() {
  return {"trivial_K", "group_algebra_C2", "group_algebra_C4", "sweedler_h4", "trunc_binomial_F2_4",
          "divided_power_dual_F2_4"};
}

AnyZooEntry build(const std::string& name) {
  if (name == "trivial_K") return trivial_k();
  if (name == "group_algebra_C2") return group_c2();
  if (name == "group_algebra_C4") return group_c4();
  if (name == "sweedler_h4") return sweedler_h4();
  if (name == "trunc_binomial_F2_4") return trunc_binomial();
  if (name == "divided_power_dual_F2_4") return divided_power_dual();
  throw std::invalid_argument("unknown zoo entry: " + name);
}

// Random instances

namespace {

template <class S>
Mat<S> random_invertible(std::mt19937_64& rng, const Field<S>& field, Index n) {
  std::uniform_int_distribution<long> v(-2, 2);
  std::bernoulli_distribution nz(0.4);
  while (true) {
    Mat<S> t(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) t(i, j) = field.from_int(i == j ? 1 + (v(rng) == 2) : (nz(rng) ? v(rng) : 0));
    if (rank(t) == n) return t;
  }
}

template <class S>
ZooEntry<S> transported(std::mt19937_64& rng, ZooEntry<S> z) {
  const Mat<S> t = random_invertible(rng, z.bialgebra.field(), z.bialgebra.dim());
  const Mat<S> tinv = inverse(t);
  z.bialgebra = change_basis(z.bialgebra, t);
  for (auto& s : z.subspaces) s.space = Subspace<S>::span(compose(tinv, s.space.basis()));
  for (auto& q : z.quotients) q.map = compose(q.map, t);
  for (std::size_t i = 0; i < z.basis.size(); ++i) z.basis[i] = "v" + std::to_string(i);
  z.name += "~";
  return z;
}

// K[Q] with configurations: unit, everything, a subgroup algebra; augmentation,
// identity, projection onto a further quotient.
template <class S>
ZooEntry<S> group_entry(std::mt19937_64& rng, const Field<S>& f, const FiniteGroup& q) {
  const int n = q.order();
  ZooEntry<S> z{"K[" + q.name + "]", group_algebra(f, q), {}, {}, {}};
  for (int a = 0; a < n; ++a) z.basis.push_back("e" + std::to_string(a));
  z.subspaces.push_back({"K1", Subspace<S>::span(z.bialgebra.unit()), std::nullopt});
  z.subspaces.push_back({"E", Subspace<S>::full(n), std::nullopt});
  auto subs = q.subgroups();
  const auto& h = subs[std::uniform_int_distribution<std::size_t>(0, subs.size() - 1)(rng)];
  Mat<S> hb = Mat<S>::Constant(n, static_cast<Index>(h.size()), f.from_int(0));
  for (std::size_t k = 0; k < h.size(); ++k) hb(h[k], static_cast<Index>(k)) = f.from_int(1);
  z.subspaces.push_back({"sub" + std::to_string(h.size()), Subspace<S>::span(hb), std::nullopt});
  z.quotients.push_back({"eps", z.bialgebra.counit(), std::nullopt});
  z.quotients.push_back({"id", identity<S>(n), std::nullopt});
  auto normals = q.normal_subgroups();
  const auto& m = normals[std::uniform_int_distribution<std::size_t>(0, normals.size() - 1)(rng)];
  auto [qm, coset] = q.quotient(m);
  Mat<S> pi = Mat<S>::Constant(qm.order(), n, f.from_int(0));
  for (int a = 0; a < n; ++a) pi(coset[a], a) = f.from_int(1);
  z.quotients.push_back({"mod" + std::to_string(m.size()), pi, std::nullopt});
  return z;
}

// K^Q with configurations: unit, everything, functions constant on the cosets
// of a normal subgroup; evaluation at the identity, identity, restriction to
// a subgroup.
template <class S>
ZooEntry<S> function_entry(std::mt19937_64& rng, const Field<S>& f, const FiniteGroup& q) {
  const int n = q.order();
  ZooEntry<S> z{"K^" + q.name, dualize(group_algebra(f, q)), {}, {}, {}};
  for (int a = 0; a < n; ++a) z.basis.push_back("d" + std::to_string(a));
  z.subspaces.push_back({"K1", Subspace<S>::span(z.bialgebra.unit()), std::nullopt});
  z.subspaces.push_back({"E", Subspace<S>::full(n), std::nullopt});
  auto normals = q.normal_subgroups();
  const auto& m = normals[std::uniform_int_distribution<std::size_t>(0, normals.size() - 1)(rng)];
  auto [qm, coset] = q.quotient(m);
  Mat<S> cb = Mat<S>::Constant(n, qm.order(), f.from_int(0));
  for (int a = 0; a < n; ++a) cb(a, coset[a]) = f.from_int(1);
  z.subspaces.push_back({"const" + std::to_string(m.size()), Subspace<S>::span(cb), std::nullopt});
  z.quotients.push_back({"eps", z.bialgebra.counit(), std::nullopt});
  z.quotients.push_back({"id", identity<S>(n), std::nullopt});
  auto subs = q.subgroups();
  const auto& h = subs[std::uniform_int_distribution<std::size_t>(0, subs.size() - 1)(rng)];
  Mat<S> res = Mat<S>::Constant(static_cast<Index>(h.size()), n, f.from_int(0));
  for (std::size_t k = 0; k < h.size(); ++k) res(static_cast<Index>(k), h[k]) = f.from_int(1);
  z.quotients.push_back({"res" + std::to_string(h.size()), res, std::nullopt});
  return z;
}

template <class S>
std::optional<ZooEntry<S>> small_zoo_entry(std::mt19937_64& rng, const Field<S>& f, Index bound) {
  std::vector<ZooEntry<S>> pool;
  if (bound >= 4) {
    ZooEntry<S> h{"sweedler", sweedler(f), {"1", "g", "x", "gx"}, {}, {}};
    h.subspaces.push_back({"B", Subspace<S>::span(columns_of(f, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}})), std::nullopt});
    h.subspaces.push_back({"K1", Subspace<S>::span(h.bialgebra.unit()), std::nullopt});
    h.quotients.push_back({"pi", rows_of(f, {{1, 0, 0, 0}, {0, 1, 0, 0}}), std::nullopt});
    h.quotients.push_back({"eps", h.bialgebra.counit(), std::nullopt});
    pool.push_back(h);
  }
  const long p = static_cast<long>(f.spec().characteristic);
  for (long n = p; p > 0 && n <= bound; n *= p) {
    ZooEntry<S> t{"primitive" + std::to_string(n), truncated_primitive(f, static_cast<int>(n)), {}, {}, {}};
    for (long a = 0; a < n; ++a) t.basis.push_back("x" + std::to_string(a));
    t.subspaces.push_back({"K1", Subspace<S>::span(t.bialgebra.unit()), std::nullopt});
    t.quotients.push_back({"eps", t.bialgebra.counit(), std::nullopt});
    pool.push_back(t);
    ZooEntry<S> d{"divided" + std::to_string(n), dualize(t.bialgebra), t.basis, {}, {}};
    d.subspaces.push_back({"K1", Subspace<S>::span(d.bialgebra.unit()), std::nullopt});
    d.quotients.push_back({"eps", d.bialgebra.counit(), std::nullopt});
    pool.push_back(d);
  }
  if (pool.empty()) return std::nullopt;
  return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

}  // namespace

template <class S>
std::optional<ZooEntry<S>> random_instance(std::uint64_t seed, Index dim_bound, const Field<S>& field) {
  std::mt19937_64 rng(seed);
  const std::vector<FiniteGroup> groups = {FiniteGroup::cyclic(1), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                                           FiniteGroup::cyclic(4), FiniteGroup::klein_four(), FiniteGroup::cyclic(5),
                                           FiniteGroup::cyclic(6), FiniteGroup::symmetric_three()};
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::optional<ZooEntry<S>> z;
    const int kind = std::uniform_int_distribution<int>(0, 4)(rng);
    if (kind == 4) {
      z = small_zoo_entry(rng, field, dim_bound);
    } else {
      const auto& g = groups[std::uniform_int_distribution<std::size_t>(0, groups.size() - 1)(rng)];
      auto normals = g.normal_subgroups();
      const auto& n = normals[std::uniform_int_distribution<std::size_t>(0, normals.size() - 1)(rng)];
      const auto q = g.quotient(n).first;
      if (q.order() > dim_bound) continue;
      z = kind == 3 ? function_entry(rng, field, q) : group_entry(rng, field, q);
    }
    if (!z || z->bialgebra.dim() > dim_bound) continue;
    if (std::bernoulli_distribution(0.75)(rng) && z->bialgebra.dim() > 1) z = transported(rng, std::move(*z));
    if (!verify_bialgebra(z->bialgebra)) continue;
    z->name = "random(" + std::to_string(seed) + "):" + z->name + "/" + field.spec().name();
    return z;
  }
  return std::nullopt;
}

std::optional<AnyZooEntry> random_instance(std::uint64_t seed, Index dim_bound) {
  const std::uint32_t primes[] = {0, 2, 3, 5};
  const auto p = primes[std::mt19937_64(seed ^ 0x9e3779b97f4a7c15ULL)() % 4];
  if (p == 0) {
    if (auto z = random_instance(seed, dim_bound, Field<Rational>())) return AnyZooEntry(std::move(*z));
    return std::nullopt;
  }
  if (auto z = random_instance(seed, dim_bound, Field<ModP>(p))) return AnyZooEntry(std::move(*z));
  return std::nullopt;
}

#define HOPFGR_ZOO(S)                                                                            \
  template struct ZooEntry<S>;                                                                   \
  template Bialgebra<S> group_algebra(const Field<S>&, const FiniteGroup&);                      \
  template Bialgebra<S> sweedler(const Field<S>&);                                               \
  template Bialgebra<S> truncated_primitive(const Field<S>&, int);                               \
  template Bialgebra<S> super_exterior(const Field<S>&);                                         \
  template std::optional<ZooEntry<S>> random_instance(std::uint64_t, Index, const Field<S>&);

HOPFGR_ZOO(Rational)
HOPFGR_ZOO(ModP)

}  // namespace hopfgr
