#include <doctest.h>

#include "hopfgr/filtration.hpp"
#include "hopfgr/zoo.hpp"
#include "oracle.hpp"

using namespace hopfgr;

namespace {

Field<Rational> Q;
Field<ModP> F2(2);

template <class S>
Subspace<S> coords(const Field<S>& f, Index n, std::vector<std::vector<long>> vs) {
  Mat<S> m = zeros<S>(n, static_cast<Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (Index i = 0; i < n; ++i) m(i, static_cast<Index>(j)) = f.from_int(vs[j][i]);
  return Subspace<S>::span(m);
}

// v in C wedge D iff Delta v lies in C (x) E + E (x) D, decided by listing
// every element of that subspace of F_2^{n^2}.
std::set<oracle::Vec> wedge_by_enumeration(const Subspace<ModP>& c, const Subspace<ModP>& d,
                                           const Coalgebra<ModP>& e) {
  const Index n = e.dim;
  auto full = Subspace<ModP>::full(n);
  Mat<ModP> gens(n * n, c.dim() * n + n * d.dim());
  gens << tensor_map(c.basis(), full.basis()), tensor_map(full.basis(), d.basis());
  const auto target = oracle::span_by_enumeration(gens, 2);
  std::set<oracle::Vec> out;
  for (const auto& v : oracle::span_by_enumeration(Mat<ModP>(identity<ModP>(n)), 2)) {
    Mat<ModP> col(n, 1);
    for (Index i = 0; i < n; ++i) col(i, 0) = F2.from_int(v[i]);
    if (target.count(oracle::column(Mat<ModP>(e.comult * col), 0, 2))) out.insert(v);
  }
  return out;
}

// Span of all products a b with a in I, b in J, listing elements of I and J.
std::set<oracle::Vec> product_by_enumeration(const Subspace<ModP>& i, const Subspace<ModP>& j,
                                             const Algebra<ModP>& a) {
  std::vector<Mat<ModP>> prods;
  const auto is = oracle::span_by_enumeration(i.basis(), 2);
  const auto js = oracle::span_by_enumeration(j.basis(), 2);
  Mat<ModP> all(a.dim, 0);
  for (const auto& x : is)
    for (const auto& y : js) {
      Mat<ModP> xy = zeros<ModP>(a.dim * a.dim, 1);
      for (Index p = 0; p < a.dim; ++p)
        for (Index q = 0; q < a.dim; ++q) xy(p * a.dim + q, 0) = F2.from_int(x[p] * y[q]);
      Mat<ModP> grown(a.dim, all.cols() + 1);
      grown << all, Mat<ModP>(a.mult * xy);
      all = grown;
    }
  return oracle::span_by_enumeration(all, 2);
}

std::set<oracle::Vec> elements(const Subspace<ModP>& s) { return oracle::span_by_enumeration(s.basis(), 2); }

}  // namespace

TEST_CASE("wedge examples") {
  auto h = sweedler(Q);
  auto e = h.coalgebra();
  auto b = coords(Q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  auto zero = Subspace<Rational>::zero(4);
  CHECK(wedge(zero, b, e) == b);
  CHECK(wedge(b, zero, e) == b);
  CHECK(wedge(b, b, e) == Subspace<Rational>::full(4));
  CHECK(wedge(zero, zero, e) == zero);
  CHECK_THROWS_AS(wedge(Subspace<Rational>::zero(3), b, e), AmbientMismatch);

  auto t = truncated_primitive(F2, 4).coalgebra();
  auto k1 = coords(F2, 4, {{1, 0, 0, 0}});
  CHECK(wedge(k1, k1, t) == coords(F2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
}

TEST_CASE("wedge agrees with enumeration over F2") {
  auto t = truncated_primitive(F2, 4).coalgebra();
  auto d = dualize(truncated_primitive(F2, 4)).coalgebra();
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& e = trial % 2 ? t : d;
    auto c = Subspace<ModP>::span(oracle::random_modp(rng, 4, rng() % 3, 2));
    auto dd = Subspace<ModP>::span(oracle::random_modp(rng, 4, rng() % 3, 2));
    CHECK(elements(wedge(c, dd, e)) == wedge_by_enumeration(c, dd, e));
  }
}

TEST_CASE("wedge towers") {
  auto h = sweedler(Q).coalgebra();
  auto b = coords(Q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  auto tw = wedge_tower(b, h, 4);
  CHECK(tw.dims() == std::vector<Index>{0, 2, 4});
  CHECK(tw.stabilized_at == Index(2));
  CHECK(tw.stop == StopReason::stabilized);
  CHECK(tw.base_is_subcoalgebra);
  CHECK(tw.power(1) == b);
  CHECK(tw.power(7) == Subspace<Rational>::full(4));

  auto none = wedge_tower(Subspace<Rational>::zero(4), h, 4);
  CHECK(none.dims() == std::vector<Index>{0});
  CHECK(none.power(3).dim() == 0);

  auto all = wedge_tower(Subspace<Rational>::full(4), h, 4);
  CHECK(all.dims() == std::vector<Index>{0, 4});
  CHECK(all.stabilized_at == Index(1));

  auto capped = wedge_tower(b, h, 1);
  CHECK(capped.dims() == std::vector<Index>{0, 2});
  CHECK(capped.stop == StopReason::degree_cap);
  CHECK_THROWS_AS(capped.power(2), std::out_of_range);

  auto t = truncated_primitive(F2, 4).coalgebra();
  auto tt = wedge_tower(coords(F2, 4, {{1, 0, 0, 0}}), t, 8);
  CHECK(tt.dims() == std::vector<Index>{0, 1, 3, 4});

  auto x = coords(Q, 4, {{0, 0, 1, 0}});
  CHECK_FALSE(wedge_tower(x, h, 3).base_is_subcoalgebra);
}

TEST_CASE("wedge associativity") {
  auto t = truncated_primitive(F2, 4).coalgebra();
  auto k1 = coords(F2, 4, {{1, 0, 0, 0}});
  auto zero = Subspace<ModP>::zero(4);
  CHECK(wedge_associativity_check(k1, k1, k1, t));
  CHECK(wedge(wedge(k1, k1, t), k1, t) == Subspace<ModP>::full(4));
  CHECK(wedge_associativity_check(k1, zero, zero, t));

  std::mt19937 rng(11);
  auto h = sweedler(Q).coalgebra();
  for (int trial = 0; trial < 20; ++trial) {
    auto c = Subspace<Rational>::span(oracle::random_rational(rng, 4, rng() % 3, 2, 0.5));
    auto d = Subspace<Rational>::span(oracle::random_rational(rng, 4, rng() % 3, 2, 0.5));
    auto f = Subspace<Rational>::span(oracle::random_rational(rng, 4, rng() % 3, 2, 0.5));
    CHECK(wedge_associativity_check(c, d, f, h));
  }
}

TEST_CASE("subcoalgebra towers consist of subcoalgebras containing their summands") {
  for (const auto& name : zoo_names())
    std::visit(
        [](const auto& z) {
          const auto e = z.bialgebra.coalgebra();
          for (const auto& s : z.subspaces) {
            INFO(z.name << " " << s.name);
            auto tw = wedge_tower(s.space, e, 6);
            CHECK(tw.base_is_subcoalgebra);
            CHECK(tw.power(1) == s.space);
            for (Index n = 0; n <= tw.degree(); ++n) {
              CHECK(is_subcoalgebra(tw.power(n), e));
              CHECK(contains(tw.power(n + 1), tw.power(n)));
              CHECK(contains(wedge(tw.power(n), s.space, e), sum(tw.power(n), s.space)));
            }
          }
        },
        build(name));
}

TEST_CASE("ideal products") {
  auto a = truncated_primitive(F2, 4).algebra();
  auto x = coords(F2, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  auto full = Subspace<ModP>::full(4);
  CHECK(ideal_product(x, x, a) == coords(F2, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(ideal_product(full, x, a) == x);
  CHECK(ideal_product(x, full, a) == x);
  CHECK_THROWS_AS(ideal_product(Subspace<ModP>::zero(2), x, a), AmbientMismatch);

  auto pt = power_tower(x, a, 8);
  CHECK(pt.dims() == std::vector<Index>{4, 3, 2, 1, 0});
  CHECK(pt.stabilized_at == Index(4));
  CHECK(pt.base_is_ideal);
  CHECK(power_tower(full, a, 4).dims() == std::vector<Index>{4});
  auto zt = power_tower(Subspace<ModP>::zero(4), a, 4);
  CHECK(zt.dims() == std::vector<Index>{4, 0});
  CHECK(zt.power(3).dim() == 0);

  std::mt19937 rng(17);
  auto d = dualize(truncated_primitive(F2, 4)).algebra();
  for (int trial = 0; trial < 30; ++trial) {
    const auto& alg = trial % 2 ? a : d;
    auto i = Subspace<ModP>::span(oracle::random_modp(rng, 4, rng() % 3, 2));
    auto j = Subspace<ModP>::span(oracle::random_modp(rng, 4, rng() % 3, 2));
    CHECK(elements(ideal_product(i, j, alg)) == product_by_enumeration(i, j, alg));
  }
}

TEST_CASE("ideal towers consist of ideals") {
  for (const auto& name : zoo_names())
    std::visit(
        [](const auto& z) {
          const auto a = z.bialgebra.algebra();
          for (const auto& q : z.quotients) {
            INFO(z.name << " " << q.name);
            auto tw = power_tower(kernel(q.map), a, 6);
            CHECK(tw.base_is_ideal);
            for (Index n = 0; n <= tw.degree(); ++n) {
              CHECK(is_ideal(tw.power(n), a));
              CHECK(contains(tw.power(n), tw.power(n + 1)));
            }
          }
        },
        build(name));
}

TEST_CASE("predicates") {
  auto h = sweedler(Q);
  auto p0 = predicates(Subspace<Rational>::zero(4), h);
  CHECK(p0.is_subcoalgebra);
  CHECK(p0.is_ideal);
  CHECK(p0.is_coideal);
  CHECK_FALSE(p0.is_subalgebra);
  CHECK_FALSE(p0.is_subbialgebra);

  auto pb = predicates(coords(Q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}}), h);
  CHECK(pb.is_subcoalgebra);
  CHECK(pb.is_subbialgebra);
  CHECK_FALSE(pb.is_ideal);

  auto px = predicates(coords(Q, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}}), h);
  CHECK(px.is_ideal);
  CHECK(px.is_coideal);
  CHECK_FALSE(px.is_subcoalgebra);

  for (const auto& name : zoo_names())
    std::visit(
        [](const auto& z) {
          INFO(z.name);
          auto p = predicates(kernel(z.bialgebra.counit()), z.bialgebra);
          CHECK(p.is_ideal);
          CHECK(p.is_coideal);
        },
        build(name));
}

TEST_CASE("exact sequences") {
  auto h = sweedler(Q).coalgebra();
  auto b = coords(Q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  auto tw = wedge_tower(b, h, 4);

  auto w0 = sweedler_sequence(tw, 0);
  CHECK(w0.nabla.cols() == 0);
  CHECK(kernel(w0.delta_stack).dim() == 0);

  // degree 1: only B (x) B survives since X_0 = 0
  auto w1 = sweedler_sequence(tw, 1);
  CHECK(kernel(w1.delta_stack) == Subspace<Rational>::tensor(b, b));
  CHECK(image(w1.nabla) == Subspace<Rational>::tensor(b, b));
  CHECK(same(compose(w1.beta, w1.alpha), compose(h.comult, b.basis())));

  // degree 2: X_1 (x) X_2 + X_2 (x) X_1 = B (x) E + E (x) B
  auto w2 = sweedler_sequence(tw, 2);
  auto full = Subspace<Rational>::full(4);
  auto expected = sum(Subspace<Rational>::tensor(b, full), Subspace<Rational>::tensor(full, b));
  CHECK(kernel(w2.delta_stack) == expected);
  CHECK(expected.dim() == 12);
  CHECK(same(compose(w2.beta, w2.gamma), w2.nabla));

  auto capped = wedge_tower(b, h, 1);
  CHECK_NOTHROW(sweedler_sequence(capped, 1));
  CHECK_THROWS_AS(sweedler_sequence(capped, 2), std::out_of_range);

  auto t = truncated_primitive(F2, 4);
  auto pt = power_tower(kernel(t.counit()), t.algebra(), 4);
  for (Index n = 0; n <= 5; ++n) {
    auto w = sweedler_sequence(pt, n);
    CHECK(w.dual);
    CHECK(same(compose(w.alpha, w.gamma), compose(quotient_with_section(pt.power(n)).proj, t.mult())));
  }

  for (const auto& name : zoo_names())
    std::visit(
        [](const auto& z) {
          for (const auto& s : z.subspaces) {
            INFO(z.name << " " << s.name);
            auto tw2 = wedge_tower(s.space, z.bialgebra.coalgebra(), 4);
            for (Index n = 0; n <= 4; ++n) CHECK_NOTHROW(sweedler_sequence(tw2, n));
          }
          for (const auto& q : z.quotients) {
            INFO(z.name << " " << q.name);
            auto pt2 = power_tower(kernel(q.map), z.bialgebra.algebra(), 4);
            for (Index n = 0; n <= 4; ++n) CHECK_NOTHROW(sweedler_sequence(pt2, n));
          }
        },
        build(name));
}

TEST_CASE("annihilators of ideal powers are wedge powers in the dual") {
  for (const auto& name : zoo_names())
    std::visit(
        [](const auto& z) {
          const auto dual = dualize(z.bialgebra).coalgebra();
          for (const auto& q : z.quotients) {
            INFO(z.name << " " << q.name);
            auto pt = power_tower(kernel(q.map), z.bialgebra.algebra(), 5);
            auto wt = wedge_tower(annihilator(kernel(q.map)), dual, 5);
            for (Index n = 0; n <= 5; ++n) CHECK(annihilator(pt.power(n)) == wt.power(n));
          }
        },
        build(name));
}

TEST_CASE("wedge does not depend on the basis") {
  std::mt19937 rng(29);
  auto h = sweedler(Q);
  auto b = coords(Q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  for (int trial = 0; trial < 10; ++trial) {
    Mat<Rational> t = identity<Rational>(4);
    for (Index i = 0; i < 4; ++i)
      for (Index j = i + 1; j < 4; ++j) t(i, j) = Rational(static_cast<long>(rng() % 5) - 2);
    t = t.transpose().eval();
    auto moved = change_basis(h, t);
    const Mat<Rational> ti = inverse(t);
    auto c = Subspace<Rational>::span(oracle::random_rational(rng, 4, 1 + rng() % 2, 2, 0.6));
    CHECK(wedge(image_of(ti, b), image_of(ti, c), moved.coalgebra()) == image_of(ti, wedge(b, c, h.coalgebra())));
  }
}
