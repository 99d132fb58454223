#include <doctest.h>

#include "hopfgr/coalg.hpp"
#include "hopfgr/zoo.hpp"
#include "oracle.hpp"

using namespace hopfgr;

namespace {

Field<Rational> Q;

// 2x2 matrix units E_ij, basis index 2i+j; E_ij E_kl = delta_jk E_il.
Algebra<Rational> matrix_algebra() {
  Algebra<Rational> a{4, zeros<Rational>(4, 16), zeros<Rational>(4, 1)};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l) a.mult(2 * i + l, (2 * i + j) * 4 + (2 * j + l)) = 1;
  a.unit(0, 0) = 1;
  a.unit(3, 0) = 1;
  return a;
}

template <class S>
Bialgebra<S> with(const Bialgebra<S>& e, Mat<S> m, Mat<S> d) {
  return Bialgebra<S>(e.field(), std::move(m), e.unit(), std::move(d), e.counit());
}

}  // namespace

TEST_CASE("coalgebra axioms") {
  Coalgebra<Rational> k{1, identity<Rational>(1), identity<Rational>(1)};
  CHECK(verify_coalgebra(k).passed);
  // group-like coalgebra on three points
  Coalgebra<Rational> g{3, zeros<Rational>(9, 3), Mat<Rational>::Constant(1, 3, Rational(1))};
  for (int a = 0; a < 3; ++a) g.comult(a * 3 + a, a) = 1;
  CHECK(verify_coalgebra(g).passed);

  auto h = sweedler(Q);
  Mat<Rational> d = h.comult();
  d.col(2).setZero();
  auto r = verify_coalgebra(Coalgebra<Rational>{4, d, h.counit()});
  CHECK_FALSE(r.passed);
  CHECK(r.failed_identity == "left counit");
  CHECK(r.basis_index == 2);
}

TEST_CASE("algebra axioms") {
  CHECK(verify_algebra(Algebra<Rational>{1, identity<Rational>(1), identity<Rational>(1)}).passed);
  auto m2 = matrix_algebra();
  CHECK(verify_algebra(m2).passed);
  m2.unit(3, 0) = 0;
  auto r = verify_algebra(m2);
  CHECK_FALSE(r.passed);
  CHECK(r.failed_identity == "left unit");
}

TEST_CASE("bialgebra axioms") {
  CHECK(verify_bialgebra(group_algebra(Q, FiniteGroup::cyclic(2))).passed);
  auto h = sweedler(Q);
  auto r = verify_bialgebra(h);
  CHECK(r.passed);
  CHECK(std::find(r.checked.begin(), r.checked.end(), "braid equation") != r.checked.end());

  Mat<Rational> d = h.comult();
  d.col(2).setZero();
  d(2 * 4 + 0, 2) = 1;  // x (x) 1
  d(0 * 4 + 2, 2) = 1;  // 1 (x) x
  auto bad = verify_bialgebra(with(h, h.mult(), d));
  CHECK_FALSE(bad.passed);
  CHECK(bad.failed_identity == "Delta o m compatibility");

  auto s = super_exterior(Q);
  CHECK_FALSE(s.flip_braided());
  CHECK(verify_bialgebra(s).passed);
  // the same algebra with the flip is not a bialgebra: Delta(x^2) != Delta(x)^2
  auto flipped = Bialgebra<Rational>(Q, s.mult(), s.unit(), s.comult(), s.counit());
  CHECK(verify_bialgebra(flipped).failed_identity == "Delta o m compatibility");
  // a singular braiding is rejected
  auto sing = Bialgebra<Rational>(Q, s.mult(), s.unit(), s.comult(), s.counit(), zeros<Rational>(4, 4));
  CHECK(verify_bialgebra(sing).failed_identity == "braiding invertible");
}

TEST_CASE("structure perturbations are detected") {
  std::vector<Bialgebra<Rational>> hosts = {sweedler(Q), group_algebra(Q, FiniteGroup::cyclic(3))};
  std::mt19937 rng(23);
  for (const auto& e : hosts) {
    const Index n = e.dim();
    for (int trial = 0; trial < 30; ++trial) {
      Mat<Rational> m = e.mult(), d = e.comult();
      if (trial % 2) {
        Index i = rng() % m.rows(), j = rng() % m.cols();
        m(i, j) += 1;
      } else {
        Index i = rng() % d.rows(), j = rng() % d.cols();
        d(i, j) += 1;
      }
      CHECK_FALSE(verify_bialgebra(with(e, m, d)).passed);
    }
    (void)n;
  }
}

TEST_CASE("morphisms") {
  auto h = sweedler(Q);
  CHECK(verify_morphism(identity<Rational>(4), h, h, MorphismKind::bialgebra).passed);
  auto k = group_algebra(Q, FiniteGroup::cyclic(1));
  CHECK(verify_morphism(h.unit(), k, h, MorphismKind::algebra).passed);
  auto b = Subspace<Rational>::span(h.unit());
  Mat<Rational> span1g = zeros<Rational>(4, 2);
  span1g(0, 0) = 1;
  span1g(1, 1) = 1;
  auto sub = Subspace<Rational>::span(span1g);
  auto kc2 = restrict_to(h, sub);
  CHECK(verify_bialgebra(kc2).passed);
  CHECK(same_structure(kc2, group_algebra(Q, FiniteGroup::cyclic(2))));
  CHECK(verify_morphism(sub.basis(), kc2, h, MorphismKind::bialgebra).passed);
  CHECK_FALSE(verify_morphism(h.counit(), h, h, MorphismKind::algebra).passed);
  (void)b;
}

TEST_CASE("sub and quotient structures") {
  auto h = sweedler(Q);
  Mat<Rational> x = zeros<Rational>(4, 1);
  x(2, 0) = 1;
  CHECK_THROWS_AS(restrict_to(h, Subspace<Rational>::span(x)), NotSubbialgebra);
  Mat<Rational> pi = zeros<Rational>(2, 4);
  pi(0, 0) = 1;
  pi(1, 1) = 1;
  auto b = quotient_by(h, pi);
  CHECK(same_structure(b, group_algebra(Q, FiniteGroup::cyclic(2))));
  CHECK(verify_morphism(pi, h, b, MorphismKind::bialgebra).passed);
  Mat<Rational> bad = zeros<Rational>(1, 4);
  bad(0, 2) = 1;
  CHECK_THROWS_AS(quotient_by(h, bad), NotBialgebraQuotient);
}

TEST_CASE("dualization") {
  auto k = group_algebra(Q, FiniteGroup::cyclic(1));
  CHECK(same_structure(dualize(k), k));
  auto h = sweedler(Q);
  CHECK(same_structure(dualize(dualize(h)), h));
  CHECK(verify_bialgebra(dualize(h)).passed);
  auto s = super_exterior(Q);
  CHECK(verify_bialgebra(dualize(s)).passed);

  // Divided powers: xi_i xi_j = C(i+j, i) xi_{i+j}, Delta xi_k = sum xi_i (x) xi_{k-i}, mod 2.
  Field<ModP> f2(2);
  auto d = dualize(truncated_primitive(f2, 4));
  auto binom = [](int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        const long c = (i + j == k) ? binom(k, i) % 2 : 0;
        CHECK(d.mult()(k, i * 4 + j) == f2.from_int(c));
        CHECK(d.comult()(i * 4 + j, k) == f2.from_int(i + j == k ? 1 : 0));
      }
  CHECK(verify_bialgebra(d).passed);
}

TEST_CASE("duality exchanges algebra and coalgebra axioms") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto e = change_basis(group_algebra(Q, FiniteGroup::cyclic(2 + trial % 2)),
                          Mat<Rational>(identity<Rational>(2 + trial % 2) +
                                        oracle::random_rational(rng, 2 + trial % 2, 2 + trial % 2, 1, 0.3)
                                            .triangularView<Eigen::StrictlyUpper>()
                                            .toDenseMatrix()));
    Algebra<Rational> a = e.algebra();
    if (trial % 3 == 0) a.mult(rng() % a.mult.rows(), rng() % a.mult.cols()) += 1;
    if (trial % 5 == 0) a.unit(rng() % a.dim, 0) += 1;
    Coalgebra<Rational> dual{a.dim, a.mult.transpose(), a.unit.transpose()};
    CHECK(verify_coalgebra(dual).passed == verify_algebra(a).passed);
  }
}
