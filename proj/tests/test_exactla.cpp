#include <doctest.h>

#include "hopfgr/exactla.hpp"
#include "oracle.hpp"

using namespace hopfgr;

namespace {

Mat<Rational> q(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  Mat<Rational> m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("kernel and image on small maps") {
  CHECK(kernel(identity<Rational>(3)).dim() == 0);
  CHECK(kernel(zeros<Rational>(1, 3)) == Subspace<Rational>::full(3));
  CHECK(kernel(q({{1, 1}})) == Subspace<Rational>::span(q({{1}, {-1}})));
  CHECK(image(identity<Rational>(2)) == Subspace<Rational>::full(2));
  CHECK(image(zeros<Rational>(2, 2)).dim() == 0);
  CHECK(image(q({{1}, {2}})) == Subspace<Rational>::span(q({{3}, {6}})));
}

TEST_CASE("lattice operations") {
  auto s = Subspace<Rational>::span(q({{1}, {0}}));
  auto t = Subspace<Rational>::span(q({{1}, {1}}));
  CHECK(sum(s, Subspace<Rational>::zero(2)) == s);
  CHECK(intersect(s, Subspace<Rational>::full(2)) == s);
  CHECK(intersect(s, t).dim() == 0);
  CHECK(sum(s, t) == Subspace<Rational>::full(2));
  CHECK(std::get<bool>(lattice(LatticeOp::contains, sum(s, t), t)));
  CHECK_FALSE(std::get<bool>(lattice(LatticeOp::equal, s, t)));
  CHECK_THROWS_AS(sum(s, Subspace<Rational>::zero(3)), AmbientMismatch);
}

TEST_CASE("quotients with sections") {
  auto z = quotient_with_section(Subspace<Rational>::zero(3));
  CHECK(z.dim() == 3);
  CHECK(same(z.proj, identity<Rational>(3)));
  CHECK(same(z.section, identity<Rational>(3)));
  auto f = quotient_with_section(Subspace<Rational>::full(2));
  CHECK(f.dim() == 0);
  CHECK(f.proj.rows() == 0);
  CHECK(f.section.cols() == 0);
  auto d = quotient_with_section(Subspace<Rational>::span(q({{1}, {1}})));
  CHECK(d.dim() == 1);
  CHECK(same(compose(d.proj, d.section), identity<Rational>(1)));
  CHECK(is_zero(compose(d.proj, q({{1}, {1}}))));
}

TEST_CASE("factorizations round-trip") {
  auto s = Subspace<Rational>::span(q({{1, 0}, {2, 1}, {0, 3}}));
  CHECK(same(corestrict(s.basis(), s), identity<Rational>(2)));
  CHECK(is_zero(corestrict(zeros<Rational>(3, 4), s)));
  CHECK_THROWS_AS(corestrict(q({{1}, {0}, {0}}), s), ImageNotContained);

  auto qs = quotient_with_section(s);
  CHECK(same(factor_through_quotient(qs.proj, qs), identity<Rational>(1)));
  Mat<Rational> f = q({{1, 2, 3}});
  CHECK(same(factor_through_quotient(f, Subspace<Rational>::zero(3)), f));
  CHECK_THROWS_AS(factor_through_quotient(f, s), KernelNotContained);

  Mat<Rational> j = q({{1, 0}, {1, 1}, {0, 2}});
  Mat<Rational> g = q({{1, -1}, {3, 2}});
  CHECK(same(lift_through_mono(compose(j, g), j), g));
  CHECK_THROWS_AS(lift_through_mono(q({{1}, {0}, {0}}), j), ImageNotContained);
  CHECK_THROWS_AS(lift_through_mono(q({{1}, {1}, {1}}), q({{1, 1}, {1, 1}, {1, 1}})), InvalidStructure);

  Mat<Rational> a = q({{2, 1}, {1, 1}});
  CHECK(same(compose(a, inverse(a)), identity<Rational>(2)));
  CHECK_THROWS_AS(inverse(q({{1, 1}, {1, 1}})), InvalidStructure);
}

TEST_CASE("tensor calculus") {
  CHECK(same(tensor_map(identity<Rational>(2), identity<Rational>(3)), identity<Rational>(6)));
  CHECK(is_zero(tensor_map(q({{1, 2}}), zeros<Rational>(2, 2))));
  CHECK(same(tensor_map(q({{2}}), q({{3}})), q({{6}})));
  CHECK(same(block_codiag<Rational>({q({{1}})}), q({{1}})));
  CHECK(same(block_codiag<Rational>({identity<Rational>(1), identity<Rational>(1)}), q({{1, 1}})));
  CHECK(same(block_diag<Rational>({q({{1, 2}}), q({{3, 4}})}), q({{1, 2}, {3, 4}})));
  CHECK_THROWS_AS(block_diag<Rational>({q({{1, 2}}), q({{3}})}), DimensionMismatch);
  CHECK(same(flip<Rational>(1, 4), identity<Rational>(4)));
  Mat<Rational> e01 = zeros<Rational>(4, 1);
  e01(1, 0) = 1;
  Mat<Rational> e10 = zeros<Rational>(4, 1);
  e10(2, 0) = 1;
  CHECK(same(compose(flip<Rational>(2, 2), e01), e10));
  for (Index m = 1; m <= 3; ++m)
    for (Index n = 1; n <= 3; ++n) CHECK(same(compose(flip<Rational>(n, m), flip<Rational>(m, n)), identity<Rational>(m * n)));
  // braid equation for the flip on K^2
  auto c = flip<Rational>(2, 2);
  auto i2 = identity<Rational>(2);
  auto c1 = tensor_map(c, i2), c2 = tensor_map(i2, c);
  CHECK(same(compose(c1, c2, c1), compose(c2, c1, c2)));
}

TEST_CASE("tensor of subspaces is canonical") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = image(oracle::random_rational(rng, 3, 2));
    auto t = image(oracle::random_rational(rng, 3, 2));
    CHECK(tensor_subspace(s, t) == image(tensor_map(s.basis(), t.basis())));
  }
}

TEST_CASE("ranks agree with the Bareiss oracle over Q") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> d(0, 6);
    const Index r = d(rng), c = d(rng);
    auto m = oracle::random_rational(rng, r, c, 3, 0.4);
    const long rk = oracle::bareiss_rank(m);
    CHECK(rank(m) == rk);
    auto k = kernel(m);
    CHECK(k.dim() == c - rk);
    CHECK(is_zero(compose(m, k.basis())));
    auto im = image(m);
    CHECK(im.dim() == rk);
    CHECK(oracle::in_span(im.basis(), m));
    CHECK(oracle::in_span(m, im.basis()));
  }
}

TEST_CASE("kernels and spans agree with enumeration over F_p") {
  std::mt19937 rng(5);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<int> d(0, p == 5 ? 4 : 5);
      const Index r = d(rng), c = d(rng);
      auto m = oracle::random_modp(rng, r, c, p);
      CHECK(rank(m) == oracle::rank_by_enumeration(m, p));
      auto k = kernel(m);
      CHECK(oracle::span_by_enumeration(k.basis(), p) == oracle::kernel_by_enumeration(m, p));
      CHECK(oracle::span_by_enumeration(image(m).basis(), p) == oracle::span_by_enumeration(m, p));
    }
  }
}

TEST_CASE("canonical form decides equality") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto m = oracle::random_rational(rng, 5, 3);
    auto mix = oracle::random_rational(rng, 3, 3, 4, 1.0);
    auto s = image(m);
    auto t = image(compose(m, mix));
    CHECK((s == t) == (oracle::bareiss_rank(compose(m, mix)) == oracle::bareiss_rank(m)));
    CHECK((s == t) == (oracle::in_span(s.basis(), t.basis()) && oracle::in_span(t.basis(), s.basis())));
  }
  for (int trial = 0; trial < 40; ++trial) {
    auto a = oracle::random_modp(rng, 4, 2, 3);
    auto b = oracle::random_modp(rng, 4, 2, 3);
    CHECK((image(a) == image(b)) == (oracle::span_by_enumeration(a, 3) == oracle::span_by_enumeration(b, 3)));
    auto both = intersect(image(a), image(b));
    std::set<oracle::Vec> common;
    auto sa = oracle::span_by_enumeration(a, 3), sb = oracle::span_by_enumeration(b, 3);
    for (const auto& v : sa)
      if (sb.count(v)) common.insert(v);
    CHECK(oracle::span_by_enumeration(both.basis(), 3) == common);
  }
}

TEST_CASE("split exactness of quotients") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = image(oracle::random_rational(rng, 5, 2 + trial % 3, 2, 0.5));
    auto qs = quotient_with_section(s);
    CHECK(qs.dim() == 5 - s.dim());
    CHECK(same(compose(qs.proj, qs.section), identity<Rational>(qs.dim())));
    CHECK(is_zero(compose(qs.proj, s.basis())));
    Mat<Rational> id = compose(qs.section, qs.proj) + compose(s.basis(), qs.retraction());
    CHECK(same(id, identity<Rational>(5)));
    auto f = oracle::random_rational(rng, 3, 5);
    auto g = compose(f, Mat<Rational>(identity<Rational>(5) - compose(s.basis(), qs.retraction())));
    CHECK(same(compose(factor_through_quotient(g, qs), qs.proj), g));
    auto h = compose(s.basis(), oracle::random_rational(rng, s.dim(), 3));
    CHECK(same(compose(s.basis(), corestrict(h, s)), h));
  }
}

TEST_CASE("annihilators") {
  auto s = Subspace<Rational>::span(q({{1}, {1}, {0}}));
  auto a = annihilator(s);
  CHECK(a.dim() == 2);
  CHECK(is_zero(compose(Mat<Rational>(a.basis().transpose()), s.basis())));
  CHECK(annihilator(a) == s);
}
