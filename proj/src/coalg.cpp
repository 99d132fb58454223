#include "hopfgr/coalg.hpp"

namespace hopfgr {

// CheckReport

void CheckReport::fail(std::string identity, Index index, std::string why) {
  if (!passed) return;
  passed = false;
  failed_identity = std::move(identity);
  basis_index = index;
  detail = std::move(why);
}

template <class S>
bool CheckReport::expect_equal(const std::string& identity, const Mat<S>& lhs, const Mat<S>& rhs) {
  checked.push_back(identity);
  if (!passed) return false;
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    fail(identity, -1, "sides have different shapes");
    return false;
  }
  for (Index j = 0; j < lhs.cols(); ++j)
    for (Index i = 0; i < lhs.rows(); ++i)
      if (lhs(i, j) != rhs(i, j)) {
        fail(identity, j);
        return false;
      }
  return true;
}

bool CheckReport::expect(const std::string& identity, bool ok, std::string why) {
  checked.push_back(identity);
  if (!ok) fail(identity, -1, std::move(why));
  return ok;
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& c : other.checked) checked.push_back(prefix + c);
  if (passed && !other.passed) {
    passed = false;
    failed_identity = prefix + other.failed_identity;
    basis_index = other.basis_index;
    detail = other.detail;
    location = other.location;
  }
}

// Bialgebra

namespace {

template <class S>
void check_shape(const Mat<S>& f, Index rows, Index cols, const char* what) {
  if (f.rows() != rows || f.cols() != cols)
    throw DimensionMismatch(std::string(what) + " has shape " + std::to_string(f.rows()) + "x" +
                            std::to_string(f.cols()) + ", expected " + std::to_string(rows) + "x" +
                            std::to_string(cols));
}

}  // namespace

template <class S>
Bialgebra<S>::Bialgebra(Field<S> field, Mat<S> mult, Mat<S> unit, Mat<S> comult, Mat<S> counit,
                        std::optional<Mat<S>> braiding)
    : field_(std::move(field)),
      dim_(mult.rows()),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      comult_(std::move(comult)),
      counit_(std::move(counit)) {
  const Index n = dim_, n2 = n * n;
  check_shape(mult_, n, n2, "multiplication");
  check_shape(unit_, n, 1, "unit");
  check_shape(comult_, n2, n, "comultiplication");
  check_shape(counit_, 1, n, "counit");
  const Mat<S> tau = flip<S>(n, n);
  if (braiding) {
    check_shape(*braiding, n2, n2, "braiding");
    braiding_ = std::move(*braiding);
    flip_ = same(braiding_, tau);
  } else {
    braiding_ = tau;
  }
  if (flip_) {
    braiding_inverse_ = tau;
  } else {
    try {
      braiding_inverse_ = inverse(braiding_);
    } catch (const InvalidStructure&) {
      braiding_inverse_.reset();
    }
  }
}

// Axioms

template <class S>
CheckReport verify_coalgebra(const Coalgebra<S>& c) {
  CheckReport r;
  const Index n = c.dim;
  if (!r.expect("shape", c.comult.rows() == n * n && c.comult.cols() == n && c.counit.rows() == 1 &&
                             c.counit.cols() == n))
    return r;
  r.expect_equal("coassociativity", apply_local(c.comult, 1, n, c.comult), apply_local(c.comult, n, 1, c.comult));
  r.expect_equal("left counit", apply_local(c.counit, 1, n, c.comult), identity<S>(n));
  r.expect_equal("right counit", apply_local(c.counit, n, 1, c.comult), identity<S>(n));
  return r;
}

template <class S>
CheckReport verify_algebra(const Algebra<S>& a) {
  CheckReport r;
  const Index n = a.dim;
  if (!r.expect("shape", a.mult.rows() == n && a.mult.cols() == n * n && a.unit.rows() == n && a.unit.cols() == 1))
    return r;
  const Mat<S> idn = identity<S>(n);
  r.expect_equal("associativity", compose(a.mult, tensor_map(a.mult, idn)), compose(a.mult, tensor_map(idn, a.mult)));
  r.expect_equal("left unit", compose(a.mult, tensor_map(a.unit, idn)), idn);
  r.expect_equal("right unit", compose(a.mult, tensor_map(idn, a.unit)), idn);
  return r;
}

template <class S>
CheckReport verify_braiding(const Bialgebra<S>& e) {
  CheckReport r;
  const Index n = e.dim();
  const Mat<S>& c = e.braiding();
  const Mat<S>& m = e.mult();
  const Mat<S>& d = e.comult();
  const Mat<S> idn = identity<S>(n);
  if (!r.expect("braiding invertible", e.braiding_inverse().has_value(), "braiding matrix is singular")) return r;

  // c1 = c (x) id, c2 = id (x) c on V^3, applied without building them.
  auto c1 = [&](const Mat<S>& x) { return apply_local(c, 1, n, x); };
  auto c2 = [&](const Mat<S>& x) { return apply_local(c, n, 1, x); };
  const Mat<S> id3 = identity<S>(n * n * n);
  r.expect_equal("braid equation", c1(c2(c1(id3))), c2(c1(c2(id3))));

  r.expect_equal("braiding natural in first factor of m", compose(c, tensor_map(m, idn)),
                 apply_local(m, n, 1, c1(c2(id3))));
  r.expect_equal("braiding natural in second factor of m", compose(c, tensor_map(idn, m)),
                 apply_local(m, 1, n, c2(c1(id3))));
  r.expect_equal("braiding natural in first factor of Delta", apply_local(d, 1, n, c),
                 c2(c1(apply_local(d, n, 1, identity<S>(n * n)))));
  r.expect_equal("braiding natural in second factor of Delta", apply_local(d, n, 1, c),
                 c1(c2(apply_local(d, 1, n, identity<S>(n * n)))));
  r.expect_equal("braiding with unit on the left", compose(c, tensor_map(e.unit(), idn)), tensor_map(idn, e.unit()));
  r.expect_equal("braiding with unit on the right", compose(c, tensor_map(idn, e.unit())), tensor_map(e.unit(), idn));
  r.expect_equal("braiding with counit on the left", apply_local(e.counit(), 1, n, c), tensor_map(idn, e.counit()));
  r.expect_equal("braiding with counit on the right", apply_local(e.counit(), n, 1, c), tensor_map(e.counit(), idn));
  return r;
}

template <class S>
CheckReport verify_bialgebra(const Bialgebra<S>& e) {
  CheckReport r;
  r.merge(verify_algebra(e.algebra()));
  r.merge(verify_coalgebra(e.coalgebra()));
  r.merge(verify_braiding(e));
  if (!r.passed) return r;
  const Index n = e.dim();
  const Mat<S>& m = e.mult();
  const Mat<S>& d = e.comult();
  // (m (x) m)(id (x) c (x) id)(Delta (x) Delta)
  Mat<S> dd = tensor_map(d, d);
  Mat<S> twisted = apply_local(e.braiding(), n, n, dd);
  Mat<S> rhs = apply_local(m, 1, n, apply_local(m, n * n, 1, twisted));
  r.expect_equal("Delta o m compatibility", compose(d, m), rhs);
  r.expect_equal("Delta o u", compose(d, e.unit()), tensor_map(e.unit(), e.unit()));
  r.expect_equal("eps o m", compose(e.counit(), m), tensor_map(e.counit(), e.counit()));
  Mat<S> one(1, 1);
  one(0, 0) = e.field().from_int(1);
  r.expect_equal("eps o u", compose(e.counit(), e.unit()), one);
  return r;
}

template <class S>
CheckReport verify_morphism(const Mat<S>& f, const Bialgebra<S>& e, const Bialgebra<S>& target, MorphismKind kind) {
  CheckReport r;
  if (!r.expect("shape", f.rows() == target.dim() && f.cols() == e.dim(), "map does not go from source to target"))
    return r;
  const Mat<S> ff = tensor_map(f, f);
  if (kind != MorphismKind::coalgebra) {
    r.expect_equal("f o m", compose(f, e.mult()), compose(target.mult(), ff));
    r.expect_equal("f o u", compose(f, e.unit()), target.unit());
  }
  if (kind != MorphismKind::algebra) {
    r.expect_equal("Delta o f", compose(target.comult(), f), compose(ff, e.comult()));
    r.expect_equal("eps o f", compose(target.counit(), f), e.counit());
  }
  if (kind == MorphismKind::bialgebra)
    r.expect_equal("braiding o (f (x) f)", compose(target.braiding(), ff), compose(ff, e.braiding()));
  return r;
}

// Constructions

template <class S>
Bialgebra<S> dualize(const Bialgebra<S>& e) {
  std::optional<Mat<S>> c;
  if (!e.flip_braided()) c = Mat<S>(e.braiding().transpose());
  return Bialgebra<S>(e.field(), e.comult().transpose(), e.counit().transpose(), e.mult().transpose(),
                      e.unit().transpose(), std::move(c));
}

template <class S>
Bialgebra<S> change_basis(const Bialgebra<S>& e, const Mat<S>& t) {
  const Mat<S> tinv = inverse(t);
  const Mat<S> tt = tensor_map(t, t), tinv2 = tensor_map(tinv, tinv);
  std::optional<Mat<S>> c;
  if (!e.flip_braided()) c = compose(tinv2, e.braiding(), tt);
  return Bialgebra<S>(e.field(), compose(tinv, e.mult(), tt), compose(tinv, e.unit()),
                      compose(tinv2, e.comult(), t), compose(e.counit(), t), std::move(c));
}

template <class S>
Bialgebra<S> restrict_to(const Bialgebra<S>& e, const Subspace<S>& b) {
  if (b.ambient() != e.dim()) throw AmbientMismatch("restrict_to: subspace of the wrong space");
  const Mat<S>& i = b.basis();
  const Mat<S> ii = tensor_map(i, i);
  const auto bb = tensor_subspace(b, b);
  try {
    std::optional<Mat<S>> c;
    if (!e.flip_braided()) c = corestrict(compose(e.braiding(), ii), bb);
    return Bialgebra<S>(e.field(), corestrict(compose(e.mult(), ii), b), corestrict(e.unit(), b),
                        corestrict(compose(e.comult(), i), bb), compose(e.counit(), i), std::move(c));
  } catch (const ImageNotContained&) {
    throw NotSubbialgebra("subspace is not closed under the structure maps");
  }
}

template <class S>
Bialgebra<S> quotient_by(const Bialgebra<S>& e, const Mat<S>& pi) {
  if (pi.cols() != e.dim()) throw DimensionMismatch("quotient_by: map has the wrong domain");
  Mat<S> sigma;
  try {
    sigma = right_inverse(pi);
  } catch (const InvalidStructure&) {
    throw NotBialgebraQuotient("quotient map is not surjective");
  }
  const Mat<S> pp = tensor_map(pi, pi), ss = tensor_map(sigma, sigma);
  try {
    std::optional<Mat<S>> c;
    if (!e.flip_braided()) c = factor_through_epi(compose(pp, e.braiding()), pp, ss);
    return Bialgebra<S>(e.field(), factor_through_epi(compose(pi, e.mult()), pp, ss), compose(pi, e.unit()),
                        factor_through_epi(compose(pp, e.comult()), pi, sigma),
                        factor_through_epi(e.counit(), pi, sigma), std::move(c));
  } catch (const KernelNotContained&) {
    throw NotBialgebraQuotient("kernel of the quotient map is not a bialgebra ideal");
  }
}

template <class S>
bool same_structure(const Bialgebra<S>& a, const Bialgebra<S>& b) {
  return a.field() == b.field() && same(a.mult(), b.mult()) && same(a.unit(), b.unit()) &&
         same(a.comult(), b.comult()) && same(a.counit(), b.counit()) && same(a.braiding(), b.braiding());
}

#define HOPFGR_COALG(S)                                                                                       \
  template bool CheckReport::expect_equal<S>(const std::string&, const Mat<S>&, const Mat<S>&);               \
  template class Bialgebra<S>;                                                                                \
  template CheckReport verify_coalgebra(const Coalgebra<S>&);                                                 \
  template CheckReport verify_algebra(const Algebra<S>&);                                                     \
  template CheckReport verify_braiding(const Bialgebra<S>&);                                                  \
  template CheckReport verify_bialgebra(const Bialgebra<S>&);                                                 \
  template CheckReport verify_morphism(const Mat<S>&, const Bialgebra<S>&, const Bialgebra<S>&, MorphismKind); \
  template Bialgebra<S> dualize(const Bialgebra<S>&);                                                         \
  template Bialgebra<S> change_basis(const Bialgebra<S>&, const Mat<S>&);                                     \
  template Bialgebra<S> restrict_to(const Bialgebra<S>&, const Subspace<S>&);                                 \
  template Bialgebra<S> quotient_by(const Bialgebra<S>&, const Mat<S>&);                                      \
  template bool same_structure(const Bialgebra<S>&, const Bialgebra<S>&);

HOPFGR_COALG(Rational)
HOPFGR_COALG(ModP)

}  // namespace hopfgr
