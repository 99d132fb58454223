#pragma once

// Algebras, coalgebras and (braided) bialgebras given by structure matrices,
// with exhaustive axiom checks.
//
// For a space of dimension n: m is n x n^2, u is n x 1, Delta is n^2 x n,
// eps is 1 x n and a braiding c is n^2 x n^2. The identifications K (x) V = V
// = V (x) K are identities in coordinates.

#include <optional>
#include <string>
#include <vector>

#include "hopfgr/exactla.hpp"

namespace hopfgr {

/// Outcome of an axiom check. On failure names the first identity that did
/// not hold and the first basis index (a column of the two sides) where the
/// sides differ; -1 when the failure is not tied to a basis element.
struct CheckReport {
  bool passed = true;
  std::string failed_identity;
  Index basis_index = -1;
  std::string detail;
  /// Degree indices of the failing identity for graded checks, e.g. (a,b,c).
  std::vector<Index> location;
  std::vector<std::string> checked;

  explicit operator bool() const { return passed; }
  void fail(std::string identity, Index index = -1, std::string why = {});
  /// Records the identity and compares the two sides unless already failed.
  template <class S>
  bool expect_equal(const std::string& identity, const Mat<S>& lhs, const Mat<S>& rhs);
  bool expect(const std::string& identity, bool ok, std::string why = {});
  /// Appends another report's identities; adopts its failure if this one passed.
  void merge(const CheckReport& other, const std::string& prefix = {});
};

template <class S>
struct Algebra {
  Index dim = 0;
  Mat<S> mult;
  Mat<S> unit;
};

template <class S>
struct Coalgebra {
  Index dim = 0;
  Mat<S> comult;
  Mat<S> counit;
};

template <class S>
class Bialgebra {
 public:
  /// Checks shapes only (throws DimensionMismatch); axioms are checked by
  /// verify_bialgebra. Without a braiding the flip is used.
  Bialgebra(Field<S> field, Mat<S> mult, Mat<S> unit, Mat<S> comult, Mat<S> counit,
            std::optional<Mat<S>> braiding = std::nullopt);

  const Field<S>& field() const { return field_; }
  Index dim() const { return dim_; }
  const Mat<S>& mult() const { return mult_; }
  const Mat<S>& unit() const { return unit_; }
  const Mat<S>& comult() const { return comult_; }
  const Mat<S>& counit() const { return counit_; }
  const Mat<S>& braiding() const { return braiding_; }
  /// Empty when the supplied braiding is singular.
  const std::optional<Mat<S>>& braiding_inverse() const { return braiding_inverse_; }
  bool flip_braided() const { return flip_; }

  Algebra<S> algebra() const { return {dim_, mult_, unit_}; }
  Coalgebra<S> coalgebra() const { return {dim_, comult_, counit_}; }

 private:
  Field<S> field_;
  Index dim_;
  Mat<S> mult_, unit_, comult_, counit_, braiding_;
  std::optional<Mat<S>> braiding_inverse_;
  bool flip_ = true;
};

template <class S>
CheckReport verify_coalgebra(const Coalgebra<S>& c);

template <class S>
CheckReport verify_algebra(const Algebra<S>& a);

/// Braid equation and compatibility of c with m, Delta, u and eps.
template <class S>
CheckReport verify_braiding(const Bialgebra<S>& e);

/// Algebra, coalgebra and braiding axioms, then Delta m = (m (x) m)(id (x) c
/// (x) id)(Delta (x) Delta), Delta u = u (x) u, eps m = eps (x) eps, eps u = 1.
template <class S>
CheckReport verify_bialgebra(const Bialgebra<S>& e);

enum class MorphismKind { algebra, coalgebra, bialgebra };

/// f: E -> F commutes with the selected structure maps (for bialgebras also
/// with the braidings).
template <class S>
CheckReport verify_morphism(const Mat<S>& f, const Bialgebra<S>& e, const Bialgebra<S>& target, MorphismKind kind);

/// Linear dual: m and Delta, u and eps swap roles by transposition; the
/// braiding of the dual is the transpose.
template <class S>
Bialgebra<S> dualize(const Bialgebra<S>& e);

/// Transports the structure along an invertible change of basis t: the new
/// basis vectors are the columns of t in old coordinates.
template <class S>
Bialgebra<S> change_basis(const Bialgebra<S>& e, const Mat<S>& t);

/// Induced structure on a subbialgebra, in the coordinates of its stored
/// basis. Throws NotSubbialgebra.
template <class S>
Bialgebra<S> restrict_to(const Bialgebra<S>& e, const Subspace<S>& b);

/// Induced structure on the target of a surjective pi whose kernel is a
/// bialgebra ideal. Throws NotBialgebraQuotient.
template <class S>
Bialgebra<S> quotient_by(const Bialgebra<S>& e, const Mat<S>& pi);

/// Same field, same maps entrywise.
template <class S>
bool same_structure(const Bialgebra<S>& a, const Bialgebra<S>& b);

}  // namespace hopfgr
