#pragma once

// Exact linear algebra on dense matrices over Rational or ModP.
//
// A linear map K^n -> K^m is an m x n matrix acting on column vectors.
// Tensor products use the row-major Kronecker order: e_i (x) e_j sits at
// index i * dim(second factor) + j.

#include <variant>
#include <vector>

#include <Eigen/Core>

#include "hopfgr/errors.hpp"
#include "hopfgr/scalar.hpp"

namespace hopfgr {

using Index = Eigen::Index;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
Mat<S> identity(Index n) {
  return Mat<S>::Identity(n, n);
}

template <class S>
Mat<S> zeros(Index rows, Index cols) {
  return Mat<S>::Zero(rows, cols);
}

template <class S>
bool is_zero(const Mat<S>& f) {
  for (Index j = 0; j < f.cols(); ++j)
    for (Index i = 0; i < f.rows(); ++i)
      if (!is_zero(f(i, j))) return false;
  return true;
}

/// Same shape and same entries.
template <class S>
bool same(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// f o g. Throws DimensionMismatch. Skips zero entries, which dominate
/// structure-constant matrices.
template <class S>
Mat<S> compose(const Mat<S>& f, const Mat<S>& g);

template <class S>
Mat<S> compose(const Mat<S>& f, const Mat<S>& g, const Mat<S>& h) {
  return compose(f, compose(g, h));
}

template <class S>
struct Echelon {
  Mat<S> reduced;              // reduced row echelon form, same shape as input
  std::vector<Index> pivots;   // pivot column of each nonzero row
};

template <class S>
Echelon<S> rref(const Mat<S>& m);

template <class S>
Index rank(const Mat<S>& m);

template <class S>
bool is_injective(const Mat<S>& f) {
  return rank(f) == f.cols();
}

template <class S>
bool is_surjective(const Mat<S>& f) {
  return rank(f) == f.rows();
}

/// Subspace of K^n stored in reduced column echelon form: the basis columns,
/// read as rows, are the nonzero rows of a reduced row echelon matrix. Two
/// subspaces are equal iff their stored bases are equal entrywise.
template <class S>
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Index ambient);
  static Subspace full(Index ambient);
  static Subspace span(const Mat<S>& columns);
  /// S (x) T inside K^m (x) K^n. The Kronecker product of canonical bases is
  /// already canonical, so no reduction is needed.
  static Subspace tensor(const Subspace& s, const Subspace& t);

  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  /// The inclusion K^dim -> K^ambient.
  const Mat<S>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  bool contains(const Mat<S>& vectors) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of the given columns in the stored basis. Throws
  /// ImageNotContained if a column lies outside.
  Mat<S> coordinates(const Mat<S>& vectors) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && same(a.basis_, b.basis_);
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Index ambient_ = 0;
  Mat<S> basis_ = Mat<S>(0, 0);
  std::vector<Index> pivots_;
};

template <class S>
Subspace<S> kernel(const Mat<S>& f);

template <class S>
Subspace<S> image(const Mat<S>& f);

template <class S>
Subspace<S> sum(const Subspace<S>& s, const Subspace<S>& t);

template <class S>
Subspace<S> intersect(const Subspace<S>& s, const Subspace<S>& t);

/// outer contains inner.
template <class S>
bool contains(const Subspace<S>& outer, const Subspace<S>& inner);

/// f(S) for a subspace S of the domain of f.
template <class S>
Subspace<S> image_of(const Mat<S>& f, const Subspace<S>& s) {
  return image(compose(f, s.basis()));
}

enum class LatticeOp { sum, intersect, equal, contains };

/// Dispatcher over the subspace lattice; sum and intersect return a
/// Subspace, equal and contains a bool. Throws AmbientMismatch.
template <class S>
std::variant<Subspace<S>, bool> lattice(LatticeOp op, const Subspace<S>& s, const Subspace<S>& t);

/// K^n / S with the projection p, a section sigma (p sigma = id) and the
/// retraction r onto S with i_S r + sigma p = id. The complement is spanned
/// by the coordinate vectors outside the pivot set of S.
template <class S>
struct Quotient {
  Subspace<S> sub;
  Mat<S> proj;
  Mat<S> section;

  Index dim() const { return proj.rows(); }
  Index ambient() const { return proj.cols(); }
  Mat<S> retraction() const;
};

template <class S>
Quotient<S> quotient_with_section(const Subspace<S>& s);

/// The unique g with i_S g = f. Throws ImageNotContained.
template <class S>
Mat<S> corestrict(const Mat<S>& f, const Subspace<S>& s);

/// The unique g with g p_S = f. Throws KernelNotContained.
template <class S>
Mat<S> factor_through_quotient(const Mat<S>& f, const Quotient<S>& q);

template <class S>
Mat<S> factor_through_quotient(const Mat<S>& f, const Subspace<S>& s) {
  return factor_through_quotient(f, quotient_with_section(s));
}

/// The unique g with j g = f for an injective j. Throws InvalidStructure if
/// j is not injective and ImageNotContained if im f is not inside im j.
template <class S>
Mat<S> lift_through_mono(const Mat<S>& f, const Mat<S>& j);

/// The unique g with g q = f for a surjective q with right inverse section.
/// Throws KernelNotContained if f does not vanish on ker q.
template <class S>
Mat<S> factor_through_epi(const Mat<S>& f, const Mat<S>& q, const Mat<S>& section);

/// Inverse of a square invertible matrix. Throws InvalidStructure.
template <class S>
Mat<S> inverse(const Mat<S>& f);

/// A right inverse of a surjective map, supported on its pivot columns.
/// Throws InvalidStructure if f is not surjective.
template <class S>
Mat<S> right_inverse(const Mat<S>& f);

/// f (x) g.
template <class S>
Mat<S> tensor_map(const Mat<S>& f, const Mat<S>& g);

template <class S>
Mat<S> tensor_map(const Mat<S>& f, const Mat<S>& g, const Mat<S>& h) {
  return tensor_map(tensor_map(f, g), h);
}

/// (id_left (x) f (x) id_right) x without forming the Kronecker product.
template <class S>
Mat<S> apply_local(const Mat<S>& f, Index left, Index right, const Mat<S>& x);

template <class S>
Subspace<S> tensor_subspace(const Subspace<S>& s, const Subspace<S>& t) {
  return Subspace<S>::tensor(s, t);
}

/// [f_1 f_2 ...]: maps with a common codomain, side by side. With an empty
/// list the result is the empty map K^0 -> K^rows.
template <class S>
Mat<S> block_codiag(const std::vector<Mat<S>>& maps, Index rows = 0);

/// Maps with a common domain stacked on top of each other. With an empty list
/// the result is the empty map K^cols -> K^0.
template <class S>
Mat<S> block_diag(const std::vector<Mat<S>>& maps, Index cols = 0);

/// Block diagonal matrix f_1 (+) f_2 (+) ...
template <class S>
Mat<S> direct_sum(const std::vector<Mat<S>>& maps);

/// K^m (x) K^n -> K^n (x) K^m, e_i (x) e_j -> e_j (x) e_i.
template <class S>
Mat<S> flip(Index m, Index n);

/// Annihilator of S in the dual space, in dual-basis coordinates.
template <class S>
Subspace<S> annihilator(const Subspace<S>& s);

/// Rows of f at the listed indices.
template <class S>
Mat<S> select_rows(const Mat<S>& f, const std::vector<Index>& rows);

}  // namespace hopfgr
