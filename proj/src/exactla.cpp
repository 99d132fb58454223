#include "hopfgr/exactla.hpp"

#include <string>

namespace hopfgr {

namespace {

std::string shape(Index r, Index c) { return std::to_string(r) + "x" + std::to_string(c); }

}  // namespace

template <class S>
Mat<S> compose(const Mat<S>& f, const Mat<S>& g) {
  if (f.cols() != g.rows())
    throw DimensionMismatch("compose: " + shape(f.rows(), f.cols()) + " after " + shape(g.rows(), g.cols()));
  Mat<S> out = Mat<S>::Zero(f.rows(), g.cols());
  for (Index k = 0; k < f.cols(); ++k) {
    for (Index j = 0; j < g.cols(); ++j) {
      const S& b = g(k, j);
      if (is_zero(b)) continue;
      for (Index i = 0; i < f.rows(); ++i) {
        const S& a = f(i, k);
        if (!is_zero(a)) out(i, j) += a * b;
      }
    }
  }
  return out;
}

template <class S>
Echelon<S> rref(const Mat<S>& m) {
  using RowMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  RowMat a = m;
  const Index rows = a.rows(), cols = a.cols();
  std::vector<Index> pivots;
  std::vector<Index> support;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index found = -1;
    for (Index i = r; i < rows; ++i)
      if (!is_zero(a(i, c))) {
        found = i;
        break;
      }
    if (found < 0) continue;
    if (found != r) a.row(found).swap(a.row(r));
    if (!a(r, c).is_one()) {
      const S inv = a(r, c).inverse();
      for (Index j = c; j < cols; ++j)
        if (!is_zero(a(r, j))) a(r, j) *= inv;
    }
    support.clear();
    for (Index j = c; j < cols; ++j)
      if (!is_zero(a(r, j))) support.push_back(j);
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const S factor = a(i, c);
      for (Index j : support) a(i, j) -= factor * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {Mat<S>(a), std::move(pivots)};
}

template <class S>
Index rank(const Mat<S>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

// Subspace

template <class S>
Subspace<S> Subspace<S>::zero(Index ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat<S>(ambient, 0);
  return s;
}

template <class S>
Subspace<S> Subspace<S>::full(Index ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat<S>::Identity(ambient, ambient);
  s.pivots_.resize(ambient);
  for (Index i = 0; i < ambient; ++i) s.pivots_[i] = i;
  return s;
}

template <class S>
Subspace<S> Subspace<S>::span(const Mat<S>& columns) {
  auto e = rref(Mat<S>(columns.transpose()));
  Subspace s;
  s.ambient_ = columns.rows();
  const auto r = static_cast<Index>(e.pivots.size());
  s.basis_ = e.reduced.topRows(r).transpose();
  s.pivots_ = std::move(e.pivots);
  return s;
}

template <class S>
Subspace<S> Subspace<S>::tensor(const Subspace& a, const Subspace& b) {
  Subspace s;
  s.ambient_ = a.ambient_ * b.ambient_;
  s.basis_ = tensor_map(a.basis_, b.basis_);
  s.pivots_.reserve(a.pivots_.size() * b.pivots_.size());
  for (Index i : a.pivots_)
    for (Index j : b.pivots_) s.pivots_.push_back(i * b.ambient_ + j);
  return s;
}

template <class S>
Mat<S> Subspace<S>::coordinates(const Mat<S>& vectors) const {
  if (vectors.rows() != ambient_)
    throw AmbientMismatch("coordinates: vectors of length " + std::to_string(vectors.rows()) +
                          " in ambient " + std::to_string(ambient_));
  Mat<S> c = select_rows(vectors, pivots_);
  if (!same(compose(basis_, c), vectors)) throw ImageNotContained("vectors not in subspace");
  return c;
}

template <class S>
bool Subspace<S>::contains(const Mat<S>& vectors) const {
  if (vectors.rows() != ambient_) throw AmbientMismatch("contains: ambient mismatch");
  return same(compose(basis_, select_rows(vectors, pivots_)), vectors);
}

template <class S>
bool Subspace<S>::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw AmbientMismatch("contains: ambient mismatch");
  return contains(other.basis_);
}

// Lattice

template <class S>
Subspace<S> kernel(const Mat<S>& f) {
  const auto e = rref(f);
  const Index n = f.cols();
  std::vector<bool> is_pivot(n, false);
  for (Index c : e.pivots) is_pivot[c] = true;
  Mat<S> vectors = Mat<S>::Zero(n, n - static_cast<Index>(e.pivots.size()));
  Index k = 0;
  for (Index j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    vectors(j, k) = S(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const S& v = e.reduced(static_cast<Index>(r), j);
      if (!is_zero(v)) vectors(e.pivots[r], k) = -v;
    }
    ++k;
  }
  return Subspace<S>::span(vectors);
}

template <class S>
Subspace<S> image(const Mat<S>& f) {
  return Subspace<S>::span(f);
}

namespace {

template <class S>
void check_ambient(const Subspace<S>& s, const Subspace<S>& t, const char* what) {
  if (s.ambient() != t.ambient())
    throw AmbientMismatch(std::string(what) + ": ambient " + std::to_string(s.ambient()) + " vs " +
                          std::to_string(t.ambient()));
}

}  // namespace

template <class S>
Subspace<S> sum(const Subspace<S>& s, const Subspace<S>& t) {
  check_ambient(s, t, "sum");
  Mat<S> both(s.ambient(), s.dim() + t.dim());
  both << s.basis(), t.basis();
  return Subspace<S>::span(both);
}

template <class S>
Subspace<S> intersect(const Subspace<S>& s, const Subspace<S>& t) {
  check_ambient(s, t, "intersect");
  Mat<S> both(s.ambient(), s.dim() + t.dim());
  both << s.basis(), -t.basis();
  const auto k = kernel(both);
  return Subspace<S>::span(compose(s.basis(), Mat<S>(k.basis().topRows(s.dim()))));
}

template <class S>
bool contains(const Subspace<S>& outer, const Subspace<S>& inner) {
  check_ambient(outer, inner, "contains");
  return outer.contains(inner);
}

template <class S>
std::variant<Subspace<S>, bool> lattice(LatticeOp op, const Subspace<S>& s, const Subspace<S>& t) {
  check_ambient(s, t, "lattice");
  switch (op) {
    case LatticeOp::sum:
      return sum(s, t);
    case LatticeOp::intersect:
      return intersect(s, t);
    case LatticeOp::equal:
      return s == t;
    case LatticeOp::contains:
      return s.contains(t);
  }
  return false;
}

// Quotients and factorizations

template <class S>
Quotient<S> quotient_with_section(const Subspace<S>& s) {
  const Index n = s.ambient();
  std::vector<bool> is_pivot(n, false);
  for (Index c : s.pivots()) is_pivot[c] = true;
  std::vector<Index> rest;
  for (Index i = 0; i < n; ++i)
    if (!is_pivot[i]) rest.push_back(i);
  const auto q = static_cast<Index>(rest.size());

  // v - i_S(v[pivots]) vanishes on the pivots; keep the other coordinates.
  Mat<S> along = identity<S>(n) - compose(s.basis(), select_rows(identity<S>(n), s.pivots()));
  Quotient<S> out;
  out.sub = s;
  out.proj = select_rows(along, rest);
  out.section = Mat<S>::Zero(n, q);
  for (Index t = 0; t < q; ++t) out.section(rest[t], t) = S(1);
  return out;
}

template <class S>
Mat<S> Quotient<S>::retraction() const {
  return select_rows(identity<S>(ambient()), sub.pivots());
}

template <class S>
Mat<S> corestrict(const Mat<S>& f, const Subspace<S>& s) {
  if (f.rows() != s.ambient())
    throw DimensionMismatch("corestrict: map into " + std::to_string(f.rows()) + "-space, subspace of " +
                            std::to_string(s.ambient()));
  return s.coordinates(f);
}

template <class S>
Mat<S> factor_through_quotient(const Mat<S>& f, const Quotient<S>& q) {
  if (f.cols() != q.ambient())
    throw DimensionMismatch("factor_through_quotient: domain " + std::to_string(f.cols()) + " vs " +
                            std::to_string(q.ambient()));
  if (!is_zero(compose(f, q.sub.basis()))) throw KernelNotContained("map does not vanish on the subspace");
  return compose(f, q.section);
}

template <class S>
Mat<S> lift_through_mono(const Mat<S>& f, const Mat<S>& j) {
  if (f.rows() != j.rows())
    throw DimensionMismatch("lift_through_mono: codomains " + std::to_string(f.rows()) + " vs " +
                            std::to_string(j.rows()));
  const Index k = j.cols();
  Mat<S> aug(j.rows(), k + f.cols());
  aug << j, f;
  const auto e = rref(aug);
  if (static_cast<Index>(e.pivots.size()) < k || (k > 0 && e.pivots[k - 1] != k - 1))
    throw InvalidStructure("lift_through_mono: map is not injective");
  if (static_cast<Index>(e.pivots.size()) > k) throw ImageNotContained("lift_through_mono: image not contained");
  return e.reduced.block(0, k, k, f.cols());
}

template <class S>
Mat<S> factor_through_epi(const Mat<S>& f, const Mat<S>& q, const Mat<S>& section) {
  if (f.cols() != q.cols() || section.rows() != q.cols() || section.cols() != q.rows())
    throw DimensionMismatch("factor_through_epi: shapes");
  Mat<S> g = compose(f, section);
  if (!same(compose(g, q), f)) throw KernelNotContained("factor_through_epi: map does not vanish on the kernel");
  return g;
}

template <class S>
Mat<S> inverse(const Mat<S>& f) {
  if (f.rows() != f.cols()) throw InvalidStructure("inverse of a non-square matrix");
  try {
    return lift_through_mono(identity<S>(f.rows()), f);
  } catch (const InvalidStructure&) {
    throw InvalidStructure("matrix is singular");
  }
}

template <class S>
Mat<S> right_inverse(const Mat<S>& f) {
  const auto e = rref(f);
  if (static_cast<Index>(e.pivots.size()) != f.rows()) throw InvalidStructure("right_inverse: map is not surjective");
  Mat<S> square = Mat<S>(f.transpose());
  square = Mat<S>(select_rows(square, e.pivots).transpose());
  const Mat<S> inv = inverse(square);
  Mat<S> out = Mat<S>::Zero(f.cols(), f.rows());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) out.row(e.pivots[k]) = inv.row(static_cast<Index>(k));
  return out;
}

// Tensor calculus

template <class S>
Mat<S> tensor_map(const Mat<S>& f, const Mat<S>& g) {
  Mat<S> out = Mat<S>::Zero(f.rows() * g.rows(), f.cols() * g.cols());
  for (Index j = 0; j < f.cols(); ++j)
    for (Index i = 0; i < f.rows(); ++i) {
      const S& a = f(i, j);
      if (is_zero(a)) continue;
      for (Index l = 0; l < g.cols(); ++l)
        for (Index k = 0; k < g.rows(); ++k) {
          const S& b = g(k, l);
          if (!is_zero(b)) out(i * g.rows() + k, j * g.cols() + l) = a * b;
        }
    }
  return out;
}

template <class S>
Mat<S> apply_local(const Mat<S>& f, Index left, Index right, const Mat<S>& x) {
  const Index fr = f.rows(), fc = f.cols();
  if (x.rows() != left * fc * right)
    throw DimensionMismatch("apply_local: " + std::to_string(x.rows()) + " rows, expected " +
                            std::to_string(left * fc * right));
  Mat<S> out = Mat<S>::Zero(left * fr * right, x.cols());
  for (Index col = 0; col < x.cols(); ++col)
    for (Index idx = 0; idx < x.rows(); ++idx) {
      const S& v = x(idx, col);
      if (is_zero(v)) continue;
      const Index b = idx % right;
      const Index k = (idx / right) % fc;
      const Index a = idx / (right * fc);
      for (Index i = 0; i < fr; ++i) {
        const S& w = f(i, k);
        if (!is_zero(w)) out((a * fr + i) * right + b, col) += w * v;
      }
    }
  return out;
}

template <class S>
Mat<S> block_codiag(const std::vector<Mat<S>>& maps, Index rows) {
  if (maps.empty()) return Mat<S>(rows, 0);
  Index cols = 0;
  for (const auto& f : maps) {
    if (f.rows() != maps.front().rows()) throw DimensionMismatch("block_codiag: codomains differ");
    cols += f.cols();
  }
  Mat<S> out(maps.front().rows(), cols);
  Index at = 0;
  for (const auto& f : maps) {
    out.middleCols(at, f.cols()) = f;
    at += f.cols();
  }
  return out;
}

template <class S>
Mat<S> block_diag(const std::vector<Mat<S>>& maps, Index cols) {
  if (maps.empty()) return Mat<S>(0, cols);
  Index rows = 0;
  for (const auto& f : maps) {
    if (f.cols() != maps.front().cols()) throw DimensionMismatch("block_diag: domains differ");
    rows += f.rows();
  }
  Mat<S> out(rows, maps.front().cols());
  Index at = 0;
  for (const auto& f : maps) {
    out.middleRows(at, f.rows()) = f;
    at += f.rows();
  }
  return out;
}

template <class S>
Mat<S> direct_sum(const std::vector<Mat<S>>& maps) {
  Index rows = 0, cols = 0;
  for (const auto& f : maps) {
    rows += f.rows();
    cols += f.cols();
  }
  Mat<S> out = Mat<S>::Zero(rows, cols);
  Index r = 0, c = 0;
  for (const auto& f : maps) {
    out.block(r, c, f.rows(), f.cols()) = f;
    r += f.rows();
    c += f.cols();
  }
  return out;
}

template <class S>
Mat<S> flip(Index m, Index n) {
  Mat<S> out = Mat<S>::Zero(m * n, m * n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) out(j * m + i, i * n + j) = S(1);
  return out;
}

template <class S>
Subspace<S> annihilator(const Subspace<S>& s) {
  return kernel(Mat<S>(s.basis().transpose()));
}

template <class S>
Mat<S> select_rows(const Mat<S>& f, const std::vector<Index>& rows) {
  Mat<S> out(static_cast<Index>(rows.size()), f.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = f.row(rows[i]);
  return out;
}

#define HOPFGR_EXACTLA(S)                                                                         \
  template class Subspace<S>;                                                                     \
  template struct Quotient<S>;                                                                    \
  template Mat<S> compose(const Mat<S>&, const Mat<S>&);                                          \
  template Echelon<S> rref(const Mat<S>&);                                                        \
  template Index rank(const Mat<S>&);                                                             \
  template Subspace<S> kernel(const Mat<S>&);                                                     \
  template Subspace<S> image(const Mat<S>&);                                                      \
  template Subspace<S> sum(const Subspace<S>&, const Subspace<S>&);                               \
  template Subspace<S> intersect(const Subspace<S>&, const Subspace<S>&);                         \
  template bool contains(const Subspace<S>&, const Subspace<S>&);                                 \
  template std::variant<Subspace<S>, bool> lattice(LatticeOp, const Subspace<S>&, const Subspace<S>&); \
  template Quotient<S> quotient_with_section(const Subspace<S>&);                                 \
  template Mat<S> corestrict(const Mat<S>&, const Subspace<S>&);                                  \
  template Mat<S> factor_through_quotient(const Mat<S>&, const Quotient<S>&);                     \
  template Mat<S> lift_through_mono(const Mat<S>&, const Mat<S>&);                                \
  template Mat<S> factor_through_epi(const Mat<S>&, const Mat<S>&, const Mat<S>&);                \
  template Mat<S> inverse(const Mat<S>&);                                                         \
  template Mat<S> right_inverse(const Mat<S>&);                                                   \
  template Mat<S> tensor_map(const Mat<S>&, const Mat<S>&);                                       \
  template Mat<S> apply_local(const Mat<S>&, Index, Index, const Mat<S>&);                        \
  template Mat<S> block_codiag(const std::vector<Mat<S>>&, Index);                                \
  template Mat<S> block_diag(const std::vector<Mat<S>>&, Index);                                  \
  template Mat<S> direct_sum(const std::vector<Mat<S>>&);                                         \
  template Mat<S> flip<S>(Index, Index);                                                          \
  template Subspace<S> annihilator(const Subspace<S>&);                                           \
  template Mat<S> select_rows(const Mat<S>&, const std::vector<Index>&);

HOPFGR_EXACTLA(Rational)
HOPFGR_EXACTLA(ModP)

}  // namespace hopfgr
