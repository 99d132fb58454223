#pragma once

// Graded (co)algebras given by their local maps, truncated at a degree N, and
// the associated graded objects of a wedge tower of a subbialgebra and of the
// power tower of a bialgebra ideal.
//
// Families indexed by (a,b) with a+b <= N are stored as nested vectors:
// f[a][b] for b = 0..N-a.

#include <optional>
#include <utility>
#include <vector>

#include "hopfgr/filtration.hpp"

namespace hopfgr {

template <class S>
using Family = std::vector<std::vector<Mat<S>>>;

/// Components C_0..C_N with Delta_{a,b}: C_{a+b} -> C_a (x) C_b and eps_0: C_0 -> K.
template <class S>
struct GradedCoalgebra {
  std::vector<Index> dims;
  Family<S> comult;
  Mat<S> counit0;

  Index degree() const { return static_cast<Index>(dims.size()) - 1; }
};

/// Components A_0..A_N with m_{a,b}: A_a (x) A_b -> A_{a+b} and u_0: K -> A_0.
template <class S>
struct GradedAlgebra {
  std::vector<Index> dims;
  Family<S> mult;
  Mat<S> unit0;

  Index degree() const { return static_cast<Index>(dims.size()) - 1; }
};

/// A graded algebra and a graded coalgebra on the same components, with
/// braidings c_{a,b}: C_a (x) C_b -> C_b (x) C_a. When complete, every
/// component above N is zero, so the direct sum is a finite-dimensional
/// braided bialgebra (see total_bialgebra).
template <class S>
struct GradedBialgebra {
  Field<S> field;
  GradedCoalgebra<S> coalgebra;
  GradedAlgebra<S> algebra;
  Family<S> braiding;
  bool flip = true;
  bool complete = false;

  const std::vector<Index>& dims() const { return coalgebra.dims; }
  Index degree() const { return coalgebra.degree(); }
};

/// A component upper/lower of a tower, with its coordinates. For a wedge
/// tower component n is X_{n+1}/X_n; for a power tower it is I^n/I^{n+1}.
template <class S>
struct GradedPiece {
  Subspace<S> upper;
  Subspace<S> lower;
  Mat<S> proj;      // upper coordinates -> component
  Mat<S> section;   // component -> upper coordinates, proj section = id
  Mat<S> lift;      // component -> E
  Mat<S> quotient;  // E -> E/lower
  Mat<S> embed;     // component -> E/lower, injective
};

template <class S>
struct GradedWitness {
  std::vector<GradedPiece<S>> pieces;
  std::optional<Index> stabilized_at;
};

template <class T, class S>
struct WithWitness {
  T object;
  GradedWitness<S> witness;
};

/// Passes iff the local coassociativity and counit identities hold; the
/// report's location names the failing (a,b,c) or (d).
template <class S>
CheckReport verify_graded_coalgebra(const GradedCoalgebra<S>& g);

template <class S>
CheckReport verify_graded_algebra(const GradedAlgebra<S>& g);

/// Algebra and coalgebra identities, unit and counit compatibilities, and
/// the degreewise compatibility of Delta with m through the braidings. A
/// complete object is also assembled and checked as an ordinary bialgebra.
template <class S>
CheckReport verify_graded_bialgebra(const GradedBialgebra<S>& g);

struct StronglyGraded {
  bool holds = true;
  std::optional<std::pair<Index, Index>> first_failure;

  explicit operator bool() const { return holds; }
};

/// Every Delta_{i,j} with i+j <= N injective, scanned by i+j then i.
template <class S>
StronglyGraded is_strongly_graded_coalgebra(const GradedCoalgebra<S>& g);

/// Every m_{i,j} with i+j <= N surjective.
template <class S>
StronglyGraded is_strongly_graded_algebra(const GradedAlgebra<S>& g);

/// gr^n = C^{n+1}/C^n for n <= N. Throws NotSubcoalgebra.
template <class S>
WithWitness<GradedCoalgebra<S>, S> associated_graded_coalgebra(const Subspace<S>& c, const Coalgebra<S>& e,
                                                               Index max_degree);

/// gr^n = I^n/I^{n+1} for n <= N. Throws NotIdeal.
template <class S>
WithWitness<GradedAlgebra<S>, S> associated_graded_algebra(const Subspace<S>& i, const Algebra<S>& a,
                                                           Index max_degree);

/// m_wedge^{a,b}: B^{a+1} (x) B^{b+1} -> B^{a+b+1} in the stored bases of the
/// tower levels. Throws ImageNotContained when m does not respect the tower.
template <class S>
Mat<S> wedge_multiplication(const Bialgebra<S>& e, const WedgeTower<S>& tower, Index a, Index b);

/// Delta_vee^{a,b}: E/I^{a+b+1} -> E/I^{a+1} (x) E/I^{b+1}, quotients in the
/// coordinates of quotient_with_section. Throws KernelNotContained when
/// Delta does not respect the tower.
template <class S>
Mat<S> quotient_comultiplication(const Bialgebra<S>& e, const PowerTower<S>& tower, Index a, Index b);

/// The graded algebra with components B^{n+1} and products m_wedge^{a,b}.
template <class S>
GradedAlgebra<S> wedge_tower_algebra(const Bialgebra<S>& e, const WedgeTower<S>& tower, Index max_degree);

/// The graded coalgebra with components E/I^{n+1} and coproducts Delta_vee^{a,b}.
template <class S>
GradedCoalgebra<S> power_tower_coalgebra(const Bialgebra<S>& e, const PowerTower<S>& tower, Index max_degree);

/// Vanishing of p_{u+v-1} m (i_u (x) i_v), the identities of the wedge
/// multiplication family (graded algebra axioms, compatibility with the
/// inclusions B^n -> B^{n+1}) and m_wedge^{0,0} = m_B. Levels up to N+1.
template <class S>
CheckReport check_wedge_multiplication(const Bialgebra<S>& e, const Subspace<S>& b, Index max_degree);

/// The dual statements for the quotient comultiplication family, including
/// Delta_vee^{0,0} = Delta_B on E/I = B.
template <class S>
CheckReport check_quotient_comultiplication(const Bialgebra<S>& e, const Mat<S>& pi, Index max_degree);

/// The graded braided bialgebra gr_B E. Throws NotSubbialgebra and
/// BraidingDoesNotDescend.
template <class S>
WithWitness<GradedBialgebra<S>, S> graded_bialgebra_from_subbialgebra(const Bialgebra<S>& e, const Subspace<S>& b,
                                                                      Index max_degree);

/// The graded braided bialgebra gr_I E for I = ker pi. Throws
/// NotBialgebraQuotient and BraidingDoesNotDescend.
template <class S>
WithWitness<GradedBialgebra<S>, S> graded_bialgebra_from_quotient(const Bialgebra<S>& e, const Mat<S>& pi,
                                                                  Index max_degree);

/// p m_wedge^{a,b} = m^{gr}_{a,b} (p (x) p), and for a+b <= N the maps
/// theta_{a,b} out of the degree a+b+1 exact sequence with
/// (p_a (x) p_b) beta = (embed (x) embed) theta, theta alpha = Delta^{gr}_{a,b} p
/// and theta gamma the projection onto the (a+1,b+1) summand.
template <class S>
CheckReport check_subbialgebra_factorizations(const Bialgebra<S>& e, const Subspace<S>& b,
                                              const WithWitness<GradedBialgebra<S>, S>& gr);

/// (embed (x) embed) Delta^{gr}_{a,b} = Delta_vee^{a,b} embed and the
/// induced multiplication p m = m^{gr} (p (x) p).
template <class S>
CheckReport check_quotient_factorizations(const Bialgebra<S>& e, const Mat<S>& pi,
                                          const WithWitness<GradedBialgebra<S>, S>& gr);

/// theta_{a,b} for a wedge tower reaching degree a+b+2.
template <class S>
Mat<S> theta(const Bialgebra<S>& e, const WedgeTower<S>& tower, const GradedWitness<S>& witness, Index a, Index b);

/// The degree-zero part as a bialgebra on C_0.
template <class S>
Bialgebra<S> degree_zero(const GradedBialgebra<S>& g);

/// The direct sum of the components: a subcoalgebra of the untruncated
/// graded coalgebra.
template <class S>
Coalgebra<S> total_coalgebra(const GradedCoalgebra<S>& g);

/// The direct sum of the components with products above N dropped: the
/// quotient of the untruncated graded algebra by its components above N.
template <class S>
Algebra<S> total_algebra(const GradedAlgebra<S>& g);

/// The direct sum of the components as a bialgebra; meaningful when complete.
template <class S>
Bialgebra<S> total_bialgebra(const GradedBialgebra<S>& g);

}  // namespace hopfgr
