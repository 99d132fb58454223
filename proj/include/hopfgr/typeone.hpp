#pragma once

// Tensor powers over a base algebra and cotensor powers over a base
// coalgebra, the canonical maps from the tensor algebra onto the wedge tower
// and from the power-tower quotients into the cotensor coalgebra, and the
// checkers for the equivalent characterizations of type one.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hopfgr/graded.hpp"

namespace hopfgr {

/// A B-bimodule: left: B (x) M -> M and right: M (x) B -> M.
template <class S>
struct Bimodule {
  Algebra<S> base;
  Index dim = 0;
  Mat<S> left;
  Mat<S> right;
};

/// A B-bicomodule: left: M -> B (x) M and right: M -> M (x) B.
template <class S>
struct Bicomodule {
  Coalgebra<S> base;
  Index dim = 0;
  Mat<S> left;
  Mat<S> right;
};

/// Associativity and unit of both actions and their commutation.
template <class S>
CheckReport verify_bimodule(const Bimodule<S>& m);

template <class S>
CheckReport verify_bicomodule(const Bicomodule<S>& m);

/// V (x)_B W with its induced bimodule structure and the projection
/// chi: V (x) W -> V (x)_B W.
template <class S>
struct RelativeTensor {
  Bimodule<S> module;
  Mat<S> chi;
};

/// V []_B W with its induced bicomodule structure and the inclusion
/// zeta: V []_B W -> V (x) W.
template <class S>
struct RelativeCotensor {
  Bicomodule<S> comodule;
  Mat<S> zeta;
};

/// The quotient of V (x) W by the span of v.b (x) w - v (x) b.w. Throws
/// ActionAxiomFailure if either input is not a bimodule over the same base.
template <class S>
RelativeTensor<S> tensor_over(const Bimodule<S>& v, const Bimodule<S>& w);

/// The kernel of rho_V (x) id - id (x) lambda_W. Throws CoactionAxiomFailure.
template <class S>
RelativeCotensor<S> cotensor_over(const Bicomodule<S>& v, const Bicomodule<S>& w);

/// M^{(x)_B n}. chi: M^{(x) n} -> power is the iterated projection and step:
/// M^{(x)_B n-1} (x) M -> M^{(x)_B n} the last coequalizer. For n = 0 the
/// power is B itself and chi is the unit K -> B.
template <class S>
struct RelativeTensorPower {
  Index n = 0;
  Bimodule<S> power;
  Mat<S> chi;
  Mat<S> step;
};

/// M^{[]_B n}. zeta: power -> M^{(x) n} is the iterated inclusion and step:
/// M^{[]_B n} -> M^{[]_B n-1} (x) M the last equalizer. For n = 0 the power
/// is B itself and zeta is the counit B -> K.
template <class S>
struct RelativeCotensorPower {
  Index n = 0;
  Bicomodule<S> power;
  Mat<S> zeta;
  Mat<S> step;
};

/// Powers 0..max_n.
template <class S>
std::vector<RelativeTensorPower<S>> tensor_powers(const Bimodule<S>& m, Index max_n);

template <class S>
std::vector<RelativeCotensorPower<S>> cotensor_powers(const Bicomodule<S>& m, Index max_n);

/// A component of the map out of the tensor algebra: map goes from the
/// tensor power to its target, image is taken in the target coordinates.
template <class S>
struct PhiComponent {
  Index degree = 0;
  Mat<S> map;
  bool epi = false;
  Subspace<S> image;
};

/// A component of the map into the cotensor coalgebra, with its kernel in
/// the source coordinates.
template <class S>
struct PsiComponent {
  Index degree = 0;
  Mat<S> map;
  bool mono = false;
  Subspace<S> kernel;
};

template <class S>
struct PhiFamily {
  Bimodule<S> generator;
  std::vector<RelativeTensorPower<S>> powers;
  std::vector<PhiComponent<S>> components;

  /// First degree where the component is not onto.
  std::optional<Index> first_failure() const;
};

template <class S>
struct PsiFamily {
  Bicomodule<S> generator;
  std::vector<RelativeCotensorPower<S>> powers;
  std::vector<PsiComponent<S>> components;

  std::optional<Index> first_failure() const;
};

/// phi_n: (B^2)^{(x)_B n} -> B^{n+1} for n <= N, targets in the coordinates of
/// the wedge tower levels. Built from phi_{n-1} through the multiplication
/// B^n (x) B^2 -> B^{n+1} and cross-checked against the iterated product in E.
/// Throws NotSubbialgebra and ConstructionMismatch.
template <class S>
PhiFamily<S> phi_components(const Bialgebra<S>& e, const Subspace<S>& b, Index max_degree);

/// psi_n: E/I^{n+1} -> (E/I^2)^{[]_B n} for n <= N with I = ker pi, sources in
/// the coordinates of quotient_with_section. Built from psi_{n-1} through
/// the comultiplication E/I^{n+1} -> E/I^n (x) E/I^2 and cross-checked against
/// the iterated comultiplication of E. Throws NotBialgebraQuotient and
/// ConstructionMismatch.
template <class S>
PsiFamily<S> psi_components(const Bialgebra<S>& e, const Mat<S>& pi, Index max_degree);

/// phi_t: A_1^{(x)_{A_0} t} -> A_t for t <= N inside a graded algebra.
template <class S>
PhiFamily<S> graded_phi(const GradedAlgebra<S>& g);

/// psi_m: C_m -> C_1^{[]_{C_0} m} for m <= N inside a graded coalgebra.
template <class S>
PsiFamily<S> graded_psi(const GradedCoalgebra<S>& g);

enum class Side { sub, quot };

const char* to_string(Side s);

/// One condition of a type-one report. On failure, degree and location name
/// the first offending degree (or pair of degrees) and witness holds the
/// basis of the offending subspace: a proper image or a nonzero kernel.
template <class S>
struct Condition {
  bool holds = true;
  std::optional<Index> degree;
  std::vector<Index> location;
  std::string detail;
  Mat<S> witness;
};

template <class S>
struct TypeOneReport {
  Side side = Side::sub;
  Index max_degree = 0;
  std::array<Condition<S>, 4> conditions;
  bool agreement = true;

  const Condition<S>& condition(int k) const { return conditions.at(k - 1); }
};

/// The four conditions for gr_B E, B a subbialgebra, truncated at N:
///   1. gr_B E is of type one: strongly graded as a coalgebra, every phi_n
///      onto and every psi_m of gr_B E injective;
///   2. gr_B E is strongly graded as an algebra;
///   3. the algebra of wedge tower levels is strongly graded;
///   4. B^{n+1} = (B^2)^n for 2 <= n <= N.
/// Throws NotSubbialgebra, and AgreementFailure when the conditions differ
/// unless assert_agreement is false.
template <class S>
TypeOneReport<S> typeone_check_sub(const Bialgebra<S>& e, const Subspace<S>& b, Index max_degree,
                                   bool assert_agreement = true);

/// The dual conditions for gr_I E, I = ker pi:
///   1. gr_I E is of type one: strongly graded as an algebra, every psi_n
///      injective and every phi_t of gr_I E onto;
///   2. gr_I E is strongly graded as a coalgebra;
///   3. the coalgebra of quotients E/I^{n+1} is strongly graded;
///   4. I^{n+1} = (I^2)^{wedge n} for 2 <= n <= N.
template <class S>
TypeOneReport<S> typeone_check_quot(const Bialgebra<S>& e, const Mat<S>& pi, Index max_degree,
                                    bool assert_agreement = true);

/// Equivalent characterizations of strong grading of a graded coalgebra:
/// (a) strongly graded, (a') every Delta_{a,1} injective, (b) every psi_m
/// injective, (c) their direct sum injective, (d) C_0 + ... + C_{n-1} is the
/// n-th wedge power of C_0 in the truncated coalgebra, (e) the case n = 2.
/// Each is recorded as an identity; throws AgreementFailure if any differs
/// from (a).
template <class S>
CheckReport universal_map_assertions(const GradedCoalgebra<S>& g);

/// Dually for a graded algebra, with (d) the equality of the sum of the
/// components of degree >= n with the n-th power of the augmentation ideal.
template <class S>
CheckReport universal_map_assertions(const GradedAlgebra<S>& g);

/// The coalgebra statements for the sub side, the algebra statements for
/// the quotient side.
template <class S>
CheckReport universal_map_assertions(const GradedBialgebra<S>& g, Side side);

/// (I^2)^{wedge n} = ker((p_{I^2})^{(x) n} Delta^{n-1}), with n = 1 giving I^2.
template <class S>
Subspace<S> iterated_wedge(const Subspace<S>& c, const Coalgebra<S>& e, Index n);

/// (B^2)^n: the left-associated product of n copies.
template <class S>
Subspace<S> iterated_product(const Subspace<S>& s, const Algebra<S>& a, Index n);

}  // namespace hopfgr
