#pragma once

// Wedge products of subspaces of a coalgebra, products of subspaces of an
// algebra, the towers they generate, and the exact sequence relating a tower
// to the comultiplication (or, dually, the multiplication).

#include <optional>
#include <vector>

#include "hopfgr/coalg.hpp"

namespace hopfgr {

enum class StopReason { stabilized, degree_cap };

const char* to_string(StopReason r);

/// Levels X_0, X_1, ... of a tower. Levels are stored up to the first n with
/// X_{n+1} = X_n (then stabilized_at = n and power(k) = X_n for k > n) or up
/// to the degree cap.
template <class S>
struct Tower {
  Subspace<S> base;
  std::vector<Subspace<S>> powers;
  std::optional<Index> stabilized_at;
  StopReason stop = StopReason::degree_cap;

  Index degree() const { return static_cast<Index>(powers.size()) - 1; }
  /// Throws std::out_of_range past the degree cap of an unstabilized tower.
  const Subspace<S>& power(Index n) const;
  std::vector<Index> dims() const;
};

/// C^0 = 0 and C^n = C^{n-1} wedge C.
template <class S>
struct WedgeTower : Tower<S> {
  Coalgebra<S> host;
  bool base_is_subcoalgebra = false;
};

/// I^0 = A and I^n = I^{n-1} I.
template <class S>
struct PowerTower : Tower<S> {
  Algebra<S> host;
  bool base_is_ideal = false;
};

/// ker((p_C (x) p_D) Delta). Throws AmbientMismatch.
template <class S>
Subspace<S> wedge(const Subspace<S>& c, const Subspace<S>& d, const Coalgebra<S>& e);

template <class S>
WedgeTower<S> wedge_tower(const Subspace<S>& c, const Coalgebra<S>& e, Index max_degree);

/// (C wedge D) wedge F == C wedge (D wedge F).
template <class S>
bool wedge_associativity_check(const Subspace<S>& c, const Subspace<S>& d, const Subspace<S>& f,
                               const Coalgebra<S>& e);

/// m(I (x) J). Throws AmbientMismatch.
template <class S>
Subspace<S> ideal_product(const Subspace<S>& i, const Subspace<S>& j, const Algebra<S>& a);

template <class S>
PowerTower<S> power_tower(const Subspace<S>& i, const Algebra<S>& a, Index max_degree);

struct Predicates {
  bool is_subcoalgebra = false;
  bool is_subalgebra = false;
  bool is_ideal = false;
  bool is_subbialgebra = false;
  bool is_coideal = false;
};

template <class S>
bool is_subcoalgebra(const Subspace<S>& s, const Coalgebra<S>& e);

template <class S>
bool is_ideal(const Subspace<S>& s, const Algebra<S>& a);

template <class S>
Predicates predicates(const Subspace<S>& s, const Bialgebra<S>& e);

/// Witness of exactness of
///   (+) X_a (x) X_b  --nabla-->  E (x) E  --delta_stack-->  (+) E/X_a (x) E/X_b.
/// For a wedge tower the left sum runs over a+b = n+1 and the right over
/// a+b = n; beta is the inclusion of the image of nabla, gamma the
/// corestriction of nabla (beta gamma = nabla) and alpha the corestriction
/// of Delta i_{X_n} (Delta i = beta alpha).
/// For a power tower the left sum runs over a+b = n and the right over
/// a+b = n+1; beta is the inclusion of the image of delta_stack, gamma its
/// corestriction (beta gamma = delta_stack) and alpha: im -> E/I^n the map
/// with p_{I^n} m = alpha gamma.
/// Summands whose level is X_0 = 0 (respectively E/I^0 = 0) are omitted.
template <class S>
struct SequenceWitness {
  Index degree = 0;
  bool dual = false;
  std::vector<std::pair<Index, Index>> left_terms;
  std::vector<std::pair<Index, Index>> right_terms;
  Mat<S> nabla;
  Mat<S> delta_stack;
  Mat<S> beta;
  Mat<S> gamma;
  Mat<S> alpha;
};

/// Throws ExactnessFailure if the sequence is not exact or a defining
/// equation fails, and std::out_of_range if the tower does not reach n.
template <class S>
SequenceWitness<S> sweedler_sequence(const WedgeTower<S>& tower, Index n);

template <class S>
SequenceWitness<S> sweedler_sequence(const PowerTower<S>& tower, Index n);

}  // namespace hopfgr
