#pragma once

// Example bialgebras with designated sub- and quotient configurations, and a
// seeded generator of small random bialgebras.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hopfgr/coalg.hpp"

namespace hopfgr {

template <class S>
struct NamedSubspace {
  std::string name;
  Subspace<S> space;
  /// Expected common value of the four type-one conditions, when known.
  std::optional<bool> expected;
};

template <class S>
struct NamedQuotient {
  std::string name;
  Mat<S> map;  // surjection E -> B
  std::optional<bool> expected;
};

template <class S>
struct ZooEntry {
  std::string name;
  Bialgebra<S> bialgebra;
  std::vector<std::string> basis;
  std::vector<NamedSubspace<S>> subspaces;
  std::vector<NamedQuotient<S>> quotients;

  const NamedSubspace<S>* find_subspace(const std::string& n) const;
  const NamedQuotient<S>* find_quotient(const std::string& n) const;
};

using AnyZooEntry = std::variant<ZooEntry<Rational>, ZooEntry<ModP>>;

std::vector<std::string> zoo_names();

/// Throws std::invalid_argument for an unknown name.
AnyZooEntry build(const std::string& name);

/// Finite group given by its multiplication table; element 0 is the identity.
struct FiniteGroup {
  std::string name;
  std::vector<std::vector<int>> table;

  int order() const { return static_cast<int>(table.size()); }
  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const;
  /// All subgroups (as sorted element lists), smallest first.
  std::vector<std::vector<int>> subgroups() const;
  std::vector<std::vector<int>> normal_subgroups() const;
  /// Quotient by a normal subgroup, together with the coset index of each element.
  std::pair<FiniteGroup, std::vector<int>> quotient(const std::vector<int>& normal) const;

  static FiniteGroup cyclic(int n);
  static FiniteGroup klein_four();
  static FiniteGroup symmetric_three();
};

template <class S>
Bialgebra<S> group_algebra(const Field<S>& field, const FiniteGroup& g);

/// Sweedler's four-dimensional Hopf algebra on the basis 1, g, x, gx.
template <class S>
Bialgebra<S> sweedler(const Field<S>& field);

/// K[x]/(x^n) with x primitive; a bialgebra when C(n,i) vanishes in K for
/// 0 < i < n. Throws InvalidStructure otherwise.
template <class S>
Bialgebra<S> truncated_primitive(const Field<S>& field, int n);

/// The exterior algebra on one odd primitive generator, K[x]/(x^2), with the
/// super braiding c(a (x) b) = (-1)^{|a||b|} b (x) a. Over a field of odd
/// characteristic or Q this is a braided bialgebra whose braiding is not the flip.
template <class S>
Bialgebra<S> super_exterior(const Field<S>& field);

/// Seeded random bialgebra of dimension at most dim_bound: a group algebra
/// K[G/N] or its dual for a small group G, optionally a zoo algebra, carried
/// through a random change of basis, with designated configurations. Returns
/// nothing if no candidate fits after a bounded number of attempts.
template <class S>
std::optional<ZooEntry<S>> random_instance(std::uint64_t seed, Index dim_bound, const Field<S>& field);

/// As above with the field drawn from {Q, F2, F3, F5} by the seed.
std::optional<AnyZooEntry> random_instance(std::uint64_t seed, Index dim_bound);

}  // namespace hopfgr
