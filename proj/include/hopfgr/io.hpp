#pragma once

// Reading and writing bialgebra documents.
//
// A document is a JSON object:
//   field      "Q" or "F<p>"
//   dim        n
//   basis      optional list of n labels
//   mult       mult[i][j] = coefficients of e_i e_j
//   unit       coefficients of 1
//   comult     comult[k][i][j] = coefficient of e_i (x) e_j in Delta e_k
//   counit     eps(e_k)
//   braiding   optional n^2 x n^2 matrix (rows), the flip when absent
//   subspaces  optional {name: {"span": [vectors], "expected": bool}}
//   quotients  optional {name: {"matrix": [rows], "expected": bool}}
// Scalars are strings "a" or "a/b" (integers are accepted on input). A
// subspace may be given as a bare list of vectors, a quotient as a bare list
// of rows.

#include <string>
#include <string_view>

#include <json.hpp>

#include "hopfgr/zoo.hpp"

namespace hopfgr {

using Json = nlohmann::json;

/// Throws InputError. Axioms are not checked.
AnyZooEntry load_document(const Json& doc);
AnyZooEntry load_document_text(std::string_view text);
AnyZooEntry load_document_file(const std::string& path);

template <class S>
Json export_document(const ZooEntry<S>& z);
Json export_document(const AnyZooEntry& z);

/// Rows of scalar strings.
template <class S>
Json matrix_to_json(const Field<S>& f, const Mat<S>& m);

/// The basis vectors of a subspace, one row each.
template <class S>
Json basis_to_json(const Field<S>& f, const Mat<S>& basis);

/// Compact dump; keys are sorted, so equal documents give equal text.
std::string canonical_text(const Json& doc);

/// 64-bit FNV-1a of the text as "fnv1a64:" followed by 16 hex digits.
std::string fnv1a_digest(std::string_view text);

}  // namespace hopfgr
