#pragma once

#include <stdexcept>
#include <string>

namespace hopfgr {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct AmbientMismatch : Error {
  using Error::Error;
};

/// A map was asked to factor through a subobject it does not land in.
/// Inside the graded constructions this means a structural hypothesis failed
/// (B not a subbialgebra, a tower built from the wrong data, ...).
struct ImageNotContained : Error {
  using Error::Error;
};
/// A map was asked to factor through a quotient it does not vanish on.
struct KernelNotContained : Error {
  using Error::Error;
};

struct NotSubcoalgebra : Error {
  using Error::Error;
};
struct NotIdeal : Error {
  using Error::Error;
};
struct NotSubbialgebra : Error {
  using Error::Error;
};
struct NotBialgebraQuotient : Error {
  using Error::Error;
};
struct BraidingDoesNotDescend : Error {
  using Error::Error;
};
struct ActionAxiomFailure : Error {
  using Error::Error;
};
struct CoactionAxiomFailure : Error {
  using Error::Error;
};
struct InvalidStructure : Error {
  using Error::Error;
};

/// Malformed input document: bad syntax, missing fields, wrong shapes or
/// unparsable scalars.
struct InputError : Error {
  using Error::Error;
};

/// Two constructions that must agree by theorem did not. Always a bug.
struct ConstructionMismatch : Error {
  using Error::Error;
};
struct ExactnessFailure : Error {
  using Error::Error;
};
struct AgreementFailure : Error {
  using Error::Error;
};

}  // namespace hopfgr
