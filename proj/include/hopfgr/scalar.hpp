#pragma once

// Exact scalars: arbitrary-precision rationals and residues modulo a prime.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <Eigen/Core>

namespace hopfgr {

class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "a", "-a", "a/b" (decimal integers). Throws std::invalid_argument.
  static Rational parse(std::string_view text);
  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  Rational inverse() const;
  const mpq_class& value() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  // Eigen occasionally needs an ordering (e.g. for maxCoeff); it is never used for pivoting.
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

 private:
  mpq_class v_{0};
};

/// Residue modulo a prime p < 2^31.
///
/// A value carries its modulus. Integer literals created without one (Eigen's
/// Scalar(0) and Scalar(1)) are "unbound" and adopt the modulus of the first
/// bound operand they meet. Deciding whether an unbound value other than
/// 0 or +-1 is zero would depend on the field, so that throws std::logic_error.
class ModP {
 public:
  ModP() = default;
  ModP(long v) : raw_(v) {}  // NOLINT(google-explicit-constructor)
  ModP(int v) : raw_(v) {}   // NOLINT(google-explicit-constructor)
  ModP(long v, std::uint32_t p);

  /// Parses an optionally signed decimal integer and reduces it mod p.
  static ModP parse(std::string_view text, std::uint32_t p);
  std::string str() const;

  bool is_zero() const;
  bool is_one() const;
  ModP inverse() const;
  std::uint32_t modulus() const { return p_; }
  bool bound() const { return p_ != 0; }
  /// Representative in [0, p) for bound values; the raw integer otherwise.
  std::int64_t residue() const { return raw_; }

  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend ModP operator-(const ModP& a);
  friend bool operator==(const ModP& a, const ModP& b);
  friend bool operator!=(const ModP& a, const ModP& b) { return !(a == b); }
  friend bool operator<(const ModP& a, const ModP& b) { return a.raw_ < b.raw_; }

 private:
  static std::uint32_t common_modulus(const ModP& a, const ModP& b);
  void bind_to(std::uint32_t p);

  std::int64_t raw_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);
std::ostream& operator<<(std::ostream& os, const ModP& x);

bool is_prime(std::uint64_t n);

/// Which field a computation runs over.
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);
  std::string name() const;  // "Q" or "F<p>"
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Construction, parsing and formatting of scalars of type S for one field.
template <class S>
class Field;

template <>
class Field<Rational> {
 public:
  Field() = default;
  explicit Field(const FieldSpec& spec);
  FieldSpec spec() const { return FieldSpec::rationals(); }
  Rational from_int(long v) const { return Rational(v); }
  Rational parse(std::string_view text) const { return Rational::parse(text); }
  std::string format(const Rational& x) const { return x.str(); }
  friend bool operator==(const Field&, const Field&) { return true; }
};

template <>
class Field<ModP> {
 public:
  explicit Field(std::uint32_t p);
  explicit Field(const FieldSpec& spec);
  FieldSpec spec() const { return FieldSpec::prime(p_); }
  std::uint32_t characteristic() const { return p_; }
  ModP from_int(long v) const { return ModP(v, p_); }
  ModP parse(std::string_view text) const { return ModP::parse(text, p_); }
  std::string format(const ModP& x) const;
  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const ModP& x) { return x.is_zero(); }

}  // namespace hopfgr

namespace Eigen {

template <>
struct NumTraits<hopfgr::Rational> : GenericNumTraits<hopfgr::Rational> {
  using Real = hopfgr::Rational;
  using NonInteger = hopfgr::Rational;
  using Nested = hopfgr::Rational;
  using Literal = hopfgr::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<hopfgr::ModP> : GenericNumTraits<hopfgr::ModP> {
  using Real = hopfgr::ModP;
  using NonInteger = hopfgr::ModP;
  using Nested = hopfgr::ModP;
  using Literal = hopfgr::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
