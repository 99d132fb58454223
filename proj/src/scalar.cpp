#include "hopfgr/scalar.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace hopfgr {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

// Rational

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_integer(num)) throw std::invalid_argument("bad rational: " + std::string(text));
  mpz_class n(strip_plus(num), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    const auto den = text.substr(slash + 1);
    if (!valid_integer(den)) throw std::invalid_argument("bad rational: " + std::string(text));
    d = mpz_class(strip_plus(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  }
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const { return v_.get_str(10); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

// ModP

namespace {

std::int64_t reduce(std::int64_t v, std::uint32_t p) {
  const auto m = static_cast<std::int64_t>(p);
  v %= m;
  return v < 0 ? v + m : v;
}

std::int64_t pow_mod(std::int64_t b, std::uint64_t e, std::uint32_t p) {
  std::int64_t r = 1;
  b = reduce(b, p);
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

ModP::ModP(long v, std::uint32_t p) : raw_(reduce(v, p)), p_(p) {}

ModP ModP::parse(std::string_view text, std::uint32_t p) {
  if (!valid_integer(text)) throw std::invalid_argument("bad residue: " + std::string(text));
  mpz_class n(strip_plus(text), 10);
  mpz_class r = n % p;
  if (r < 0) r += p;
  return ModP(static_cast<long>(r.get_si()), p);
}

std::string ModP::str() const { return std::to_string(raw_); }

std::uint32_t ModP::common_modulus(const ModP& a, const ModP& b) {
  if (a.p_ && b.p_ && a.p_ != b.p_) throw std::logic_error("mixing residues of different moduli");
  return a.p_ ? a.p_ : b.p_;
}

void ModP::bind_to(std::uint32_t p) {
  if (p_ == 0 && p != 0) {
    raw_ = reduce(raw_, p);
    p_ = p;
  }
}

bool ModP::is_zero() const {
  if (p_) return raw_ == 0;
  if (raw_ == 0) return true;
  if (raw_ == 1 || raw_ == -1) return false;
  throw std::logic_error("zero test of an unbound residue " + std::to_string(raw_));
}

bool ModP::is_one() const {
  if (p_) return raw_ == 1 % static_cast<std::int64_t>(p_);
  if (raw_ == 0 || raw_ == 1 || raw_ == -1) return raw_ == 1;
  throw std::logic_error("unit test of an unbound residue " + std::to_string(raw_));
}

ModP ModP::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (!p_) return *this;  // +-1
  ModP r;
  r.p_ = p_;
  r.raw_ = pow_mod(raw_, p_ - 2, p_);
  return r;
}

ModP& ModP::operator+=(const ModP& o) {
  const auto p = common_modulus(*this, o);
  bind_to(p);
  ModP b = o;
  b.bind_to(p);
  raw_ += b.raw_;
  if (p_ && raw_ >= static_cast<std::int64_t>(p_)) raw_ -= p_;
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  const auto p = common_modulus(*this, o);
  bind_to(p);
  ModP b = o;
  b.bind_to(p);
  raw_ -= b.raw_;
  if (p_ && raw_ < 0) raw_ += p_;
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  const auto p = common_modulus(*this, o);
  bind_to(p);
  ModP b = o;
  b.bind_to(p);
  raw_ *= b.raw_;
  if (p_) raw_ %= p_;
  return *this;
}

ModP operator-(const ModP& a) {
  ModP r = a;
  if (r.p_)
    r.raw_ = r.raw_ == 0 ? 0 : r.p_ - r.raw_;
  else
    r.raw_ = -r.raw_;
  return r;
}

bool operator==(const ModP& a, const ModP& b) {
  const auto p = ModP::common_modulus(a, b);
  if (!p) {
    if (a.raw_ == b.raw_) return true;
    return (a - b).is_zero();  // throws when the answer depends on p
  }
  ModP x = a, y = b;
  x.bind_to(p);
  y.bind_to(p);
  return x.raw_ == y.raw_;
}

std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.str(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) throw std::invalid_argument("characteristic must be a prime below 2^31");
  return FieldSpec{Kind::prime, p};
}

std::string FieldSpec::name() const {
  return kind == Kind::rationals ? std::string("Q") : "F" + std::to_string(characteristic);
}

Field<Rational>::Field(const FieldSpec& spec) {
  if (spec.kind != FieldSpec::Kind::rationals) throw std::invalid_argument("field spec is not Q");
}

Field<ModP>::Field(std::uint32_t p) : p_(FieldSpec::prime(p).characteristic) {}

Field<ModP>::Field(const FieldSpec& spec) : Field(spec.characteristic) {
  if (spec.kind != FieldSpec::Kind::prime) throw std::invalid_argument("field spec is not a prime field");
}

std::string Field<ModP>::format(const ModP& x) const {
  ModP y = x;
  y += ModP(0, p_);
  return y.str();
}

}  // namespace hopfgr
