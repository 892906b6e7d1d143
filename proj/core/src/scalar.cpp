#include "adelic/scalar.hpp"

#include <ostream>
#include <sstream>

#include "adelic/error.hpp"

namespace adelic {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::VariableMismatch: return "variable-mismatch";
    case ErrorCode::FieldMismatch: return "field-mismatch";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::InsufficientPrecision: return "insufficient-precision";
    case ErrorCode::UnsupportedFactorization: return "unsupported-factorization";
    case ErrorCode::NotIrreducible: return "not-irreducible";
    case ErrorCode::NotCoprime: return "not-coprime";
    case ErrorCode::InvalidChain: return "invalid-chain";
    case ErrorCode::InvalidPoint: return "invalid-point";
    case ErrorCode::PlaceNotOnScheme: return "place-not-on-scheme";
    case ErrorCode::Undefined: return "undefined";
    case ErrorCode::NotInCompletion: return "not-in-completion";
    case ErrorCode::CoordinateFailure: return "coordinate-failure";
    case ErrorCode::NonRationalPoint: return "non-rational-point";
    case ErrorCode::Inseparable: return "inseparable";
    case ErrorCode::DegreeMismatch: return "degree-mismatch";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Unsupported: return "unsupported";
  }
  return "unknown";
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BaseField BaseField::prime(std::int64_t p) {
  if (!is_prime(p)) fail(ErrorCode::FieldMismatch, "characteristic " + std::to_string(p) + " is not prime");
  return BaseField(p);
}

std::string BaseField::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

mpq_class Scalar::reduce(const mpq_class& v, std::int64_t p) {
  if (p == 0) return v;
  mpz_class m(static_cast<long>(p));
  mpz_class num = v.get_num() % m;
  mpz_class den = v.get_den() % m;
  if (den < 0) den += m;
  if (den == 0) fail(ErrorCode::DivisionByZero, "denominator divisible by the characteristic");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  mpz_class r = (num * inv) % m;
  if (r < 0) r += m;
  return mpq_class(r);
}

Scalar::Scalar(long v, const BaseField& k) : v_(v), p_(k.characteristic()) { v_ = reduce(v_, p_); }

Scalar::Scalar(const mpq_class& v, const BaseField& k) : v_(v), p_(k.characteristic()) {
  v_.canonicalize();
  v_ = reduce(v_, p_);
}

BaseField Scalar::field() const { return p_ == 0 ? BaseField::rationals() : BaseField::prime(p_); }

std::int64_t Scalar::join(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_;
  if (a.p_ == 0) return b.p_;
  if (b.p_ == 0) return a.p_;
  fail(ErrorCode::FieldMismatch, "scalars from F" + std::to_string(a.p_) + " and F" + std::to_string(b.p_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar r;
  r.p_ = Scalar::join(a, b);
  r.v_ = a.v_ + b.v_;
  if (r.p_ != 0) r.v_ = Scalar::reduce(r.v_, r.p_);
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar r;
  r.p_ = Scalar::join(a, b);
  r.v_ = a.v_ - b.v_;
  if (r.p_ != 0) r.v_ = Scalar::reduce(r.v_, r.p_);
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  r.p_ = Scalar::join(a, b);
  r.v_ = a.v_ * b.v_;
  if (r.p_ != 0) r.v_ = Scalar::reduce(r.v_, r.p_);
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.v_ = -v_;
  if (p_ != 0) r.v_ = reduce(r.v_, p_);
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero scalar");
  Scalar r = *this;
  r.v_ = 1 / v_;
  if (p_ != 0) r.v_ = reduce(r.v_, p_);
  return r;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = one_like();
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) {
    std::int64_t p = Scalar::join(a, b);
    return Scalar::reduce(a.v_, p) == Scalar::reduce(b.v_, p);
  }
  return a.v_ == b.v_;
}

bool operator<(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) < 0; }

std::string Scalar::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace adelic
