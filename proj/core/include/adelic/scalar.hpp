#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>

namespace adelic {

/// The perfect base field k: either Q or F_p.
class BaseField {
 public:
  BaseField() = default;
  static BaseField rationals() { return BaseField(0); }
  /// Throws if p is not prime.
  static BaseField prime(std::int64_t p);

  std::int64_t characteristic() const noexcept { return p_; }
  bool is_rationals() const noexcept { return p_ == 0; }
  std::string name() const;

  friend bool operator==(const BaseField&, const BaseField&) = default;

 private:
  explicit BaseField(std::int64_t p) : p_(p) {}
  std::int64_t p_ = 0;
};

bool is_prime(std::int64_t n);

/// An element of the base field. Elements of F_p are stored as reduced integers
/// in [0, p). Mixing a characteristic-0 value with an F_p value coerces the
/// rational into F_p (its denominator must be prime to p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : v_(v) {}  // NOLINT: integer literals are scalars of Q
  Scalar(long v, const BaseField& k);
  Scalar(const mpq_class& v, const BaseField& k);

  static Scalar zero(const BaseField& k) { return Scalar(0L, k); }
  static Scalar one(const BaseField& k) { return Scalar(1L, k); }

  BaseField field() const;
  std::int64_t characteristic() const noexcept { return p_; }
  const mpq_class& value() const noexcept { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar zero_like() const { return Scalar(0L, field()); }
  Scalar one_like() const { return Scalar(1L, field()); }

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  Scalar pow(long e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Total order used for canonical containers only (no field meaning).
  friend bool operator<(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  static std::int64_t join(const Scalar& a, const Scalar& b);
  static mpq_class reduce(const mpq_class& v, std::int64_t p);

  mpq_class v_ = 0;
  std::int64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace adelic
