#pragma once

#include <sstream>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "adelic/error.hpp"
#include "adelic/scalar.hpp"

namespace adelic {

/// Dense univariate polynomial over a field-like coefficient type C.
/// Coefficients are stored low degree first with no trailing zeros; the
/// `zero_` sample fixes which field the coefficients live in.
template <class C>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(const C& zero_sample) : zero_(zero_sample.zero_like()) {}
  UPoly(std::vector<C> coeffs, const C& zero_sample) : zero_(zero_sample.zero_like()), c_(std::move(coeffs)) {
    trim();
  }

  static UPoly constant(const C& c) { return UPoly({c}, c); }
  static UPoly monomial(const C& c, int degree) {
    std::vector<C> v(static_cast<std::size_t>(degree) + 1, c.zero_like());
    v.back() = c;
    return UPoly(std::move(v), c);
  }
  /// The polynomial t (in the field of `sample`).
  static UPoly variable(const C& sample) { return monomial(sample.one_like(), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const C& zero_sample() const { return zero_; }
  C coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : zero_; }
  const std::vector<C>& coeffs() const { return c_; }
  C lead() const { return c_.empty() ? zero_ : c_.back(); }

  void set(int i, const C& v) {
    if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(i) + 1, zero_);
    c_[static_cast<std::size_t>(i)] = v;
    trim();
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r(a.zero_);
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    r.c_.assign(n, a.zero_);
    for (std::size_t i = 0; i < n; ++i) r.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    r.trim();
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r(a.zero_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }
  friend UPoly operator*(const C& s, const UPoly& a) {
    UPoly r = a;
    for (auto& x : r.c_) x = s * x;
    r.trim();
    return r;
  }
  UPoly& operator+=(const UPoly& b) { return *this = *this + b; }
  UPoly& operator*=(const UPoly& b) { return *this = *this * b; }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  C eval(const C& x) const {
    C acc = zero_;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// Evaluate at an element of a (possibly larger) ring R that accepts C scalars.
  template <class R, class Embed>
  R eval_in(const R& x, Embed embed) const {
    R acc = x.zero_like();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + embed(c_[i]);
    return acc;
  }

  UPoly derivative() const {
    UPoly r(zero_);
    if (c_.size() <= 1) return r;
    r.c_.assign(c_.size() - 1, zero_);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      C k = zero_;
      C one = zero_.one_like();
      for (std::size_t j = 0; j < i; ++j) k = k + one;
      r.c_[i - 1] = k * c_[i];
    }
    r.trim();
    return r;
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return lead().inverse() * (*this);
  }

  /// Euclidean division: returns (quotient, remainder).
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    UPoly q(zero_), r = *this;
    C inv = d.lead().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int shift = r.degree() - d.degree();
      C f = r.lead() * inv;
      q.set(shift, f);
      UPoly t = monomial(f, shift) * d;
      r = r - t;
    }
    return {q, r};
  }
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  UPoly operator/(const UPoly& d) const { return divmod(d).first; }

  /// Exact division; throws if `d` does not divide.
  UPoly exact_div(const UPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) fail(ErrorCode::DivisionByZero, "inexact polynomial division");
    return q;
  }

  UPoly compose(const UPoly& inner) const {
    UPoly acc(zero_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(c_[i]);
    return acc;
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      std::string cs = c_[i].str();
      if (i == 0) {
        os << cs;
      } else {
        if (!(c_[i].is_one())) os << "(" << cs << ")*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  C zero_{};
  std::vector<C> c_;
};

template <class C>
UPoly<C> gcd(UPoly<C> a, UPoly<C> b) {
  while (!b.is_zero()) {
    UPoly<C> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g monic.
template <class C>
std::tuple<UPoly<C>, UPoly<C>, UPoly<C>> xgcd(const UPoly<C>& a, const UPoly<C>& b) {
  const C& z = a.zero_sample();
  UPoly<C> r0 = a, r1 = b, s0 = UPoly<C>::constant(z.one_like()), s1(z), t0(z), t1 = UPoly<C>::constant(z.one_like());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    UPoly<C> s = s0 - q * s1;
    s0 = s1;
    s1 = s;
    UPoly<C> t = t0 - q * t1;
    t0 = t1;
    t1 = t;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  C inv = r0.lead().inverse();
  return {inv * r0, inv * s0, inv * t0};
}

template <class C>
UPoly<C> powmod(UPoly<C> base, mpz_class e, const UPoly<C>& mod) {
  UPoly<C> result = UPoly<C>::constant(base.zero_sample().one_like()) % mod;
  base = base % mod;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = (result * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return result;
}

using ScalarPoly = UPoly<Scalar>;

ScalarPoly scalar_poly(const std::vector<long>& coeffs, const BaseField& k);

}  // namespace adelic
