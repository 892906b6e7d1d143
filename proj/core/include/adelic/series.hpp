#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "adelic/error.hpp"
#include "adelic/extfield.hpp"
#include "adelic/scalar.hpp"

namespace adelic {

inline std::string coeff_str(const Scalar& c) { return c.str(); }
inline std::string coeff_str(const FieldElem& c) { return c.str(); }

/// Truncated Laurent series  sum_{e >= start} c_e var^e + O(var^prec).
/// Coefficients are exact for exponents below `precision()`; `kExact` marks a
/// finite (exact) Laurent polynomial. The coefficient type may itself be a
/// LaurentSeries, giving iterated series with per-coefficient precision.
template <class C>
class LaurentSeries {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max();

  LaurentSeries() = default;
  explicit LaurentSeries(const C& zero_sample, std::string var = "", int prec = kExact)
      : var_(std::move(var)), prec_(prec), zero_(zero_sample.zero_like()) {}
  LaurentSeries(int start, std::vector<C> coeffs, int prec, const C& zero_sample, std::string var = "")
      : var_(std::move(var)), start_(start), prec_(prec), zero_(zero_sample.zero_like()), c_(std::move(coeffs)) {
    trim();
  }

  static LaurentSeries monomial(const C& c, int e, std::string var = "") {
    return LaurentSeries(e, {c}, kExact, c, std::move(var));
  }
  /// O(var^e)
  static LaurentSeries big_o(int e, const C& zero_sample, std::string var = "") {
    return LaurentSeries(zero_sample, std::move(var), e);
  }

  const std::string& var() const noexcept { return var_; }
  int start() const noexcept { return start_; }
  int precision() const noexcept { return prec_; }
  bool is_exact() const noexcept { return prec_ == kExact; }
  const std::vector<C>& coeffs() const noexcept { return c_; }
  const C& zero_sample() const noexcept { return zero_; }

  /// Lowest exponent with a coefficient that is not exactly zero, or the
  /// precision when no such coefficient is known.
  int valuation() const noexcept { return c_.empty() ? prec_ : start_; }
  int last_exponent() const noexcept { return start_ + static_cast<int>(c_.size()) - 1; }

  C coeff(int e) const {
    if (e >= prec_)
      fail(ErrorCode::InsufficientPrecision,
           "coefficient of " + var_ + "^" + std::to_string(e) + " requested, series known below " + std::to_string(prec_));
    if (e < start_ || e > last_exponent()) return zero_;
    return c_[static_cast<std::size_t>(e - start_)];
  }

  bool is_zero() const noexcept { return c_.empty() && prec_ == kExact; }
  bool is_one() const { return prec_ == kExact && c_.size() == 1 && start_ == 0 && c_[0].is_one(); }

  LaurentSeries zero_like() const { return LaurentSeries(zero_, var_); }
  LaurentSeries one_like() const { return LaurentSeries(0, {zero_.one_like()}, kExact, zero_, var_); }

  LaurentSeries with_var(std::string var) const {
    LaurentSeries r = *this;
    r.var_ = std::move(var);
    return r;
  }

  /// Drop all information at exponents >= prec.
  LaurentSeries truncate(int prec) const {
    LaurentSeries r = *this;
    r.prec_ = std::min(prec_, prec);
    r.trim();
    return r;
  }

  /// Multiply by var^k.
  LaurentSeries shift(int k) const {
    LaurentSeries r = *this;
    r.start_ += k;
    if (r.prec_ != kExact) r.prec_ += k;
    return r;
  }

  LaurentSeries operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    const int prec = std::min(a.prec_, b.prec_);
    if (a.c_.empty() && b.c_.empty()) return LaurentSeries(a.zero_, pick_var(a, b), prec);
    int lo = std::min(a.c_.empty() ? b.start_ : a.start_, b.c_.empty() ? a.start_ : b.start_);
    int hi = std::max(a.last_exponent(), b.last_exponent());
    if (prec != kExact) hi = std::min(hi, prec - 1);
    std::vector<C> out;
    for (int e = lo; e <= hi; ++e) {
      bool ia = !a.c_.empty() && e >= a.start_ && e <= a.last_exponent();
      bool ib = !b.c_.empty() && e >= b.start_ && e <= b.last_exponent();
      if (ia && ib)
        out.push_back(a.c_[static_cast<std::size_t>(e - a.start_)] + b.c_[static_cast<std::size_t>(e - b.start_)]);
      else if (ia)
        out.push_back(a.c_[static_cast<std::size_t>(e - a.start_)]);
      else if (ib)
        out.push_back(b.c_[static_cast<std::size_t>(e - b.start_)]);
      else
        out.push_back(a.zero_);
    }
    return LaurentSeries(lo, std::move(out), prec, a.zero_, pick_var(a, b));
  }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const int va = a.valuation(), vb = b.valuation();
    const int prec = std::min(sat_add(a.prec_, vb), sat_add(b.prec_, va));
    if (a.c_.empty() || b.c_.empty()) return LaurentSeries(a.zero_, pick_var(a, b), prec);
    const int lo = a.start_ + b.start_;
    int hi = a.last_exponent() + b.last_exponent();
    if (prec != kExact) hi = std::min(hi, prec - 1);
    if (hi < lo) return LaurentSeries(a.zero_, pick_var(a, b), prec);
    std::vector<C> out(static_cast<std::size_t>(hi - lo + 1), a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        std::size_t e = i + j;
        if (static_cast<int>(e) > hi - lo) break;
        if (b.c_[j].is_zero()) continue;
        out[e] = out[e] + a.c_[i] * b.c_[j];
      }
    }
    return LaurentSeries(lo, std::move(out), prec, a.zero_, pick_var(a, b));
  }

  friend LaurentSeries operator*(const C& s, const LaurentSeries& a) {
    LaurentSeries r = a;
    for (auto& c : r.c_) c = s * c;
    r.trim();
    return r;
  }

  LaurentSeries& operator+=(const LaurentSeries& b) { return *this = *this + b; }
  LaurentSeries& operator*=(const LaurentSeries& b) { return *this = *this * b; }

  /// Multiplicative inverse. An exact monomial inverts exactly; any other exact
  /// input needs a finite `cap` on the result precision; otherwise the precision is prec - 2 * valuation.
  LaurentSeries inverse(int cap = kExact) const {
    if (c_.empty()) {
      if (prec_ == kExact) fail(ErrorCode::DivisionByZero, "inverse of the zero series");
      fail(ErrorCode::InsufficientPrecision, "inverse of a series with no known nonzero coefficient");
    }
    const int v = start_;
    if (prec_ == kExact && c_.size() == 1) return LaurentSeries(-v, {c_[0].inverse()}, kExact, zero_, var_);
    int prec = std::min(sat_add(prec_, -2 * v), cap);
    if (prec == kExact) fail(ErrorCode::InsufficientPrecision, "inverse of an exact series needs a precision cap");
    const C inv0 = c_[0].inverse();
    const int n = prec + v;  // number of coefficients from -v to prec - 1
    if (n <= 0) return LaurentSeries(zero_, var_, prec);
    std::vector<C> b(static_cast<std::size_t>(n), zero_);
    b[0] = inv0;
    for (int m = 1; m < n; ++m) {
      C acc = zero_;
      for (int k = 1; k <= m && k < static_cast<int>(c_.size()); ++k) {
        if (c_[static_cast<std::size_t>(k)].is_zero()) continue;
        acc = acc + c_[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(m - k)];
      }
      b[static_cast<std::size_t>(m)] = -(inv0 * acc);
    }
    return LaurentSeries(-v, std::move(b), prec, zero_, var_);
  }

  LaurentSeries pow(int e, int cap = kExact) const {
    if (e < 0) return inverse(cap).pow(-e, cap);
    LaurentSeries result = one_like(), base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// d/dvar
  LaurentSeries derivative() const {
    std::vector<C> out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      long e = start_ + static_cast<long>(i);
      out.push_back(Scalar(e, base_field_of(zero_)) * c_[i]);
    }
    return LaurentSeries(start_ - 1, std::move(out), prec_ == kExact ? kExact : prec_ - 1, zero_, var_);
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.prec_ != b.prec_) return false;
    LaurentSeries d = a - b;
    return d.c_.empty();
  }
  friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

  /// Terms `c_k*v^k` in increasing exponent order, then the O-term.
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      int e = start_ + static_cast<int>(i);
      if (!s.empty()) s += " + ";
      std::string cs = coeff_str(c_[i]);
      if (cs.find_first_of("+ ") != std::string::npos) cs = "(" + cs + ")";
      s += cs;
      if (e != 0) s += "*" + var_ + "^" + std::to_string(e);
    }
    if (prec_ != kExact) s += (s.empty() ? "" : " + ") + std::string("O(") + var_ + "^" + std::to_string(prec_) + ")";
    return s.empty() ? "0" : s;
  }

 private:
  static int sat_add(int a, int b) {
    if (a == kExact || b == kExact) return kExact;
    return a + b;
  }
  static std::string pick_var(const LaurentSeries& a, const LaurentSeries& b) {
    if (!a.var_.empty() && !b.var_.empty() && a.var_ != b.var_)
      fail(ErrorCode::VariableMismatch, "series in " + a.var_ + " and " + b.var_);
    return a.var_.empty() ? b.var_ : a.var_;
  }

  void trim() {
    if (prec_ != kExact) {
      int keep = prec_ - start_;
      if (keep <= 0)
        c_.clear();
      else if (static_cast<int>(c_.size()) > keep)
        c_.resize(static_cast<std::size_t>(keep), zero_);
    }
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
      start_ += static_cast<int>(lead);
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) start_ = 0;
  }

  std::string var_;
  int start_ = 0;
  int prec_ = kExact;
  C zero_{};
  std::vector<C> c_;
};

inline BaseField base_field_of(const Scalar& s) { return s.field(); }
inline BaseField base_field_of(const FieldElem& e) { return e.field()->base(); }
template <class C>
BaseField base_field_of(const LaurentSeries<C>& s) {
  return base_field_of(s.zero_sample());
}
template <class C>
std::string coeff_str(const LaurentSeries<C>& s) {
  return s.str();
}
template <class C>
LaurentSeries<C> operator*(const Scalar& c, const LaurentSeries<C>& a) {
  LaurentSeries<C> r = a;
  std::vector<C> out;
  for (const auto& x : a.coeffs()) out.push_back(c * x);
  return LaurentSeries<C>(a.start(), std::move(out), a.precision(), a.zero_sample(), a.var());
}

/// Series over the base field or a residue field of a closed point of a line.
using Series = LaurentSeries<FieldElem>;
/// Iterated series k((v))((u)): outer variable u, coefficients Laurent in v.
using IterSeries = LaurentSeries<LaurentSeries<Scalar>>;
using ScalarSeries = LaurentSeries<Scalar>;

/// Coefficient of u^i v^j in an iterated series.
inline Scalar coefficient(const IterSeries& s, int i, int j) { return s.coeff(i).coeff(j); }

}  // namespace adelic
