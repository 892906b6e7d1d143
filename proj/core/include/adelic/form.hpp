#pragma once

#include <map>
#include <string>

#include "adelic/ratfunc.hpp"

namespace adelic {

/// Rational differential form  sum_I f_I dx_I  over a coordinate set. The
/// basis index I is a bitmask over the variables (bit i = d var_i), and each
/// dx_I is the wedge of its differentials in increasing variable order.
class Form {
 public:
  Form() = default;
  Form(Vars vars, const BaseField& k, int degree);

  static Form function(const RatFunc& f);
  static Form basis(int mask, const Vars& vars, const BaseField& k);
  /// f * d var_0 ^ ... ^ d var_{n-1}
  static Form top(const RatFunc& f);

  const Vars& vars() const noexcept { return vars_; }
  const BaseField& field() const noexcept { return k_; }
  int degree() const noexcept { return degree_; }
  int nvars() const noexcept { return static_cast<int>(vars_.size()); }
  const std::map<int, RatFunc>& coeffs() const noexcept { return c_; }
  RatFunc coeff(int mask) const;
  /// Coefficient of the volume form (degree must equal the dimension).
  RatFunc top_coeff() const { return coeff((1 << nvars()) - 1); }
  void set(int mask, const RatFunc& f);

  bool is_zero() const noexcept { return c_.empty(); }

  Form operator-() const;
  friend Form operator+(const Form& a, const Form& b);
  friend Form operator-(const Form& a, const Form& b);
  friend Form operator*(const RatFunc& f, const Form& a);
  friend Form operator*(const Scalar& c, const Form& a);
  Form& operator+=(const Form& b) { return *this = *this + b; }

  friend bool operator==(const Form& a, const Form& b);
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  std::string str() const;

 private:
  Vars vars_;
  BaseField k_;
  int degree_ = 0;
  std::map<int, RatFunc> c_;
};

int popcount(int mask);
/// Sign of dx_I ^ dx_J relative to dx_{I|J}; 0 when I and J overlap.
int wedge_sign(int I, int J);

Form wedge(const Form& a, const Form& b);
Form exterior_d(const Form& a);

}  // namespace adelic
