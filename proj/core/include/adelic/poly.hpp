#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "adelic/extfield.hpp"
#include "adelic/scalar.hpp"
#include "adelic/upoly.hpp"

namespace adelic {

/// Ordered variable names (at most two).
using Vars = std::vector<std::string>;

/// Sparse polynomial in at most two variables over k. Exponent vectors are
/// ordered lexicographically with the first variable most significant.
class Poly {
 public:
  using Mono = std::array<int, 2>;

  Poly() = default;
  Poly(Vars vars, const BaseField& k);

  static Poly constant(const Scalar& c, Vars vars, const BaseField& k);
  static Poly variable(int i, Vars vars, const BaseField& k);
  static Poly monomial(const Scalar& c, Mono m, Vars vars, const BaseField& k);
  /// Embed a univariate polynomial as a polynomial in variable i.
  static Poly from_upoly(const ScalarPoly& p, int i, Vars vars, const BaseField& k);

  const Vars& vars() const noexcept { return vars_; }
  int nvars() const noexcept { return static_cast<int>(vars_.size()); }
  const BaseField& field() const noexcept { return k_; }
  const std::map<Mono, Scalar>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_value() const;  ///< requires is_constant()
  Scalar coeff(Mono m) const;
  int total_degree() const;
  int degree_in(int i) const;
  bool involves(int i) const { return degree_in(i) > 0; }
  Mono lead_mono() const;
  Scalar lead_coeff() const;
  /// Index of the only variable present, -1 if constant, -2 if both occur.
  int sole_variable() const;

  Poly zero_like() const { return Poly(vars_, k_); }
  Poly one_like() const { return constant(Scalar::one(k_), vars_, k_); }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, const Poly& a);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  Poly pow(int e) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  /// Canonical total order (total degree, then terms) for sorted containers.
  friend bool operator<(const Poly& a, const Poly& b);

  Poly monic() const;
  Poly derivative(int i) const;
  Scalar eval(const std::vector<Scalar>& point) const;
  FieldElem eval(const std::vector<FieldElem>& point) const;
  /// Substitute polynomials (in a common variable set) for each variable.
  Poly substitute(const std::vector<Poly>& images) const;
  /// Coefficients as polynomials in the other variable: p = sum c_j * var_i^j.
  std::vector<Poly> coefficients_in(int i) const;
  /// Univariate view; requires the polynomial to involve only variable i.
  ScalarPoly to_upoly(int i) const;
  Poly with_vars(Vars vars) const;  ///< rename, same arity

  std::string str() const;

 private:
  void prune();
  void check_compatible(const Poly& o) const;
  Vars vars_;
  BaseField k_;
  std::map<Mono, Scalar> terms_;
};

/// Division with remainder by a single polynomial (lex order); b divides a iff
/// the remainder vanishes.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
bool divides(const Poly& b, const Poly& a);
/// Exact quotient a / b; throws if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd. Univariate inputs use Euclid; bivariate inputs are treated as
/// polynomials in the second variable over k[first] (primitive remainder
/// sequences with contents handled separately).
Poly poly_gcd(const Poly& a, const Poly& b);

/// Resultant with respect to variable i (a polynomial in the other variable).
Poly resultant(const Poly& a, const Poly& b, int i);

}  // namespace adelic
