#pragma once

#include <string>
#include <vector>

#include "adelic/poly.hpp"

namespace adelic {

/// One flagged-irreducible denominator component.
struct DenFactor {
  Poly poly;  ///< monic (leading lex coefficient 1)
  int mult;   ///< >= 1

  friend bool operator==(const DenFactor&, const DenFactor&) = default;
};

/// Rational function num / prod f_i^{m_i}. The denominator is kept factored;
/// factors are monic, distinct and sorted, and the numerator is never divisible
/// by a factor that still occurs in the denominator.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const Poly& num);  // NOLINT: polynomials are rational functions
  /// With `verify`, factors are checked pairwise coprime (by gcd) and
  /// univariate factors over F_p are checked irreducible.
  RatFunc(const Poly& num, std::vector<DenFactor> den, bool verify = false);

  static RatFunc constant(const Scalar& c, const Vars& vars, const BaseField& k);

  const Poly& num() const noexcept { return num_; }
  const std::vector<DenFactor>& den() const noexcept { return den_; }
  Poly den_poly() const;
  const Vars& vars() const noexcept { return num_.vars(); }
  const BaseField& field() const noexcept { return num_.field(); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }

  RatFunc zero_like() const { return RatFunc(num_.zero_like()); }
  RatFunc one_like() const { return RatFunc(num_.one_like()); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const Scalar& c, const RatFunc& a);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc pow(int e) const;

  /// Divide by an irreducible polynomial to the given power.
  RatFunc div_by(const Poly& factor, int mult = 1) const;
  /// Inverse; the numerator is factored (univariate) or must be constant.
  RatFunc inverse() const;
  /// Inverse treating the numerator's non-constant part as one irreducible
  /// factor (used for images of irreducible polynomials under automorphisms).
  RatFunc inverse_trusted() const;
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  /// a/b equals c/d iff ad - bc = 0.
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc derivative(int i) const;
  Scalar eval(const std::vector<Scalar>& point) const;
  FieldElem eval(const std::vector<FieldElem>& point) const;
  bool is_defined_at(const std::vector<Scalar>& point) const;

  /// Order along an irreducible factor f: -mult if f is a denominator factor,
  /// otherwise the multiplicity of f in the numerator.
  int valuation(const Poly& f) const;
  bool is_regular_along(const Poly& f) const;

  /// Substitute rational functions (in a common variable set) for each
  /// variable. Images of denominator factors are refactored: univariate images
  /// by factor_univariate, bivariate ones by splitting off known denominator
  /// factors of the images and trusting the remainder as irreducible.
  RatFunc substitute(const std::vector<RatFunc>& images) const;

  std::string str() const;

 private:
  void normalize();
  Poly num_;
  std::vector<DenFactor> den_;
};

/// Factor a polynomial into (unit, flagged-irreducible factors). Univariate
/// inputs are factored exactly where possible; bivariate inputs are split by
/// trial division against `known` and the rest is trusted irreducible.
std::pair<Scalar, std::vector<DenFactor>> factor_poly(const Poly& p, const std::vector<Poly>& known = {});

}  // namespace adelic
