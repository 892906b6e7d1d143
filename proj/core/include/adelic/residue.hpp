#pragma once

#include <map>
#include <string>
#include <vector>

#include "adelic/expand.hpp"

namespace adelic {

/// Default cap for automatic precision doubling.
inline constexpr int kDefaultOrderCap = 64;

/// Finitely supported functional at a closed point: coefficient w_m attached
/// to the local monomial m (s^i on a line, (X-a)^i (Y-b)^j on a plane), so
/// that phi(c m) = Tr(c w_m). Zero entries are never stored.
using Tail = std::map<Poly::Mono, FieldElem>;

/// An element of K_X(x). Payload by the dimension of x:
///  generic point: g with the element g dvol (volume form of patch 0);
///  curve C: a representative g of the class of g dX^dY in C's patch, modulo
///    forms regular along C;
///  closed point: a Tail.
class ResidueElement {
 public:
  ResidueElement() = default;
  static ResidueElement generic(const Scheme& X, const RatFunc& g);
  static ResidueElement generic(const Scheme& X, const Form& w);  ///< top form in patch 0
  static ResidueElement curve(const Point& C, const RatFunc& g);
  static ResidueElement closed(const Point& x, Tail tail);
  static ResidueElement zero(const Point& p);

  const Point& point() const noexcept { return p_; }
  int dim() const noexcept { return p_.dim(); }
  int degree() const noexcept { return -p_.dim(); }
  const RatFunc& form_coeff() const;  ///< generic and curve payloads
  const Tail& tail() const;           ///< closed payload
  Form form() const;                  ///< generic: the top form in patch 0

  bool is_zero() const;
  /// Smallest n with m_x^n phi = 0 (closed points).
  int annihilator() const;
  /// Value on a function regular at the closed point (given in patch 0).
  Scalar apply(const RatFunc& a) const;

  ResidueElement operator-() const;
  friend ResidueElement operator+(const ResidueElement& a, const ResidueElement& b);
  friend ResidueElement operator-(const ResidueElement& a, const ResidueElement& b) { return a + (-b); }
  friend ResidueElement operator*(const Scalar& c, const ResidueElement& a);
  friend bool operator==(const ResidueElement& a, const ResidueElement& b);
  friend bool operator!=(const ResidueElement& a, const ResidueElement& b) { return !(a == b); }

  std::string str() const;

 private:
  Point p_;
  RatFunc g_;
  Tail tail_;
};

/// Module action of a function on K_X(x): (phi . a)(m) = phi(a m). The
/// function (patch 0) must be regular at x (along C for curves).
ResidueElement times_function(const ResidueElement& phi, const RatFunc& a);

/// The residue map delta_(x,y) for an immediate specialization y of x.
ResidueElement delta_step(const ResidueElement& phi, const Point& y, int cap = kDefaultOrderCap);
/// delta_xi along a saturated chain starting at phi's point.
ResidueElement delta_chain(const ResidueElement& phi, const Chain& chain, int cap = kDefaultOrderCap);
/// Immediate specializations y where delta_(x,y)(phi) can be nonzero.
std::vector<Point> delta_candidates(const ResidueElement& phi);

/// Graded element of the residue complex: finitely many points with
/// nonzero components. Degree of a component is -dim.
class ResidueComplexElement {
 public:
  ResidueComplexElement() = default;
  explicit ResidueComplexElement(const ResidueElement& e) { add(e); }

  void add(const ResidueElement& e);
  const std::map<Point, ResidueElement>& terms() const noexcept { return terms_; }
  ResidueElement component(const Point& p) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Homogeneous part of degree d.
  ResidueComplexElement part(int degree) const;

  ResidueComplexElement operator-() const;
  friend ResidueComplexElement operator+(const ResidueComplexElement& a, const ResidueComplexElement& b);
  friend ResidueComplexElement operator-(const ResidueComplexElement& a, const ResidueComplexElement& b) { return a + (-b); }
  friend ResidueComplexElement operator*(const Scalar& c, const ResidueComplexElement& a);
  ResidueComplexElement& operator+=(const ResidueComplexElement& b) { return *this = *this + b; }
  friend bool operator==(const ResidueComplexElement& a, const ResidueComplexElement& b) { return (a - b).is_zero(); }
  friend bool operator!=(const ResidueComplexElement& a, const ResidueComplexElement& b) { return !(a == b); }

  std::string str() const;

 private:
  std::map<Point, ResidueElement> terms_;
};

/// delta = (-1)^{q+1} sum delta_(x,y) on components of dimension q.
ResidueComplexElement coboundary_delta(const ResidueComplexElement& phi, int cap = kDefaultOrderCap);

/// Coefficient lambda_{-1,-1} of a * beta (outer u, inner v).
Scalar residue_functional(const IterSeries& beta, const IterSeries& a);

/// lambda_{-1,-1} of a * beta, beta = g ds_1^ds_2 expanded in k((s_2))((s_1))
/// around the origin of the two variables of beta.
Scalar laurent_residue(const Form& beta, const RatFunc& a, int cap = kDefaultOrderCap);

/// Sum over closed-point components of their values at 1.
Scalar residue_sum(const ResidueComplexElement& phi);

}  // namespace adelic
