#pragma once

#include <string>
#include <vector>

#include "adelic/scheme.hpp"

namespace adelic {

/// Finite self-map of the projective line, t -> phi(t): either t^k or a
/// Moebius transformation (a t + b)/(c t + d).
class P1Map {
 public:
  static P1Map power(const Scheme& X, int k);
  static P1Map mobius(const Scheme& X, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);
  /// "t^2", "(2*t+1)/(t-1)" and similar.
  static P1Map parse(const Scheme& X, const std::string& text);

  const Scheme& scheme() const noexcept { return X_; }
  bool is_power() const noexcept { return power_ > 0; }
  int exponent() const noexcept { return power_; }
  const std::vector<Scalar>& matrix() const noexcept { return m_; }  ///< a, b, c, d
  int degree() const noexcept { return is_power() ? power_ : 1; }
  /// phi as a rational function of t.
  const RatFunc& function() const noexcept { return phi_; }

  /// f(s) -> f(phi(t)), both in the patch-0 coordinate.
  RatFunc pullback(const RatFunc& f) const;
  Point image(const Point& x) const;
  Chain image(const Chain& c) const;
  std::vector<Point> preimages(const Point& y) const;
  /// The inverse Moebius map.
  P1Map inverse() const;

  std::string str() const;

 private:
  Scheme X_;
  int power_ = 0;
  std::vector<Scalar> m_;
  RatFunc phi_;
};

}  // namespace adelic
