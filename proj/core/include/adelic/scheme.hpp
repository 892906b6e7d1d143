#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adelic/extfield.hpp"
#include "adelic/form.hpp"
#include "adelic/ratfunc.hpp"

namespace adelic {

enum class SchemeKind { AffineLine, ProjectiveLine, AffinePlane, ProjectivePlane };

/// A catalog entry over a base field. Projective entries are covered by
/// coordinate patches: the line by t and s = 1/t, the plane by (x, y),
/// (y/x, 1/x) and (x/y, 1/y) in homogeneous terms [x:y:1].
class Scheme {
 public:
  Scheme() = default;
  Scheme(SchemeKind kind, const BaseField& k) : kind_(kind), k_(k) {}
  /// Literals like "P1/Q", "A2/F5".
  static Scheme parse(const std::string& literal);

  SchemeKind kind() const noexcept { return kind_; }
  const BaseField& base() const noexcept { return k_; }
  int dim() const noexcept { return (kind_ == SchemeKind::AffineLine || kind_ == SchemeKind::ProjectiveLine) ? 1 : 2; }
  bool is_projective() const noexcept { return kind_ == SchemeKind::ProjectiveLine || kind_ == SchemeKind::ProjectivePlane; }
  int num_patches() const noexcept;
  const Vars& patch_vars(int j) const;
  std::string str() const;

  RatFunc coordinate(int j, int i) const;
  /// Patch-`from` coordinates as rational functions on patch `to`.
  std::vector<RatFunc> coords_in(int from, int to) const;
  RatFunc function_to_patch(const RatFunc& f, int from, int to) const;
  Form form_to_patch(const Form& w, int from, int to) const;

  friend bool operator==(const Scheme& a, const Scheme& b) { return a.kind_ == b.kind_ && a.k_ == b.k_; }
  friend bool operator!=(const Scheme& a, const Scheme& b) { return !(a == b); }

 private:
  SchemeKind kind_ = SchemeKind::AffineLine;
  BaseField k_;
};

enum class PointKind { Generic, Curve, Closed };

/// A scheme point: the generic point, an irreducible curve of a plane, or a
/// closed point. Closed points of lines carry a monic minimal polynomial in
/// their patch coordinate (non-rational points allowed); closed points of
/// planes are rational. Every point lives in the lowest patch containing it.
class Point {
 public:
  Point() = default;
  static Point generic(const Scheme& X);
  static Point curve(const Scheme& X, const Poly& f, int patch = 0);
  static Point rational(const Scheme& X, const std::vector<Scalar>& coords, int patch = 0);
  static Point closed_line(const Scheme& X, const ScalarPoly& minpoly, int patch = 0);
  static Point infinity(const Scheme& X);
  /// Literals: "generic", "pt(t=0)", "pt(inf)", "pt(x=1,y=2)", "pt(t^2+1=0)", "curve(y^2-x^3)".
  static Point parse(const Scheme& X, const std::string& literal);

  const Scheme& scheme() const noexcept { return X_; }
  PointKind kind() const noexcept { return kind_; }
  int dim() const noexcept;
  int patch() const noexcept { return patch_; }
  bool is_generic() const noexcept { return kind_ == PointKind::Generic; }
  bool is_closed() const noexcept { return kind_ == PointKind::Closed; }
  bool is_curve() const noexcept { return kind_ == PointKind::Curve; }

  /// Curve equation (monic) in the point's patch.
  const Poly& curve_poly() const;
  /// Line closed point: minimal polynomial in the patch coordinate.
  const ScalarPoly& minpoly() const;
  /// Rational closed point: coordinates in the point's patch.
  const std::vector<Scalar>& coords() const;
  bool is_rational() const;
  /// Residue field (closed points of lines), trivial for rational points.
  ExtFieldPtr residue_field() const;
  /// The root of the minimal polynomial in the residue field.
  FieldElem root() const;

  std::string str() const;

  friend bool operator==(const Point& a, const Point& b);
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b);

 private:
  Scheme X_;
  PointKind kind_ = PointKind::Generic;
  int patch_ = 0;
  Poly curve_;
  ScalarPoly minpoly_;
  std::vector<Scalar> coords_;
  ExtFieldPtr field_;
};

/// Whether the point lies in patch j, and its data there.
bool in_patch(const Point& p, int j);
std::vector<Scalar> coords_in_patch(const Point& p, int j);
Poly curve_in_patch(const Point& c, int j);
ScalarPoly minpoly_in_patch(const Point& p, int j);

/// b lies in the closure of a.
bool specializes(const Point& a, const Point& b);

/// A chain (x_0, ..., x_q) with x_{i+1} in the closure of x_i.
class Chain {
 public:
  Chain() = default;
  explicit Chain(std::vector<Point> pts);  ///< validates specialization

  const std::vector<Point>& points() const noexcept { return pts_; }
  const Point& operator[](std::size_t i) const { return pts_.at(i); }
  const Point& front() const { return pts_.front(); }
  const Point& back() const { return pts_.back(); }
  int length() const noexcept { return static_cast<int>(pts_.size()) - 1; }
  std::string str() const;

  friend bool operator==(const Chain& a, const Chain& b) { return a.pts_ == b.pts_; }
  friend bool operator!=(const Chain& a, const Chain& b) { return !(a == b); }
  friend bool operator<(const Chain& a, const Chain& b) { return a.pts_ < b.pts_; }

 private:
  std::vector<Point> pts_;
};

bool is_saturated(const Chain& c);
bool is_reduced(const Chain& c);
Chain face(const Chain& c, int i);
Chain concat(const Chain& a, const Chain& b);
/// Sub-chain of points [from, to].
Chain segment(const Chain& c, int from, int to);

/// Rational common zeros of a system of polynomials in two variables; raises
/// NonRationalPoint when a common zero has irrational coordinates.
std::vector<std::vector<Scalar>> common_zeros(const std::vector<Poly>& polys);

/// Codimension-one points along which some coefficient of w (given in patch
/// 0) has a pole, in any patch: closed points of a line, curves of a plane.
std::vector<Point> pole_divisors(const Scheme& X, const Form& w);
/// Points of a curve meeting any of `others`, plus its singular points.
std::vector<Point> special_points(const Point& curve, const std::vector<Point>& others);
/// Singular points of a plane curve (rational).
std::vector<Point> singular_points(const Point& curve);

/// Pole support of a top form: poles on a line; on a plane the pole curves
/// together with their pairwise intersections and singular points.
std::vector<Point> pole_support(const Scheme& X, const Form& w);
std::vector<Point> pole_support(const Scheme& X, const RatFunc& f);

}  // namespace adelic
