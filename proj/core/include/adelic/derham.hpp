#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "adelic/act.hpp"
#include "adelic/form.hpp"

namespace adelic {

struct AdeleFormNode;

/// An element of A_X = sum over (p, q) of A^q_red(Omega^p), possibly of
/// mixed bidegree. Each homogeneous part is an expression whose value at a
/// reduced chain of length q is a rational p-form in patch-0 coordinates,
/// regular at the first point of the chain.
class AdeleForm {
 public:
  using Bidegree = std::pair<int, int>;

  AdeleForm() = default;
  explicit AdeleForm(const Scheme& X) : X_(X) {}

  /// alpha (x) a, bidegree (deg alpha, deg a).
  static AdeleForm term(const Form& alpha, const Adele& a);
  static AdeleForm from_adele(const Adele& a);
  /// alpha (x) 1 for a global form alpha.
  static AdeleForm from_form(const Scheme& X, const Form& alpha);

  const Scheme& scheme() const noexcept { return X_; }
  std::vector<Bidegree> bidegrees() const;
  /// The homogeneous part as an AdeleForm (zero when absent).
  AdeleForm part(int p, int q) const;
  /// Value of the (p, q) part at a chain of length q.
  Form evaluate(int p, const Chain& chain) const;
  bool is_null() const noexcept { return parts_.empty(); }

  friend AdeleForm operator+(const AdeleForm& a, const AdeleForm& b);
  friend AdeleForm operator-(const AdeleForm& a, const AdeleForm& b);
  friend AdeleForm operator*(const Scalar& c, const AdeleForm& a);
  AdeleForm operator-() const;
  /// Alexander-Whitney product with the sign (-1)^{q p'}.
  friend AdeleForm operator*(const AdeleForm& a, const AdeleForm& b);

  void collect_support(std::vector<RatFunc>& functions, std::vector<Point>& points) const;
  std::string str() const;

 private:
  friend AdeleForm d_prime(const AdeleForm& a);
  friend AdeleForm d_double_prime(const AdeleForm& a);
  Scheme X_;
  std::map<Bidegree, std::shared_ptr<const AdeleFormNode>> parts_;
};

/// D' = d on form values.
AdeleForm d_prime(const AdeleForm& a);
/// D'' = (-1)^p times the simplicial coboundary.
AdeleForm d_double_prime(const AdeleForm& a);
/// D = D' + D''.
AdeleForm d_total(const AdeleForm& a);

/// Exact equality of the values of two adele forms on every reduced chain
/// built from the given candidate points.
bool equal_on(const AdeleForm& a, const AdeleForm& b, const std::vector<Point>& candidates);

/// An element of F_X = sum over (p, q) of Hom(Omega^{-p}, K^q). A component
/// at a point x of dimension -q stores the values phi(dx_I) on the monomial
/// basis of Omega^{-p} in the coordinates of x's patch (patch 0 for the
/// generic point), keyed by the variable mask I.
class DualForm {
 public:
  using Values = std::map<int, ResidueElement>;
  using Key = std::pair<int, Point>;  ///< (p, x)

  DualForm() = default;
  explicit DualForm(const Scheme& X) : X_(X) {}

  /// Element of F^{0,q} given by a residue complex element.
  static DualForm from_residue(const Scheme& X, const ResidueComplexElement& phi);
  /// phi(beta) = gamma ^ beta at the generic point, in F^{deg gamma - n, -n}.
  static DualForm generic_form(const Scheme& X, const Form& gamma);
  /// A component with explicit basis values.
  static DualForm component(int p, const Point& x, const Values& values);

  const Scheme& scheme() const noexcept { return X_; }
  const std::map<Key, Values>& components() const noexcept { return c_; }
  bool is_zero() const;
  /// The part of bidegree (p, q).
  DualForm part(int p, int q) const;
  std::vector<std::pair<int, int>> bidegrees() const;

  /// phi_x(beta) for a (-p)-form beta in patch 0, regular at x.
  ResidueElement apply(int p, const Point& x, const Form& beta) const;
  /// phi(beta) summed over the components of bidegree (p, *).
  ResidueComplexElement apply(int p, const Form& beta) const;

  void add(int p, const Point& x, const Values& values);

  friend DualForm operator+(const DualForm& a, const DualForm& b);
  friend DualForm operator-(const DualForm& a, const DualForm& b);
  friend DualForm operator*(const Scalar& c, const DualForm& a);
  DualForm operator-() const;
  friend bool operator==(const DualForm& a, const DualForm& b) { return (a - b).is_zero(); }
  friend bool operator!=(const DualForm& a, const DualForm& b) { return !(a == b); }

  std::string str() const;

 private:
  Scheme X_;
  std::map<Key, Values> c_;
};

/// The transpose of d, F^{p,q} -> F^{p+1,q}: at closed points
/// phi'(beta)(a) = phi(d(a beta)); at curves and the generic point the same
/// after integrating by parts on the form representatives.
DualForm dual_d(const DualForm& phi);
/// D' = (-1)^{p+q+1} Dual(d).
DualForm d_prime(const DualForm& phi);
/// D'' = delta on values.
DualForm d_double_prime(const DualForm& phi, int cap = kDefaultOrderCap);
DualForm d_total(const DualForm& phi, int cap = kDefaultOrderCap);

/// Right action phi . (alpha (x) a): (phi . a)(beta) = (-1)^{(p+p') q'} phi(alpha ^ beta) . a.
DualForm act_forms(const DualForm& phi, const AdeleForm& a, int cap = kDefaultOrderCap);

/// Cousin representative of a closed component of F^{p,0} on a line: the
/// principal part g (p = -1) or the polar 1-form g ds (p = 0) with
/// phi(beta)(a) = Res(a g beta) resp. Res(a g ds), as coefficients of s^{-1-m};
/// and back.
std::vector<FieldElem> principal_part(const DualForm& phi, int p, const Point& x);
DualForm from_principal_part(int p, const Point& x, const std::vector<FieldElem>& polar);

}  // namespace adelic
