#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "adelic/p1map.hpp"
#include "adelic/scheme.hpp"

namespace adelic {

struct AdeleNode;

/// A degree-q element of the reduced adele complex, finitely presented as an
/// expression: explicit chain -> value tables, global functions, cofaces
/// d^i, sums, scalings, Alexander-Whitney products and pullbacks along finite
/// maps. Values are rational representatives (patch-0 coordinates) of
/// elements of the completions O_{X,xi}; a value at a chain is regular at the
/// chain's first point.
class Adele {
 public:
  Adele() = default;

  /// Explicit table; every chain must be reduced of length q.
  static Adele explicit_values(const Scheme& X, int q, const std::map<Chain, RatFunc>& values);
  /// Degree-0 adele r at every point; r must be a global section of O_X.
  static Adele global(const Scheme& X, const RatFunc& r);
  static Adele one(const Scheme& X);
  static Adele zero(const Scheme& X, int q);
  /// (d^i b)(xi) = b(face_i xi).
  static Adele coface(int i, const Adele& b);
  /// f^* b for a finite self-map of the projective line.
  static Adele pullback(const P1Map& f, const Adele& b);

  const Scheme& scheme() const;
  int degree() const;
  bool is_null() const noexcept { return !node_; }

  /// Value at a chain of length q; zero off reduced chains.
  RatFunc evaluate(const Chain& chain) const;
  /// Simplicial coboundary sum (-1)^i d^i.
  Adele coboundary() const;

  friend Adele operator+(const Adele& a, const Adele& b);
  friend Adele operator-(const Adele& a, const Adele& b);
  friend Adele operator*(const Scalar& c, const Adele& a);
  Adele operator-() const;
  /// Alexander-Whitney product.
  friend Adele operator*(const Adele& a, const Adele& b);

  /// Rational functions occurring as values and points occurring in explicit
  /// chains; the pole loci of the former together with the latter bound the
  /// support of the adele.
  void collect_support(std::vector<RatFunc>& functions, std::vector<Point>& points) const;

  std::string str() const;

 private:
  explicit Adele(std::shared_ptr<const AdeleNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const AdeleNode> node_;
};

/// Literal syntax: "adele{ (generic,pt(t=0)): 1/t ; symb: d1(1) }". Entries
/// are separated by ';'. An explicit entry maps a chain to a rational
/// function; "symb:" entries are nested cofaces d<i>(...) around a global
/// function; "global:" entries are degree-0 global functions.
Adele parse_adele(const Scheme& X, const std::string& text);

/// Whether r lies in the local ring at p (no pole along a curve, defined at
/// a closed point).
bool regular_at(const RatFunc& r, const Point& p);

/// Ordered chain enumeration helpers for tests and the verification suites.
std::vector<Chain> saturated_chains_from(const Point& x, int length, const std::vector<Point>& candidates);

}  // namespace adelic
