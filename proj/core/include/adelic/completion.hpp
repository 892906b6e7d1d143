#pragma once

#include <optional>
#include <variant>

#include "adelic/expand.hpp"

namespace adelic {

/// Local coordinates of a saturated chain. On a line the uniformizer v at the
/// closed point; on a plane the pair (v, u) of the chain's frame.
struct LocalCoordinates {
  Chain chain;
  std::optional<PlaneFrame> frame;  ///< chains (C, x) and (eta, C, x)

  /// "v = t", "v = x - 1, u = y^2 - x^3" and similar.
  std::string str() const;
};

/// An element of the completion O_{X,xi} along a saturated chain.
///
/// The expansion is a Laurent series in s on a line, an iterated series in
/// (u, v) for chains ending in a flag (C, x), and a Taylor polynomial in the
/// shifted coordinates for the length-0 chain at a plane point.
class CompletionElement {
 public:
  using Expansion = std::variant<Series, IterSeries, Poly>;

  CompletionElement(LocalCoordinates coords, std::optional<RatFunc> rep, Expansion e, int order);

  const Chain& chain() const noexcept { return coords_.chain; }
  const LocalCoordinates& coordinates() const noexcept { return coords_; }
  const std::optional<RatFunc>& representative() const noexcept { return rep_; }
  const Expansion& expansion() const noexcept { return exp_; }
  int order() const noexcept { return order_; }

  const Series& series() const;
  const IterSeries& iterated() const;
  const Poly& taylor() const;

  /// Product to the smaller of the two orders; both must live on one chain.
  CompletionElement operator*(const CompletionElement& o) const;
  /// Agreement of the expansions to the common order.
  bool agrees_with(const CompletionElement& o) const;

  std::string str() const;

 private:
  LocalCoordinates coords_;
  std::optional<RatFunc> rep_;
  Expansion exp_;
  int order_;
};

/// Coordinates for a supported chain; raises CoordinateFailure when the
/// chain's last point is singular on its curve or not rational on a plane.
LocalCoordinates local_coordinates(const Chain& chain, int order);

/// Expansion of f (patch 0) along the chain, exact below the order.
CompletionElement complete(const RatFunc& f, const Chain& chain, int order);
/// The intensification O_{X,(x)} -> O_{X,xi} for a chain starting at x.
CompletionElement coface_minus(const CompletionElement& e, const Chain& chain);
/// The morphism O_{X,(y)} -> O_{X,xi} for a chain ending at y.
CompletionElement coface_plus(const CompletionElement& e, const Chain& chain);

}  // namespace adelic
