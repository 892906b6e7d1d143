#pragma once

#include <vector>

#include "adelic/scheme.hpp"
#include "adelic/series.hpp"

namespace adelic {

/// Laurent expansion of g (a function in the patch coordinate of x) at a
/// closed point x of a line, in s = (patch coordinate) - root, coefficients
/// in the residue field. Exact for exponents < order.
Series expand_local(const RatFunc& g, const Point& x, int order);

/// Same for a function given in patch 0 (at infinity the uniformizer is 1/t).
Series expand_at_place(const Scheme& X, const RatFunc& f, const Point& x, int order);

/// Local coordinates (v, u) at a smooth rational point of a plane curve f = 0:
/// u = f and v is X - a when df/dY does not vanish at the point, Y - b
/// otherwise. X and Y are the patch coordinates as iterated series (outer u,
/// inner v) and jac relates the volume forms: dX^dY = jac du^dv.
struct PlaneFrame {
  Poly f;
  std::vector<Scalar> point;
  bool v_is_first;
  int nu = 0;
  int nv = 0;
  IterSeries X, Y;
  IterSeries jac;
};

PlaneFrame make_frame(const Poly& f, const std::vector<Scalar>& point, int nu, int nv);
/// Frame for the flag (C, x) in the canonical patch of x.
PlaneFrame make_frame(const Point& curve, const Point& x, int nu, int nv);

/// Iterated expansion of g (in the frame's patch variables). Denominator
/// factors equal to the curve equation map to powers of u exactly.
IterSeries iter_expand(const PlaneFrame& F, const RatFunc& g);
/// Expansion of the coefficient of g dX^dY with respect to du^dv.
IterSeries iter_expand_top(const PlaneFrame& F, const RatFunc& g);
/// Iterated series of the local monomial (X-a)^i (Y-b)^j.
IterSeries local_monomial(const PlaneFrame& F, int i, int j);

/// Taylor polynomial of g at a rational plane point in the shifted coordinates
/// (X-a, Y-b), all terms of total degree < n. g must be regular at the point.
Poly taylor_at(const RatFunc& g, const std::vector<Scalar>& point, int n);

/// Iterated series constructors (outer u with precision nu, inner v with nv).
IterSeries iter_constant(const Scalar& c, int nu, int nv);
IterSeries clip(const IterSeries& s, int nu, int nv);
/// p(X, Y) for a bivariate polynomial, clipped to (nu, nv).
IterSeries iter_eval(const Poly& p, const IterSeries& X, const IterSeries& Y, int nu, int nv);

}  // namespace adelic
