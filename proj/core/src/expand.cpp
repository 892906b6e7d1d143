#include "adelic/expand.hpp"

#include <algorithm>

namespace adelic {

namespace {

using FPoly = UPoly<FieldElem>;

// P(root + s) for a polynomial in variable 0.
FPoly taylor_shift(const Poly& p, const FieldElem& root) {
  FieldElem z = root.zero_like();
  FPoly shifted({root, root.one_like()}, z);
  int deg = p.nvars() == 0 ? 0 : p.degree_in(0);
  std::vector<FieldElem> c(static_cast<std::size_t>(deg) + 1, z);
  for (const auto& [m, v] : p.terms()) c[static_cast<std::size_t>(m[0])] = FieldElem(root.field(), v);
  FPoly acc(z);
  for (int i = deg; i >= 0; --i) acc = acc * shifted + FPoly::constant(c[static_cast<std::size_t>(i)]);
  return acc;
}

Series to_series(const FPoly& p, const FieldElem& z) {
  return Series(0, p.coeffs(), Series::kExact, z, "s");
}

}  // namespace

Series expand_local(const RatFunc& g, const Point& x, int order) {
  if (!x.is_closed() || x.scheme().dim() != 1) fail(ErrorCode::PlaceNotOnScheme, "line expansions need a closed point of a line");
  FieldElem root = x.root();
  FieldElem z = root.zero_like();
  FPoly num = taylor_shift(g.num(), root);
  FPoly den = taylor_shift(g.den_poly(), root);
  if (den.is_zero()) fail(ErrorCode::Undefined, "denominator vanishes identically");
  int v = 0;
  while (den.coeff(v).is_zero()) ++v;
  std::vector<FieldElem> unit(den.coeffs().begin() + v, den.coeffs().end());
  Series U(0, unit, Series::kExact, z, "s");
  Series inv = U.inverse(std::max(order + v, 1));
  return (to_series(num, z) * inv).shift(-v).truncate(order);
}

Series expand_at_place(const Scheme& X, const RatFunc& f, const Point& x, int order) {
  if (x.scheme() != X) fail(ErrorCode::PlaceNotOnScheme, x.str() + " is not a point of " + X.str());
  return expand_local(X.function_to_patch(f, 0, x.patch()), x, order);
}

// ---------------------------------------------------------------- plane

IterSeries iter_constant(const Scalar& c, int nu, int nv) {
  ScalarSeries zero(Scalar::zero(c.field()), "v");
  ScalarSeries inner(0, std::vector<Scalar>{c}, nv, Scalar::zero(c.field()), "v");
  return IterSeries(0, std::vector<ScalarSeries>{inner}, nu, zero, "u");
}

IterSeries clip(const IterSeries& s, int nu, int nv) {
  IterSeries t = s.truncate(nu);
  std::vector<ScalarSeries> c;
  for (const auto& x : t.coeffs()) c.push_back(x.truncate(nv));
  return IterSeries(t.start(), std::move(c), t.precision(), t.zero_sample(), "u");
}

namespace {

IterSeries iter_u(const BaseField& k, int nu, int nv) { return iter_constant(Scalar::one(k), nu, nv).shift(1); }

IterSeries iter_v(const BaseField& k, int nu, int nv) {
  ScalarSeries zero(Scalar::zero(k), "v");
  ScalarSeries inner(1, std::vector<Scalar>{Scalar::one(k)}, nv, Scalar::zero(k), "v");
  return IterSeries(0, std::vector<ScalarSeries>{inner}, nu, zero, "u");
}

}  // namespace

IterSeries iter_eval(const Poly& p, const IterSeries& X, const IterSeries& Y, int nu, int nv) {
  const BaseField& k = p.field();
  int dx = p.nvars() > 0 ? p.degree_in(0) : 0;
  int dy = p.nvars() > 1 ? p.degree_in(1) : 0;
  std::vector<IterSeries> px{iter_constant(Scalar::one(k), nu, nv)}, py{px[0]};
  for (int i = 1; i <= dx; ++i) px.push_back(clip(px.back() * X, nu, nv));
  for (int i = 1; i <= dy; ++i) py.push_back(clip(py.back() * Y, nu, nv));
  IterSeries acc = clip(iter_constant(Scalar::zero(k), nu, nv), nu, nv);
  for (const auto& [m, c] : p.terms())
    acc = acc + c * (px[static_cast<std::size_t>(m[0])] * py[static_cast<std::size_t>(m[1])]);
  return clip(acc, nu, nv);
}

PlaneFrame make_frame(const Poly& f, const std::vector<Scalar>& point, int nu, int nv) {
  if (f.nvars() != 2 || point.size() != 2) fail(ErrorCode::CoordinateFailure, "plane frames need two coordinates");
  if (!f.eval(point).is_zero()) fail(ErrorCode::CoordinateFailure, "point is not on the curve");
  const BaseField& k = f.field();
  Poly fx = f.derivative(0), fy = f.derivative(1);
  bool first = !fy.eval(point).is_zero();
  if (!first && fx.eval(point).is_zero()) fail(ErrorCode::CoordinateFailure, "curve " + f.str() + " is singular at the point");
  PlaneFrame F{f.monic(), point, first, nu, nv, {}, {}, {}};
  IterSeries u = iter_u(k, nu, nv), v = iter_v(k, nu, nv);
  IterSeries a = iter_constant(point[0], nu, nv), b = iter_constant(point[1], nu, nv);
  // Newton iteration for the remaining coordinate w with f = u; each step
  // doubles the (u, v)-adic accuracy.
  const Poly& fw = first ? fy : fx;
  IterSeries w = clip(iter_constant(Scalar::zero(k), nu, nv), nu, nv);
  int steps = 1;
  while ((1 << steps) <= nu + nv) ++steps;
  for (int s = 0; s <= steps; ++s) {
    IterSeries X = first ? a + v : a + w;
    IterSeries Y = first ? b + w : b + v;
    IterSeries r = iter_eval(F.f, X, Y, nu, nv) - u;
    IterSeries d = iter_eval(fw, X, Y, nu, nv);
    Scalar lc = f.lead_coeff();
    // F.f is monic: f = lc * F.f, so d(F.f)/dw = fw / lc.
    IterSeries di = clip((lc.inverse() * d).inverse(nu), nu, nv);
    w = clip(w - r * di, nu, nv);
  }
  F.X = clip(first ? a + v : a + w, nu, nv);
  F.Y = clip(first ? b + w : b + v, nu, nv);
  Scalar lc = f.lead_coeff();
  IterSeries d = clip(lc.inverse() * iter_eval(fw, F.X, F.Y, nu, nv), nu, nv);
  IterSeries di = clip(d.inverse(nu), nu, nv);
  // du^dv = -(df/dY) dX^dY for v = X - a, and (df/dX) dX^dY for v = Y - b.
  F.jac = first ? -di : di;
  return F;
}

PlaneFrame make_frame(const Point& curve, const Point& x, int nu, int nv) {
  if (!curve.is_curve() || !x.is_closed()) fail(ErrorCode::CoordinateFailure, "frames need a curve and a closed point");
  if (!specializes(curve, x)) fail(ErrorCode::InvalidChain, x.str() + " is not on " + curve.str());
  return make_frame(curve_in_patch(curve, x.patch()), x.coords(), nu, nv);
}

IterSeries iter_expand(const PlaneFrame& F, const RatFunc& g) {
  const int nu = F.nu, nv = F.nv;
  IterSeries acc = iter_eval(g.num(), F.X, F.Y, nu, nv);
  int upole = 0;
  for (const auto& d : g.den()) {
    if (d.poly == F.f) {
      upole += d.mult;
      continue;
    }
    IterSeries D = iter_eval(d.poly, F.X, F.Y, nu, nv);
    IterSeries Di = clip(D.inverse(nu), nu, nv);
    for (int m = 0; m < d.mult; ++m) acc = clip(acc * Di, nu, nv);
  }
  return acc.shift(-upole);
}

IterSeries iter_expand_top(const PlaneFrame& F, const RatFunc& g) {
  IterSeries e = iter_expand(F, g);
  return e * F.jac;
}

IterSeries local_monomial(const PlaneFrame& F, int i, int j) {
  const BaseField& k = F.f.field();
  IterSeries one = iter_constant(Scalar::one(k), F.nu, F.nv);
  IterSeries dx = F.X - iter_constant(F.point[0], F.nu, F.nv);
  IterSeries dy = F.Y - iter_constant(F.point[1], F.nu, F.nv);
  IterSeries acc = one;
  for (int a = 0; a < i; ++a) acc = clip(acc * dx, F.nu, F.nv);
  for (int b = 0; b < j; ++b) acc = clip(acc * dy, F.nu, F.nv);
  return acc;
}

// ---------------------------------------------------------------- Taylor

namespace {

Poly truncate_total(const Poly& p, int n) {
  Poly out = p.zero_like();
  for (const auto& [m, c] : p.terms())
    if (m[0] + m[1] < n) out += Poly::monomial(c, m, p.vars(), p.field());
  return out;
}

}  // namespace

Poly taylor_at(const RatFunc& g, const std::vector<Scalar>& point, int n) {
  const Vars& vars = g.vars();
  const BaseField& k = g.field();
  std::vector<Poly> shift;
  for (std::size_t i = 0; i < point.size(); ++i)
    shift.push_back(Poly::variable(static_cast<int>(i), vars, k) + Poly::constant(point[i], vars, k));
  Poly num = g.num().nvars() == 0 ? g.num() : g.num().substitute(shift);
  Poly den = g.den_poly().nvars() == 0 ? g.den_poly() : g.den_poly().substitute(shift);
  Scalar c0 = den.coeff({0, 0});
  if (c0.is_zero()) fail(ErrorCode::Undefined, "function is not regular at the point");
  if (n <= 0) return num.zero_like();
  // 1/den = c0^{-1} sum_k e^k with e = 1 - den/c0, e in the maximal ideal.
  Poly e = num.one_like() - c0.inverse() * den;
  Poly inv = num.one_like(), term = num.one_like();
  for (int i = 1; i < n; ++i) {
    term = truncate_total(term * e, n);
    if (term.is_zero()) break;
    inv += term;
  }
  return truncate_total(c0.inverse() * truncate_total(num, n) * inv, n);
}

}  // namespace adelic
