#include "adelic/p1map.hpp"

#include <algorithm>

#include "adelic/parse.hpp"

namespace adelic {

namespace {

void require_p1(const Scheme& X) {
  if (X.kind() != SchemeKind::ProjectiveLine) fail(ErrorCode::Unsupported, "finite maps are self-maps of the projective line");
}

Point point_of(const Scheme& X, const FieldElem& b) {
  if (b.is_base()) return Point::rational(X, {b.base_value()});
  return Point::closed_line(X, b.minimal_polynomial());
}

}  // namespace

P1Map P1Map::power(const Scheme& X, int k) {
  require_p1(X);
  if (k < 1) fail(ErrorCode::Unsupported, "power maps need k >= 1");
  std::int64_t p = X.base().characteristic();
  if (p != 0 && k % p == 0) fail(ErrorCode::Inseparable, "t^" + std::to_string(k) + " is inseparable in characteristic " + std::to_string(p));
  P1Map f;
  f.X_ = X;
  f.power_ = k;
  f.phi_ = RatFunc(Poly::variable(0, X.patch_vars(0), X.base()).pow(k));
  return f;
}

P1Map P1Map::mobius(const Scheme& X, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  require_p1(X);
  if ((a * d - b * c).is_zero()) fail(ErrorCode::Unsupported, "degenerate Moebius map");
  const Vars& v = X.patch_vars(0);
  const BaseField& k = X.base();
  P1Map f;
  f.X_ = X;
  f.m_ = {a, b, c, d};
  Poly t = Poly::variable(0, v, k);
  if (c.is_zero()) {
    f.phi_ = RatFunc(d.inverse() * (a * t + Poly::constant(b, v, k)));
  } else {
    Poly num = c.inverse() * (a * t + Poly::constant(b, v, k));
    f.phi_ = RatFunc(num, {{t + Poly::constant(d / c, v, k), 1}});
  }
  return f;
}

P1Map P1Map::parse(const Scheme& X, const std::string& text) {
  require_p1(X);
  RatFunc r = parse_ratfunc(text, X.patch_vars(0), X.base());
  const BaseField& k = X.base();
  Poly num = r.num(), den = r.den_poly();
  if (den.is_constant() && num.terms().size() == 1 && num.total_degree() >= 2 && num.lead_coeff().is_one())
    return power(X, num.total_degree());
  if (num.total_degree() > 1 || den.total_degree() > 1) fail(ErrorCode::Parse, "maps are t^k or Moebius: " + text);
  auto co = [&](const Poly& p, int e) { return p.coeff({e, 0}); };
  (void)k;
  return mobius(X, co(num, 1), co(num, 0), co(den, 1), co(den, 0));
}

RatFunc P1Map::pullback(const RatFunc& f) const { return f.substitute({phi_}); }

Point P1Map::image(const Point& x) const {
  if (x.is_generic()) return x;
  const BaseField& k = X_.base();
  if (x.patch() == 1) {
    if (is_power() || m_[2].is_zero()) return x;
    return Point::rational(X_, {m_[0] / m_[2]});
  }
  FieldElem alpha = x.root();
  if (is_power()) return point_of(X_, alpha.pow(power_));
  FieldElem den = m_[2] * alpha + FieldElem(alpha.field(), m_[3]);
  if (den.is_zero()) return Point::infinity(X_);
  (void)k;
  return point_of(X_, (m_[0] * alpha + FieldElem(alpha.field(), m_[1])) * den.inverse());
}

Chain P1Map::image(const Chain& c) const {
  std::vector<Point> pts;
  for (const auto& p : c.points()) pts.push_back(image(p));
  return Chain(std::move(pts));
}

std::vector<Point> P1Map::preimages(const Point& y) const {
  if (y.is_generic()) return {y};
  if (y.patch() == 1) {
    if (is_power() || m_[2].is_zero()) return {y};
    return {Point::rational(X_, {-m_[3] / m_[2]})};
  }
  const Vars& v = X_.patch_vars(0);
  RatFunc m(Poly::from_upoly(y.minpoly(), 0, v, X_.base()));
  Poly N = pullback(m).num();
  std::vector<Point> out;
  for (const auto& f : factor_poly(N).second) out.push_back(Point::closed_line(X_, f.poly.to_upoly(0)));
  Point inf = Point::infinity(X_);
  if (image(inf) == y) out.push_back(inf);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

P1Map P1Map::inverse() const {
  if (is_power()) fail(ErrorCode::Unsupported, "power maps are not invertible");
  return mobius(X_, m_[3], -m_[1], -m_[2], m_[0]);
}

std::string P1Map::str() const {
  if (is_power()) return "t^" + std::to_string(power_);
  return phi_.str();
}

}  // namespace adelic
