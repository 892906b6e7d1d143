#include "adelic/completion.hpp"

#include <algorithm>

#include "adelic/adele.hpp"

namespace adelic {

namespace {

Poly truncate_total(const Poly& p, int n) {
  Poly out = p.zero_like();
  for (const auto& [m, c] : p.terms()) {
    int d = 0;
    for (int e : m) d += e;
    if (d < n) out += Poly::monomial(c, m, p.vars(), p.field());
  }
  return out;
}

// Equality of the coefficients both series know exactly.
template <class C>
bool same_known(const LaurentSeries<C>& a, const LaurentSeries<C>& b);

bool same_coeff(const FieldElem& a, const FieldElem& b) { return a == b; }
bool same_coeff(const Scalar& a, const Scalar& b) { return a == b; }
template <class C>
bool same_coeff(const LaurentSeries<C>& a, const LaurentSeries<C>& b) { return same_known(a, b); }

template <class C>
bool same_known(const LaurentSeries<C>& a, const LaurentSeries<C>& b) {
  const int n = std::min(a.precision(), b.precision());
  int lo = std::min(a.valuation(), b.valuation());
  for (int e = lo; e < n; ++e)
    if (!same_coeff(a.coeff(e), b.coeff(e))) return false;
  return true;
}

}  // namespace

std::string LocalCoordinates::str() const {
  const Point& x = chain.back();
  const Vars& vars = x.scheme().patch_vars(x.patch());
  if (!frame) {
    if (x.scheme().dim() == 1) {
      const ScalarPoly& m = x.minpoly();
      if (m.degree() == 1) return "v = " + vars[0] + " - (" + (-m.coeff(0) / m.coeff(1)).str() + ")";
      return "v = " + vars[0] + " - a, " + m.str("a") + " = 0";
    }
    return vars[0] + " - (" + x.coords()[0].str() + "), " + vars[1] + " - (" + x.coords()[1].str() + ")";
  }
  const PlaneFrame& F = *frame;
  int i = F.v_is_first ? 0 : 1;
  return "v = " + vars[static_cast<std::size_t>(i)] + " - (" + F.point[static_cast<std::size_t>(i)].str() + "), u = " + F.f.str();
}

CompletionElement::CompletionElement(LocalCoordinates coords, std::optional<RatFunc> rep, Expansion e, int order)
    : coords_(std::move(coords)), rep_(std::move(rep)), exp_(std::move(e)), order_(order) {}

const Series& CompletionElement::series() const {
  if (auto p = std::get_if<Series>(&exp_)) return *p;
  fail(ErrorCode::Unsupported, "completion element is not a line expansion");
}
const IterSeries& CompletionElement::iterated() const {
  if (auto p = std::get_if<IterSeries>(&exp_)) return *p;
  fail(ErrorCode::Unsupported, "completion element is not an iterated expansion");
}
const Poly& CompletionElement::taylor() const {
  if (auto p = std::get_if<Poly>(&exp_)) return *p;
  fail(ErrorCode::Unsupported, "completion element is not a Taylor expansion");
}

CompletionElement CompletionElement::operator*(const CompletionElement& o) const {
  if (chain() != o.chain()) fail(ErrorCode::InvalidChain, "product of completions along different chains");
  const int n = std::min(order_, o.order_);
  std::optional<RatFunc> rep;
  if (rep_ && o.rep_) rep = *rep_ * *o.rep_;
  if (exp_.index() == 0) return {coords_, rep, (series().truncate(n) * o.series().truncate(n)).truncate(n), n};
  if (exp_.index() == 1) return {coords_, rep, clip(iterated() * o.iterated(), n, n), n};
  return {coords_, rep, truncate_total(taylor() * o.taylor(), n), n};
}

bool CompletionElement::agrees_with(const CompletionElement& o) const {
  if (chain() != o.chain() || exp_.index() != o.exp_.index()) return false;
  const int n = std::min(order_, o.order_);
  if (exp_.index() == 0) return same_known(series().truncate(n), o.series().truncate(n));
  if (exp_.index() == 1) return same_known(clip(iterated(), n, n), clip(o.iterated(), n, n));
  return truncate_total(taylor(), n) == truncate_total(o.taylor(), n);
}

std::string CompletionElement::str() const {
  if (exp_.index() == 0) return series().str();
  if (exp_.index() == 1) return iterated().str();
  return taylor().str();
}

LocalCoordinates local_coordinates(const Chain& chain, int order) {
  if (!is_saturated(chain)) fail(ErrorCode::InvalidChain, chain.str() + " is not saturated");
  if (chain.length() > 2) fail(ErrorCode::Unsupported, "chains longer than 2 steps");
  const Point& x = chain.back();
  if (!x.is_closed()) fail(ErrorCode::Unsupported, "expansions need a chain ending at a closed point");
  LocalCoordinates lc{chain, std::nullopt};
  if (x.scheme().dim() == 2) {
    if (!x.is_rational()) fail(ErrorCode::CoordinateFailure, x.str() + " is not a rational point");
    if (chain.length() >= 1) lc.frame = make_frame(chain[static_cast<std::size_t>(chain.length() - 1)], x, order, order);
  }
  return lc;
}

CompletionElement complete(const RatFunc& f, const Chain& chain, int order) {
  if (order < 0) fail(ErrorCode::InsufficientPrecision, "negative expansion order");
  const Point& x0 = chain.front();
  if (!x0.is_generic() && !regular_at(f, x0)) fail(ErrorCode::Undefined, f.str() + " is not defined at " + x0.str());
  LocalCoordinates lc = local_coordinates(chain, order);
  const Point& x = chain.back();
  const Scheme& X = x.scheme();
  RatFunc g = X.function_to_patch(f, 0, x.patch());
  if (X.dim() == 1) return {lc, f, expand_local(g, x, order), order};
  if (!lc.frame) return {lc, f, taylor_at(g, x.coords(), order), order};
  return {lc, f, iter_expand(*lc.frame, g), order};
}

CompletionElement coface_minus(const CompletionElement& e, const Chain& chain) {
  const Point& x = e.chain().back();
  if (std::find(chain.points().begin(), chain.points().end(), x) == chain.points().end())
    fail(ErrorCode::InvalidChain, x.str() + " is not on " + chain.str());
  if (chain == e.chain()) return e;
  if (e.representative()) return complete(*e.representative(), chain, e.order());
  if (chain.back() == x) return coface_plus(e, chain);
  fail(ErrorCode::NotInCompletion, "element has no rational representative");
}

CompletionElement coface_plus(const CompletionElement& e, const Chain& chain) {
  const Point& y = chain.back();
  if (e.chain().back() != y || e.chain().length() != 0) fail(ErrorCode::InvalidChain, "coface_plus needs an element at the last point of " + chain.str());
  if (chain == e.chain()) return e;
  const int n = e.order();
  LocalCoordinates lc = local_coordinates(chain, n);
  if (y.scheme().dim() == 1) return {lc, e.representative(), e.series(), n};
  const PlaneFrame& F = *lc.frame;
  IterSeries dx = F.X - iter_constant(F.point[0], n, n);
  IterSeries dy = F.Y - iter_constant(F.point[1], n, n);
  IterSeries r = iter_eval(e.taylor(), dx, dy, n, n);
  // a Taylor polynomial of total degree < n only fixes u^i v^j for i + j < n
  std::vector<ScalarSeries> c;
  for (int i = 0; i < static_cast<int>(r.coeffs().size()); ++i)
    c.push_back(r.coeffs()[static_cast<std::size_t>(i)].truncate(std::max(n - r.start() - i, 0)));
  return {lc, e.representative(), IterSeries(r.start(), std::move(c), r.precision(), r.zero_sample(), "u"), n};
}

}  // namespace adelic
