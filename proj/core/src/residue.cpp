#include "adelic/residue.hpp"

#include <sstream>

namespace adelic {

namespace {

FieldElem base_elem(const Scalar& c) { return FieldElem(ExtField::trivial(c.field()), c); }

Tail clean(Tail t) {
  for (auto it = t.begin(); it != t.end();) it = it->second.is_zero() ? t.erase(it) : std::next(it);
  return t;
}

void require_closed(const ResidueElement& e) {
  if (!e.point().is_closed()) fail(ErrorCode::InvalidPoint, "functionals live at closed points");
}

// Laurent tail of g ds at a closed point of a line (g in the point's patch).
Tail line_tail(const RatFunc& g, const Point& y) {
  const Scheme& X = y.scheme();
  Poly m = Poly::from_upoly(y.minpoly(), 0, X.patch_vars(y.patch()), X.base());
  int pole = -g.valuation(m);
  Tail t;
  if (pole <= 0) return t;
  Series e = expand_local(g, y, 0);
  for (int i = 0; i < pole; ++i) t[{i, 0}] = e.coeff(-i - 1);
  return clean(t);
}

// delta_(C,x) applied to the class of g dX^dY (g in C's patch).
Tail plane_tail(const Point& C, const RatFunc& g, const Point& x, int cap) {
  const Scheme& X = x.scheme();
  const int px = x.patch();
  RatFunc gx = X.form_to_patch(Form::top(g), C.patch(), px).top_coeff();
  Poly f = curve_in_patch(C, px);
  int K = -gx.valuation(f);
  Tail t;
  if (K <= 0) return t;
  int nu = 2 * K + 4, nv = 8;
  for (;;) {
    try {
      PlaneFrame F = make_frame(f, x.coords(), nu, nv);
      IterSeries G = iter_expand_top(F, gx);
      int V = 0;
      for (int i = -K; i <= -1; ++i) {
        ScalarSeries c = G.coeff(i);
        if (c.coeffs().empty()) {
          if (c.precision() <= 0) fail(ErrorCode::InsufficientPrecision, "inner pole order unknown");
          continue;
        }
        V = std::max(V, -c.valuation());
      }
      const int n = K + V;
      Tail out;
      for (int a = 0; a < n; ++a)
        for (int b = 0; a + b < n; ++b) {
          Scalar c = coefficient(local_monomial(F, a, b) * G, -1, -1);
          if (!c.is_zero()) out[{a, b}] = base_elem(c);
        }
      return out;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InsufficientPrecision) throw;
      if (nu >= cap && nv >= cap) throw;
      nu = std::min(2 * nu, std::max(cap, nu));
      nv = std::min(2 * nv, std::max(cap, nv));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------- element

ResidueElement ResidueElement::generic(const Scheme& X, const RatFunc& g) {
  ResidueElement e;
  e.p_ = Point::generic(X);
  e.g_ = g;
  return e;
}

ResidueElement ResidueElement::generic(const Scheme& X, const Form& w) {
  if (w.degree() != X.dim()) fail(ErrorCode::DegreeMismatch, "generic components are top forms");
  return generic(X, w.top_coeff());
}

ResidueElement ResidueElement::curve(const Point& C, const RatFunc& g) {
  if (!C.is_curve()) fail(ErrorCode::InvalidPoint, "not a curve");
  ResidueElement e;
  e.p_ = C;
  e.g_ = g;
  return e;
}

ResidueElement ResidueElement::closed(const Point& x, Tail tail) {
  if (!x.is_closed()) fail(ErrorCode::InvalidPoint, "not a closed point");
  ResidueElement e;
  e.p_ = x;
  e.tail_ = clean(std::move(tail));
  return e;
}

ResidueElement ResidueElement::zero(const Point& p) {
  const Scheme& X = p.scheme();
  if (p.is_closed()) return closed(p, {});
  RatFunc z(Poly(X.patch_vars(p.patch()), X.base()));
  return p.is_generic() ? generic(X, z) : curve(p, z);
}

const RatFunc& ResidueElement::form_coeff() const {
  if (p_.is_closed()) fail(ErrorCode::InvalidPoint, "closed components carry functionals");
  return g_;
}

const Tail& ResidueElement::tail() const {
  require_closed(*this);
  return tail_;
}

Form ResidueElement::form() const {
  if (!p_.is_generic()) fail(ErrorCode::InvalidPoint, "forms at the generic point only");
  return Form::top(g_);
}

bool ResidueElement::is_zero() const {
  switch (p_.kind()) {
    case PointKind::Generic: return g_.is_zero();
    case PointKind::Curve: return g_.is_regular_along(p_.curve_poly());
    case PointKind::Closed: return tail_.empty();
  }
  return true;
}

int ResidueElement::annihilator() const {
  int n = 0;
  for (const auto& [m, c] : tail()) {
    (void)c;
    n = std::max(n, m[0] + m[1] + 1);
  }
  return n;
}

Scalar ResidueElement::apply(const RatFunc& a) const {
  require_closed(*this);
  const Scheme& X = p_.scheme();
  const int n = annihilator();
  if (n == 0) return Scalar::zero(X.base());
  if (X.dim() == 1) {
    Series e = expand_at_place(X, a, p_, n);
    if (e.valuation() < 0) fail(ErrorCode::NotInCompletion, "function has a pole at " + p_.str());
    FieldElem acc = p_.root().zero_like();
    for (const auto& [m, w] : tail_) acc += e.coeff(m[0]) * w;
    return acc.trace();
  }
  Poly T = taylor_at(X.function_to_patch(a, 0, p_.patch()), p_.coords(), n);
  Scalar acc = Scalar::zero(X.base());
  for (const auto& [m, w] : tail_) acc += T.coeff(m) * w.base_value();
  return acc;
}

ResidueElement ResidueElement::operator-() const {
  ResidueElement r = *this;
  r.g_ = -g_;
  for (auto& [m, c] : r.tail_) {
    (void)m;
    c = -c;
  }
  return r;
}

ResidueElement operator+(const ResidueElement& a, const ResidueElement& b) {
  if (a.p_ != b.p_) fail(ErrorCode::InvalidPoint, "adding components at different points");
  ResidueElement r = a;
  if (a.p_.is_closed()) {
    for (const auto& [m, c] : b.tail_) {
      auto it = r.tail_.find(m);
      if (it == r.tail_.end()) r.tail_.emplace(m, c);
      else it->second += c;
    }
    r.tail_ = clean(std::move(r.tail_));
  } else {
    r.g_ = a.g_ + b.g_;
  }
  return r;
}

ResidueElement operator*(const Scalar& c, const ResidueElement& a) {
  ResidueElement r = a;
  r.g_ = c * a.g_;
  for (auto& [m, w] : r.tail_) {
    (void)m;
    w = c * w;
  }
  r.tail_ = clean(std::move(r.tail_));
  return r;
}

bool operator==(const ResidueElement& a, const ResidueElement& b) {
  if (a.p_ != b.p_) return false;
  switch (a.p_.kind()) {
    case PointKind::Generic: return a.g_ == b.g_;
    case PointKind::Curve: return (a.g_ - b.g_).is_regular_along(a.p_.curve_poly());
    case PointKind::Closed: return a.tail_ == b.tail_;
  }
  return false;
}

std::string ResidueElement::str() const {
  if (p_.is_generic()) return Form::top(g_).str();
  if (p_.is_curve()) return "[" + Form::top(g_).str() + "]";
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [m, c] : tail_) {
    os << (first ? "" : ", ");
    if (p_.scheme().dim() == 1) os << "(" << m[0] << "): " << c.str();
    else os << "(" << m[0] << "," << m[1] << "): " << c.str();
    first = false;
  }
  os << "}";
  return os.str();
}

ResidueElement times_function(const ResidueElement& phi, const RatFunc& a) {
  const Point& p = phi.point();
  const Scheme& X = p.scheme();
  if (p.is_generic()) return ResidueElement::generic(X, phi.form_coeff() * a);
  if (p.is_curve()) {
    RatFunc ac = X.function_to_patch(a, 0, p.patch());
    if (!ac.is_regular_along(p.curve_poly())) fail(ErrorCode::NotInCompletion, "function has a pole along " + p.str());
    return ResidueElement::curve(p, phi.form_coeff() * ac);
  }
  const int n = phi.annihilator();
  if (n == 0) return phi;
  Tail out;
  if (X.dim() == 1) {
    Series e = expand_at_place(X, a, p, n);
    if (e.valuation() < 0) fail(ErrorCode::NotInCompletion, "function has a pole at " + p.str());
    for (int i = 0; i < n; ++i) {
      FieldElem acc = p.root().zero_like();
      for (const auto& [m, w] : phi.tail())
        if (m[0] >= i) acc += e.coeff(m[0] - i) * w;
      out[{i, 0}] = acc;
    }
  } else {
    Poly T = taylor_at(X.function_to_patch(a, 0, p.patch()), p.coords(), n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; i + j < n; ++j) {
        Scalar acc = Scalar::zero(X.base());
        for (const auto& [m, w] : phi.tail())
          if (m[0] >= i && m[1] >= j) acc += T.coeff({m[0] - i, m[1] - j}) * w.base_value();
        out[{i, j}] = base_elem(acc);
      }
  }
  return ResidueElement::closed(p, std::move(out));
}

// ---------------------------------------------------------------- delta

ResidueElement delta_step(const ResidueElement& phi, const Point& y, int cap) {
  const Point& x = phi.point();
  const Scheme& X = x.scheme();
  if (x.dim() != y.dim() + 1 || !specializes(x, y))
    fail(ErrorCode::InvalidChain, y.str() + " is not an immediate specialization of " + x.str());
  if (phi.is_zero()) return ResidueElement::zero(y);
  if (x.is_generic()) {
    RatFunc g = X.form_to_patch(phi.form(), 0, y.patch()).top_coeff();
    if (X.dim() == 1) return ResidueElement::closed(y, line_tail(g, y));
    return ResidueElement::curve(y, g);
  }
  return ResidueElement::closed(y, plane_tail(x, phi.form_coeff(), y, cap));
}

ResidueElement delta_chain(const ResidueElement& phi, const Chain& chain, int cap) {
  if (chain.front() != phi.point()) fail(ErrorCode::InvalidChain, "chain does not start at " + phi.point().str());
  if (!is_saturated(chain)) fail(ErrorCode::InvalidChain, "delta needs a saturated chain");
  ResidueElement e = phi;
  for (int i = 1; i <= chain.length(); ++i) e = delta_step(e, chain[static_cast<std::size_t>(i)], cap);
  return e;
}

std::vector<Point> delta_candidates(const ResidueElement& phi) {
  const Point& p = phi.point();
  const Scheme& X = p.scheme();
  if (p.is_closed() || phi.is_zero()) return {};
  if (p.is_generic()) return pole_divisors(X, phi.form());
  Form w = X.form_to_patch(Form::top(phi.form_coeff()), p.patch(), 0);
  return special_points(p, pole_divisors(X, w));
}

// ---------------------------------------------------------------- complex

void ResidueComplexElement::add(const ResidueElement& e) {
  auto it = terms_.find(e.point());
  if (it == terms_.end()) {
    if (!e.is_zero()) terms_.emplace(e.point(), e);
    return;
  }
  it->second = it->second + e;
  if (it->second.is_zero()) terms_.erase(it);
}

ResidueElement ResidueComplexElement::component(const Point& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? ResidueElement::zero(p) : it->second;
}

ResidueComplexElement ResidueComplexElement::part(int degree) const {
  ResidueComplexElement r;
  for (const auto& [p, e] : terms_)
    if (-p.dim() == degree) r.terms_.emplace(p, e);
  return r;
}

ResidueComplexElement ResidueComplexElement::operator-() const {
  ResidueComplexElement r;
  for (const auto& [p, e] : terms_) r.terms_.emplace(p, -e);
  return r;
}

ResidueComplexElement operator+(const ResidueComplexElement& a, const ResidueComplexElement& b) {
  ResidueComplexElement r = a;
  for (const auto& [p, e] : b.terms_) {
    (void)p;
    r.add(e);
  }
  return r;
}

ResidueComplexElement operator*(const Scalar& c, const ResidueComplexElement& a) {
  ResidueComplexElement r;
  for (const auto& [p, e] : a.terms_) {
    (void)p;
    r.add(c * e);
  }
  return r;
}

std::string ResidueComplexElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, e] : terms_) s += (s.empty() ? "" : " + ") + p.str() + ": " + e.str();
  return s;
}

ResidueComplexElement coboundary_delta(const ResidueComplexElement& phi, int cap) {
  ResidueComplexElement out;
  for (const auto& [p, e] : phi.terms()) {
    const Scalar sign((p.dim() + 1) % 2 == 0 ? 1L : -1L, p.scheme().base());
    for (const auto& y : delta_candidates(e)) out.add(sign * delta_step(e, y, cap));
  }
  return out;
}

Scalar residue_functional(const IterSeries& beta, const IterSeries& a) { return coefficient(a * beta, -1, -1); }

Scalar residue_sum(const ResidueComplexElement& phi) {
  Scalar acc;
  bool first = true;
  for (const auto& [p, e] : phi.terms()) {
    if (first) acc = Scalar::zero(p.scheme().base());
    first = false;
    if (!p.is_closed()) continue;
    auto it = e.tail().find({0, 0});
    if (it != e.tail().end()) acc += it->second.trace();
  }
  return acc;
}

Scalar laurent_residue(const Form& beta, const RatFunc& a, int cap) {
  if (beta.nvars() != 2 || beta.degree() != 2) fail(ErrorCode::DegreeMismatch, "laurent_residue needs a 2-form in two variables");
  const BaseField& k = beta.field();
  Poly s1 = Poly::variable(0, beta.vars(), k);
  RatFunc g = beta.top_coeff() * (a.is_constant() ? RatFunc::constant(a.num().constant_value(), beta.vars(), k) : a);
  for (int n = 4;; n *= 2) {
    try {
      PlaneFrame F = make_frame(s1, {Scalar::zero(k), Scalar::zero(k)}, n, n);
      IterSeries e = iter_expand(F, g);
      return e.coeff(-1).coeff(-1);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::InsufficientPrecision || n >= cap) throw;
    }
  }
}

}  // namespace adelic
