#include "adelic/scheme.hpp"

#include <algorithm>
#include <sstream>

#include "adelic/factor.hpp"
#include "adelic/parse.hpp"

namespace adelic {

namespace {

const Vars kLine0{"t"};
const Vars kLine1{"s"};
const Vars kPlane0{"x", "y"};
const Vars kPlane1{"Y1", "Z1"};
const Vars kPlane2{"X2", "Z2"};

// Homogeneous layout of the patches: patch j is {H[chart[j]] != 0} with
// coordinates H[idx[j][k]] / H[chart[j]].
struct Layout {
  std::vector<int> chart;
  std::vector<std::vector<int>> idx;
};

const Layout& layout(SchemeKind kind) {
  static const Layout a1{{1}, {{0}}};
  static const Layout p1{{1, 0}, {{0}, {1}}};
  static const Layout a2{{2}, {{0, 1}}};
  static const Layout p2{{2, 0, 1}, {{0, 1}, {1, 2}, {0, 2}}};
  switch (kind) {
    case SchemeKind::AffineLine: return a1;
    case SchemeKind::ProjectiveLine: return p1;
    case SchemeKind::AffinePlane: return a2;
    case SchemeKind::ProjectivePlane: return p2;
  }
  return a1;
}

std::vector<Scalar> homogeneous(const Scheme& X, const std::vector<Scalar>& c, int patch) {
  const Layout& L = layout(X.kind());
  std::vector<Scalar> H(static_cast<std::size_t>(X.dim()) + 1, Scalar::zero(X.base()));
  H[static_cast<std::size_t>(L.chart[static_cast<std::size_t>(patch)])] = Scalar::one(X.base());
  for (std::size_t k = 0; k < c.size(); ++k) H[static_cast<std::size_t>(L.idx[static_cast<std::size_t>(patch)][k])] = c[k];
  return H;
}

std::optional<std::vector<Scalar>> dehomogenize(const Scheme& X, const std::vector<Scalar>& H, int j) {
  const Layout& L = layout(X.kind());
  const Scalar& h = H[static_cast<std::size_t>(L.chart[static_cast<std::size_t>(j)])];
  if (h.is_zero()) return std::nullopt;
  std::vector<Scalar> c;
  for (int m : L.idx[static_cast<std::size_t>(j)]) c.push_back(H[static_cast<std::size_t>(m)] / h);
  return c;
}

bool upoly_less(const ScalarPoly& a, const ScalarPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) < b.coeff(i)) return true;
    if (b.coeff(i) < a.coeff(i)) return false;
  }
  return false;
}

// t^d m(1/t), made monic.
ScalarPoly reverse_poly(const ScalarPoly& m) {
  std::vector<Scalar> c(m.coeffs().rbegin(), m.coeffs().rend());
  return ScalarPoly(c, m.zero_sample()).monic();
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Scalar parse_constant(const std::string& text, const BaseField& k) {
  RatFunc r = parse_ratfunc(text, {}, k);
  if (!r.is_constant()) fail(ErrorCode::Parse, "expected a constant: " + text);
  return r.num().is_zero() ? Scalar::zero(k) : r.num().constant_value();
}

void sort_unique(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

// ---------------------------------------------------------------- Scheme

Scheme Scheme::parse(const std::string& literal) {
  auto slash = literal.find('/');
  if (slash == std::string::npos) fail(ErrorCode::Parse, "scheme literal needs '/': " + literal);
  std::string name = trim(literal.substr(0, slash));
  std::string field = trim(literal.substr(slash + 1));
  SchemeKind kind;
  if (name == "A1") kind = SchemeKind::AffineLine;
  else if (name == "P1") kind = SchemeKind::ProjectiveLine;
  else if (name == "A2") kind = SchemeKind::AffinePlane;
  else if (name == "P2") kind = SchemeKind::ProjectivePlane;
  else fail(ErrorCode::Parse, "unknown scheme: " + name);
  BaseField k;
  if (field == "Q") {
    k = BaseField::rationals();
  } else if (field.size() > 1 && field[0] == 'F') {
    try {
      k = BaseField::prime(std::stoll(field.substr(1)));
    } catch (const std::invalid_argument&) {
      fail(ErrorCode::Parse, "bad field: " + field);
    }
  } else {
    fail(ErrorCode::Parse, "bad field: " + field);
  }
  return Scheme(kind, k);
}

int Scheme::num_patches() const noexcept { return static_cast<int>(layout(kind_).chart.size()); }

const Vars& Scheme::patch_vars(int j) const {
  if (j < 0 || j >= num_patches()) fail(ErrorCode::InvalidPoint, "no patch " + std::to_string(j));
  if (dim() == 1) return j == 0 ? kLine0 : kLine1;
  return j == 0 ? kPlane0 : (j == 1 ? kPlane1 : kPlane2);
}

std::string Scheme::str() const {
  const char* n = kind_ == SchemeKind::AffineLine ? "A1" : kind_ == SchemeKind::ProjectiveLine ? "P1"
                : kind_ == SchemeKind::AffinePlane ? "A2" : "P2";
  return std::string(n) + "/" + (k_.is_rationals() ? std::string("Q") : "F" + std::to_string(k_.characteristic()));
}

RatFunc Scheme::coordinate(int j, int i) const {
  return RatFunc(Poly::variable(i, patch_vars(j), k_));
}

std::vector<RatFunc> Scheme::coords_in(int from, int to) const {
  const Layout& L = layout(kind_);
  const Vars& v = patch_vars(to);
  auto h = [&](int m) -> Poly {
    if (m == L.chart[static_cast<std::size_t>(to)]) return Poly::constant(Scalar::one(k_), v, k_);
    const auto& id = L.idx[static_cast<std::size_t>(to)];
    int pos = static_cast<int>(std::find(id.begin(), id.end(), m) - id.begin());
    return Poly::variable(pos, v, k_);
  };
  std::vector<RatFunc> out;
  Poly den = h(L.chart[static_cast<std::size_t>(from)]);
  for (int m : L.idx[static_cast<std::size_t>(from)]) {
    Poly num = h(m);
    if (den.is_constant()) out.emplace_back(num);
    else out.emplace_back(num, std::vector<DenFactor>{{den, 1}});
  }
  return out;
}

RatFunc Scheme::function_to_patch(const RatFunc& f, int from, int to) const {
  if (from == to) return f;
  return f.substitute(coords_in(from, to));
}

Form Scheme::form_to_patch(const Form& w, int from, int to) const {
  if (from == to) return w;
  auto images = coords_in(from, to);
  std::vector<Form> d;
  for (const auto& im : images) d.push_back(exterior_d(Form::function(im)));
  const Vars& v = patch_vars(to);
  Form out(v, k_, w.degree());
  for (const auto& [mask, f] : w.coeffs()) {
    Form term = Form::function(f.substitute(images));
    for (int i = 0; i < w.nvars(); ++i)
      if (mask & (1 << i)) term = wedge(term, d[static_cast<std::size_t>(i)]);
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------- Point

int Point::dim() const noexcept {
  switch (kind_) {
    case PointKind::Generic: return X_.dim();
    case PointKind::Curve: return 1;
    case PointKind::Closed: return 0;
  }
  return 0;
}

Point Point::generic(const Scheme& X) {
  Point p;
  p.X_ = X;
  p.kind_ = PointKind::Generic;
  return p;
}

namespace {

// Rejects equations with a repeated factor, a nontrivial content in either
// variable, or a reducible univariate equation. Other bivariate
// factorizations are not detected.
void check_curve_equation(const Poly& f) {
  for (int i = 0; i < 2; ++i) {
    if (f.sole_variable() == 1 - i && !is_irreducible(f.to_upoly(1 - i)))
      fail(ErrorCode::NotIrreducible, "curve equation " + f.str() + " is reducible");
    if (!f.involves(i)) continue;
    Poly c = f.zero_like();
    for (const auto& co : f.coefficients_in(i))
      if (!co.is_zero()) c = c.is_zero() ? co : poly_gcd(c, co);
    if (!c.is_constant()) fail(ErrorCode::NotIrreducible, "curve equation " + f.str() + " is reducible");
    if (!poly_gcd(f, f.derivative(i)).is_constant())
      fail(ErrorCode::NotIrreducible, "curve equation " + f.str() + " has a repeated factor");
  }
}

}  // namespace

Point Point::curve(const Scheme& X, const Poly& f, int patch) {
  if (X.dim() != 2) fail(ErrorCode::InvalidPoint, "curves are points of planes");
  if (f.is_constant()) fail(ErrorCode::InvalidPoint, "curve equation is constant");
  if (f.vars() != X.patch_vars(patch)) fail(ErrorCode::VariableMismatch, "curve equation not in patch variables");
  check_curve_equation(f);
  Point p;
  p.X_ = X;
  p.kind_ = PointKind::Curve;
  p.patch_ = patch;
  p.curve_ = f.monic();
  for (int j = 0; j < X.num_patches(); ++j) {
    Poly g = curve_in_patch(p, j);
    if (!g.is_constant()) {
      p.patch_ = j;
      p.curve_ = g;
      break;
    }
  }
  return p;
}

Point Point::rational(const Scheme& X, const std::vector<Scalar>& coords, int patch) {
  if (static_cast<int>(coords.size()) != X.dim()) fail(ErrorCode::InvalidPoint, "wrong number of coordinates");
  if (X.dim() == 1) {
    ScalarPoly m({-coords[0], Scalar::one(X.base())}, Scalar::zero(X.base()));
    return closed_line(X, m, patch);
  }
  auto H = homogeneous(X, coords, patch);
  Point p;
  p.X_ = X;
  p.kind_ = PointKind::Closed;
  for (int j = 0; j < X.num_patches(); ++j) {
    auto c = dehomogenize(X, H, j);
    if (c) {
      p.patch_ = j;
      p.coords_ = *c;
      break;
    }
  }
  return p;
}

Point Point::closed_line(const Scheme& X, const ScalarPoly& minpoly, int patch) {
  if (X.dim() != 1) fail(ErrorCode::InvalidPoint, "closed_line needs a line");
  if (minpoly.degree() < 1) fail(ErrorCode::InvalidPoint, "minimal polynomial must be non-constant");
  if (patch < 0 || patch >= X.num_patches()) fail(ErrorCode::InvalidPoint, "bad patch");
  Point p;
  p.X_ = X;
  p.kind_ = PointKind::Closed;
  ScalarPoly m = minpoly.monic();
  if (patch == 1 && !(m.degree() == 1 && m.coeff(0).is_zero())) {
    m = reverse_poly(m);
    patch = 0;
  }
  p.patch_ = patch;
  p.minpoly_ = m;
  if (m.degree() == 1) {
    p.coords_ = {-m.coeff(0)};
    p.field_ = ExtField::trivial(X.base());
  } else {
    p.field_ = ExtField::make(m);
  }
  return p;
}

Point Point::infinity(const Scheme& X) {
  if (X.kind() != SchemeKind::ProjectiveLine) fail(ErrorCode::PlaceNotOnScheme, "infinity needs the projective line");
  return closed_line(X, ScalarPoly::variable(Scalar::zero(X.base())), 1);
}

Point Point::parse(const Scheme& X, const std::string& literal) {
  std::string s = trim(literal);
  if (s == "generic" || s == "eta") return generic(X);
  auto inner = [&](const std::string& head) {
    if (s.size() < head.size() + 2 || s.compare(0, head.size() + 1, head + "(") != 0 || s.back() != ')')
      fail(ErrorCode::Parse, "bad point literal: " + literal);
    return trim(s.substr(head.size() + 1, s.size() - head.size() - 2));
  };
  const BaseField& k = X.base();
  if (s.rfind("curve", 0) == 0) {
    std::string body = inner("curve");
    if (X.dim() != 2) fail(ErrorCode::Parse, "curves need a plane");
    if (body == "inf") {
      if (X.kind() != SchemeKind::ProjectivePlane) fail(ErrorCode::PlaceNotOnScheme, "no line at infinity");
      return curve(X, Poly::variable(1, X.patch_vars(1), k), 1);
    }
    return curve(X, parse_poly(body, X.patch_vars(0), k), 0);
  }
  std::string body = inner("pt");
  if (body == "inf") return infinity(X);
  if (body.find(':') != std::string::npos) {
    if (X.kind() != SchemeKind::ProjectivePlane && X.kind() != SchemeKind::ProjectiveLine)
      fail(ErrorCode::Parse, "homogeneous coordinates need a projective scheme");
    auto parts = split(body, ':');
    if (static_cast<int>(parts.size()) != X.dim() + 1) fail(ErrorCode::Parse, "wrong number of homogeneous coordinates");
    std::vector<Scalar> H;
    for (auto& q : parts) H.push_back(parse_constant(q, k));
    for (int j = 0; j < X.num_patches(); ++j) {
      auto c = dehomogenize(X, H, j);
      if (c) return rational(X, *c, j);
    }
    fail(ErrorCode::InvalidPoint, "all homogeneous coordinates vanish");
  }
  const Vars& v = X.patch_vars(0);
  auto parts = split(body, ',');
  if (X.dim() == 1 && parts.size() == 1) {
    auto eq = split(parts[0], '=');
    if (eq.size() != 2) fail(ErrorCode::Parse, "expected var=value: " + literal);
    if (eq[0] == v[0]) return rational(X, {parse_constant(eq[1], k)}, 0);
    Poly m = parse_poly(eq[0], v, k) - parse_poly(eq[1], v, k);
    return closed_line(X, m.to_upoly(0), 0);
  }
  if (static_cast<int>(parts.size()) != X.dim()) fail(ErrorCode::Parse, "wrong number of coordinates: " + literal);
  std::vector<Scalar> c(parts.size(), Scalar::zero(k));
  std::vector<bool> seen(parts.size(), false);
  for (auto& q : parts) {
    auto eq = split(q, '=');
    if (eq.size() != 2) fail(ErrorCode::Parse, "expected var=value: " + q);
    auto it = std::find(v.begin(), v.end(), eq[0]);
    if (it == v.end()) fail(ErrorCode::Parse, "unknown coordinate: " + eq[0]);
    auto i = static_cast<std::size_t>(it - v.begin());
    c[i] = parse_constant(eq[1], k);
    seen[i] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) fail(ErrorCode::Parse, "missing coordinate: " + literal);
  return rational(X, c, 0);
}

const Poly& Point::curve_poly() const {
  if (kind_ != PointKind::Curve) fail(ErrorCode::InvalidPoint, "not a curve");
  return curve_;
}

const ScalarPoly& Point::minpoly() const {
  if (kind_ != PointKind::Closed || X_.dim() != 1) fail(ErrorCode::InvalidPoint, "not a closed point of a line");
  return minpoly_;
}

const std::vector<Scalar>& Point::coords() const {
  if (!is_rational()) fail(ErrorCode::NonRationalPoint, "point " + str() + " is not rational");
  return coords_;
}

bool Point::is_rational() const { return kind_ == PointKind::Closed && !coords_.empty(); }

ExtFieldPtr Point::residue_field() const {
  if (kind_ != PointKind::Closed) fail(ErrorCode::InvalidPoint, "residue fields of closed points only");
  return field_ ? field_ : ExtField::trivial(X_.base());
}

FieldElem Point::root() const {
  auto F = residue_field();
  if (is_rational()) return FieldElem(F, coords_[0]);
  return FieldElem::generator(F);
}

std::string Point::str() const {
  std::ostringstream os;
  switch (kind_) {
    case PointKind::Generic: return "generic";
    case PointKind::Curve:
      if (patch_ == 0) return "curve(" + curve_.str() + ")";
      return "curve(inf)";
    case PointKind::Closed:
      if (X_.dim() == 1) {
        if (patch_ == 1) return "pt(inf)";
        if (is_rational()) return "pt(t=" + coords_[0].str() + ")";
        return "pt(" + minpoly_.str("t") + "=0)";
      }
      if (patch_ == 0) return "pt(x=" + coords_[0].str() + ",y=" + coords_[1].str() + ")";
      {
        auto H = homogeneous(X_, coords_, patch_);
        return "pt(" + H[0].str() + ":" + H[1].str() + ":" + H[2].str() + ")";
      }
  }
  return os.str();
}

bool operator==(const Point& a, const Point& b) {
  if (a.X_ != b.X_ || a.kind_ != b.kind_ || a.patch_ != b.patch_) return false;
  switch (a.kind_) {
    case PointKind::Generic: return true;
    case PointKind::Curve: return a.curve_ == b.curve_;
    case PointKind::Closed:
      if (a.X_.dim() == 1) return a.minpoly_ == b.minpoly_;
      return a.coords_ == b.coords_;
  }
  return false;
}

bool operator<(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) return a.dim() > b.dim();
  if (a.patch_ != b.patch_) return a.patch_ < b.patch_;
  switch (a.kind_) {
    case PointKind::Generic: return false;
    case PointKind::Curve: return a.curve_ < b.curve_;
    case PointKind::Closed:
      if (a.X_.dim() == 1) return upoly_less(a.minpoly_, b.minpoly_);
      return a.coords_ < b.coords_;
  }
  return false;
}

// ---------------------------------------------------------------- patches

Poly curve_in_patch(const Point& c, int j) {
  const Scheme& X = c.scheme();
  const Poly& f = c.curve_poly();
  if (j == c.patch()) return f;
  RatFunc g = RatFunc(f).substitute(X.coords_in(c.patch(), j));
  Poly n = g.num();
  if (n.is_constant()) return Poly::constant(Scalar::one(X.base()), X.patch_vars(j), X.base());
  return n.monic();
}

std::vector<Scalar> coords_in_patch(const Point& p, int j) {
  const Scheme& X = p.scheme();
  if (p.patch() == j) return p.coords();
  auto c = dehomogenize(X, homogeneous(X, p.coords(), p.patch()), j);
  if (!c) fail(ErrorCode::PlaceNotOnScheme, p.str() + " is not in patch " + std::to_string(j));
  return *c;
}

ScalarPoly minpoly_in_patch(const Point& p, int j) {
  const ScalarPoly& m = p.minpoly();
  if (p.patch() == j) return m;
  if (m.coeff(0).is_zero()) fail(ErrorCode::PlaceNotOnScheme, p.str() + " is not in patch " + std::to_string(j));
  return reverse_poly(m);
}

bool in_patch(const Point& p, int j) {
  const Scheme& X = p.scheme();
  if (j < 0 || j >= X.num_patches()) return false;
  switch (p.kind()) {
    case PointKind::Generic: return true;
    case PointKind::Curve: return !curve_in_patch(p, j).is_constant();
    case PointKind::Closed:
      if (X.dim() == 1) return p.patch() == j || !p.minpoly().coeff(0).is_zero();
      return dehomogenize(X, homogeneous(X, p.coords(), p.patch()), j).has_value();
  }
  return false;
}

bool specializes(const Point& a, const Point& b) {
  if (a.scheme() != b.scheme()) fail(ErrorCode::InvalidPoint, "points on different schemes");
  if (a == b || a.is_generic()) return true;
  if (a.is_curve() && b.is_closed()) {
    Poly f = curve_in_patch(a, b.patch());
    return f.eval(b.coords()).is_zero();
  }
  return false;
}

// ---------------------------------------------------------------- chains

Chain::Chain(std::vector<Point> pts) : pts_(std::move(pts)) {
  if (pts_.empty()) fail(ErrorCode::InvalidChain, "empty chain");
  for (std::size_t i = 0; i + 1 < pts_.size(); ++i)
    if (!specializes(pts_[i], pts_[i + 1]))
      fail(ErrorCode::InvalidChain, pts_[i + 1].str() + " is not in the closure of " + pts_[i].str());
}

std::string Chain::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < pts_.size(); ++i) s += (i ? "," : "") + pts_[i].str();
  return s + ")";
}

bool is_saturated(const Chain& c) {
  for (int i = 0; i < c.length(); ++i)
    if (c[static_cast<std::size_t>(i)].dim() != c[static_cast<std::size_t>(i) + 1].dim() + 1) return false;
  return true;
}

bool is_reduced(const Chain& c) {
  for (int i = 0; i < c.length(); ++i)
    if (c[static_cast<std::size_t>(i)] == c[static_cast<std::size_t>(i) + 1]) return false;
  return true;
}

Chain face(const Chain& c, int i) {
  if (i < 0 || i > c.length()) fail(ErrorCode::InvalidChain, "face index out of range");
  if (c.length() == 0) fail(ErrorCode::InvalidChain, "face of a length-0 chain");
  auto pts = c.points();
  pts.erase(pts.begin() + i);
  return Chain(std::move(pts));
}

Chain concat(const Chain& a, const Chain& b) {
  auto pts = a.points();
  pts.insert(pts.end(), b.points().begin(), b.points().end());
  return Chain(std::move(pts));
}

Chain segment(const Chain& c, int from, int to) {
  if (from < 0 || to > c.length() || from > to) fail(ErrorCode::InvalidChain, "segment out of range");
  return Chain(std::vector<Point>(c.points().begin() + from, c.points().begin() + to + 1));
}

// ---------------------------------------------------------------- zeros

namespace {

// Roots of a univariate polynomial in k; irrational roots raise unless
// `keep(factor)` rejects the factor as spurious.
template <class Keep>
std::vector<Scalar> rational_roots(const ScalarPoly& g, Keep keep) {
  std::vector<Scalar> out;
  if (g.degree() < 1) return out;
  auto [unit, fac] = factor_poly(Poly::from_upoly(g, 0, {"z"}, g.zero_sample().field()));
  (void)unit;
  for (const auto& f : fac) {
    ScalarPoly u = f.poly.to_upoly(0);
    if (u.degree() == 1) {
      out.push_back(-u.coeff(0) / u.coeff(1));
    } else if (keep(u)) {
      fail(ErrorCode::NonRationalPoint, "common zero over k[z]/(" + u.str("z") + ")");
    }
  }
  return out;
}

Poly at_x(const Poly& p, const Scalar& a) {
  const Vars& v = p.vars();
  const BaseField& k = p.field();
  return p.substitute({Poly::constant(a, v, k), Poly::variable(1, v, k)});
}

UPoly<FieldElem> at_x_ext(const Poly& p, const FieldElem& alpha) {
  FieldElem z = alpha.zero_like();
  UPoly<FieldElem> out(z);
  for (const auto& [m, c] : p.terms()) {
    FieldElem coef = c * alpha.pow(m[0]);
    out += UPoly<FieldElem>::monomial(coef, m[1]);
  }
  return out;
}

}  // namespace

std::vector<std::vector<Scalar>> common_zeros(const std::vector<Poly>& input) {
  std::vector<Poly> polys;
  for (const auto& p : input) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return {};
    polys.push_back(p);
  }
  if (polys.size() < 2) fail(ErrorCode::Unsupported, "common zeros of fewer than two equations");
  auto lead = std::find_if(polys.begin(), polys.end(), [](const Poly& p) { return p.involves(1); });
  if (lead == polys.end()) {
    Poly g = polys[0];
    for (const auto& p : polys) g = poly_gcd(g, p);
    if (g.is_constant()) return {};
    fail(ErrorCode::Unsupported, "zero set is not finite");
  }
  Poly P = *lead;
  Poly G;
  for (const auto& Q : polys) {
    if (&Q == &*lead) continue;
    Poly r = resultant(P, Q, 1);
    G = G.nvars() == 0 ? r : poly_gcd(G, r);
  }
  if (G.is_zero()) fail(ErrorCode::Unsupported, "zero set is not finite");
  if (G.is_constant()) return {};

  auto fiber_gcd = [&](auto eval) {
    bool have = false;
    decltype(eval(polys[0])) h;
    for (const auto& p : polys) {
      auto q = eval(p);
      if (q.is_zero()) continue;
      h = have ? gcd(h, q) : q.monic();
      have = true;
    }
    if (!have) fail(ErrorCode::Unsupported, "zero set is not finite");
    return h;
  };

  auto spurious_x = [&](const ScalarPoly& pi) {
    if (pi.degree() > ExtField::kMaxDegree) return true;
    auto F = ExtField::make(pi);
    FieldElem alpha = FieldElem::generator(F);
    auto h = fiber_gcd([&](const Poly& p) { return at_x_ext(p, alpha); });
    return h.degree() >= 1;
  };
  std::vector<std::vector<Scalar>> out;
  for (const Scalar& a : rational_roots(G.to_upoly(0), spurious_x)) {
    auto h = fiber_gcd([&](const Poly& p) { return at_x(p, a).to_upoly(1); });
    for (const Scalar& b : rational_roots(h, [](const ScalarPoly&) { return true; })) out.push_back({a, b});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------- supports

std::vector<Point> pole_divisors(const Scheme& X, const Form& w) {
  std::vector<Point> out;
  for (int j = 0; j < X.num_patches(); ++j) {
    Form wj = X.form_to_patch(w, 0, j);
    for (const auto& [mask, f] : wj.coeffs()) {
      (void)mask;
      for (const auto& d : f.den()) {
        Point p = X.dim() == 1 ? Point::closed_line(X, d.poly.to_upoly(0), j) : Point::curve(X, d.poly, j);
        if (in_patch(p, j)) out.push_back(p);
      }
    }
  }
  sort_unique(out);
  return out;
}

std::vector<Point> singular_points(const Point& c) {
  const Scheme& X = c.scheme();
  std::vector<Point> out;
  for (int j = 0; j < X.num_patches(); ++j) {
    if (!in_patch(c, j)) continue;
    Poly f = curve_in_patch(c, j);
    if (f.total_degree() <= 1) continue;
    for (auto& z : common_zeros({f, f.derivative(0), f.derivative(1)})) out.push_back(Point::rational(X, z, j));
  }
  sort_unique(out);
  return out;
}

std::vector<Point> special_points(const Point& c, const std::vector<Point>& others) {
  const Scheme& X = c.scheme();
  std::vector<Point> out = singular_points(c);
  for (const auto& d : others) {
    if (!d.is_curve() || d == c) continue;
    for (int j = 0; j < X.num_patches(); ++j) {
      if (!in_patch(c, j) || !in_patch(d, j)) continue;
      for (auto& z : common_zeros({curve_in_patch(c, j), curve_in_patch(d, j)}))
        out.push_back(Point::rational(X, z, j));
    }
  }
  sort_unique(out);
  return out;
}

std::vector<Point> pole_support(const Scheme& X, const Form& w) {
  std::vector<Point> out = pole_divisors(X, w);
  if (X.dim() == 2) {
    std::vector<Point> curves = out;
    for (const auto& c : curves) {
      auto sp = special_points(c, curves);
      out.insert(out.end(), sp.begin(), sp.end());
    }
    sort_unique(out);
  }
  return out;
}

std::vector<Point> pole_support(const Scheme& X, const RatFunc& f) { return pole_support(X, Form::function(f)); }

}  // namespace adelic
