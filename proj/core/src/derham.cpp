#include "adelic/derham.hpp"

#include <algorithm>

namespace adelic {

struct AdeleFormNode {
  enum class Kind { Term, Sum, Scale, DPrime, Coboundary, Product };
  Kind kind = Kind::Term;
  Scheme X;
  int p = 0;
  int q = 0;
  Form alpha;
  Adele a;
  Scalar c;
  std::shared_ptr<const AdeleFormNode> l, r;
};

namespace {

using Node = AdeleFormNode;
using Kind = AdeleFormNode::Kind;
using NodePtr = std::shared_ptr<const Node>;

Form zero_form(const Scheme& X, int p) { return Form(X.patch_vars(0), X.base(), p); }

RatFunc in_patch0(const Scheme& X, const RatFunc& f) {
  if (f.vars() == X.patch_vars(0)) return f;
  if (!f.is_constant()) fail(ErrorCode::VariableMismatch, "values use patch-0 coordinates");
  return RatFunc::constant(f.num().constant_value(), X.patch_vars(0), X.base());
}

bool form_regular_at(const Form& w, const Point& x) {
  if (x.is_generic()) return true;
  const Scheme& X = x.scheme();
  Form wx = x.patch() == 0 ? w : X.form_to_patch(w, 0, x.patch());
  for (const auto& [m, f] : wx.coeffs()) {
    (void)m;
    if (!regular_at(x.patch() == 0 ? f : X.function_to_patch(f, x.patch(), 0), x)) return false;
  }
  return true;
}

Form eval_node(const Node& n, const Chain& chain) {
  if (chain.length() != n.q) fail(ErrorCode::DegreeMismatch, "evaluating an adele form of degree " + std::to_string(n.q) + " at " + chain.str());
  if (!is_reduced(chain)) return zero_form(n.X, n.p);
  switch (n.kind) {
    case Kind::Term: {
      RatFunc v = n.a.evaluate(chain);
      if (v.is_zero()) return zero_form(n.X, n.p);
      Form w = in_patch0(n.X, v) * n.alpha;
      if (!form_regular_at(w, chain.front()))
        fail(ErrorCode::NotInCompletion, w.str() + " is not regular at " + chain.front().str());
      return w;
    }
    case Kind::Sum: return eval_node(*n.l, chain) + eval_node(*n.r, chain);
    case Kind::Scale: return n.c * eval_node(*n.l, chain);
    case Kind::DPrime: return exterior_d(eval_node(*n.l, chain));
    case Kind::Coboundary: {
      Form acc = zero_form(n.X, n.p);
      for (int i = 0; i <= n.q; ++i) {
        Form v = eval_node(*n.l, face(chain, i));
        acc = (i % 2 == 0) ? acc + v : acc - v;
      }
      return acc;
    }
    case Kind::Product: {
      const int qa = n.l->q;
      Form x = eval_node(*n.l, segment(chain, 0, qa));
      if (x.is_zero()) return zero_form(n.X, n.p);
      Form y = eval_node(*n.r, segment(chain, qa, n.q));
      Form w = wedge(x, y);
      return (qa * n.r->p) % 2 ? -w : w;
    }
  }
  return zero_form(n.X, n.p);
}

void collect_node(const Node& n, std::vector<RatFunc>& fs, std::vector<Point>& pts) {
  switch (n.kind) {
    case Kind::Term:
      n.a.collect_support(fs, pts);
      for (const auto& [m, f] : n.alpha.coeffs()) {
        (void)m;
        fs.push_back(f);
      }
      return;
    case Kind::Sum:
    case Kind::Product:
      collect_node(*n.l, fs, pts);
      collect_node(*n.r, fs, pts);
      return;
    case Kind::Scale:
    case Kind::DPrime:
    case Kind::Coboundary: collect_node(*n.l, fs, pts); return;
  }
}

std::string str_node(const Node& n) {
  switch (n.kind) {
    case Kind::Term: return "(" + n.alpha.str() + ")(x)" + n.a.str();
    case Kind::Sum: return "(" + str_node(*n.l) + " + " + str_node(*n.r) + ")";
    case Kind::Scale: return n.c.str() + "*" + str_node(*n.l);
    case Kind::DPrime: return "d(" + str_node(*n.l) + ")";
    case Kind::Coboundary: return "del(" + str_node(*n.l) + ")";
    case Kind::Product: return "(" + str_node(*n.l) + " . " + str_node(*n.r) + ")";
  }
  return "";
}

NodePtr make(Kind k, const Scheme& X, int p, int q, NodePtr l = nullptr, NodePtr r = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->X = X;
  n->p = p;
  n->q = q;
  n->l = std::move(l);
  n->r = std::move(r);
  return n;
}

const Scheme& common_scheme(const AdeleForm& a, const AdeleForm& b) {
  if (a.is_null()) return b.scheme();
  if (!b.is_null() && a.scheme() != b.scheme()) fail(ErrorCode::InvalidPoint, "adele forms on different schemes");
  return a.scheme();
}

}  // namespace

AdeleForm AdeleForm::term(const Form& alpha, const Adele& a) {
  const Scheme& X = a.scheme();
  if (alpha.vars() != X.patch_vars(0)) fail(ErrorCode::VariableMismatch, "forms use patch-0 coordinates");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Term;
  n->X = X;
  n->p = alpha.degree();
  n->q = a.degree();
  n->alpha = alpha;
  n->a = a;
  AdeleForm out(X);
  out.parts_[{n->p, n->q}] = n;
  return out;
}

AdeleForm AdeleForm::from_adele(const Adele& a) {
  const Scheme& X = a.scheme();
  return term(Form::function(RatFunc::constant(Scalar::one(X.base()), X.patch_vars(0), X.base())), a);
}

AdeleForm AdeleForm::from_form(const Scheme& X, const Form& alpha) { return term(alpha, Adele::one(X)); }

std::vector<AdeleForm::Bidegree> AdeleForm::bidegrees() const {
  std::vector<Bidegree> out;
  for (const auto& [b, n] : parts_) out.push_back(b);
  return out;
}

AdeleForm AdeleForm::part(int p, int q) const {
  AdeleForm out(X_);
  auto it = parts_.find({p, q});
  if (it != parts_.end()) out.parts_.insert(*it);
  return out;
}

Form AdeleForm::evaluate(int p, const Chain& chain) const {
  auto it = parts_.find({p, chain.length()});
  if (it == parts_.end()) return zero_form(X_, p);
  return eval_node(*it->second, chain);
}

AdeleForm operator+(const AdeleForm& a, const AdeleForm& b) {
  AdeleForm out(common_scheme(a, b));
  out.parts_ = a.parts_;
  for (const auto& [bd, n] : b.parts_) {
    auto it = out.parts_.find(bd);
    if (it == out.parts_.end()) out.parts_[bd] = n;
    else it->second = make(Kind::Sum, out.X_, bd.first, bd.second, it->second, n);
  }
  return out;
}

AdeleForm operator*(const Scalar& c, const AdeleForm& a) {
  AdeleForm out(a.X_);
  for (const auto& [bd, n] : a.parts_) {
    auto m = std::make_shared<Node>(*make(Kind::Scale, a.X_, bd.first, bd.second, n));
    m->c = c;
    out.parts_[bd] = m;
  }
  return out;
}

AdeleForm AdeleForm::operator-() const { return Scalar(-1L, X_.base()) * *this; }
AdeleForm operator-(const AdeleForm& a, const AdeleForm& b) { return a + (-b); }

AdeleForm operator*(const AdeleForm& a, const AdeleForm& b) {
  AdeleForm out(common_scheme(a, b));
  const int n = out.X_.dim();
  for (const auto& [ba, na] : a.parts_)
    for (const auto& [bb, nb] : b.parts_) {
      const int p = ba.first + bb.first;
      if (p > n) continue;
      out = out + [&] {
        AdeleForm t(out.X_);
        t.parts_[{p, ba.second + bb.second}] = make(Kind::Product, out.X_, p, ba.second + bb.second, na, nb);
        return t;
      }();
    }
  return out;
}

void AdeleForm::collect_support(std::vector<RatFunc>& functions, std::vector<Point>& points) const {
  for (const auto& [bd, n] : parts_) collect_node(*n, functions, points);
}

std::string AdeleForm::str() const {
  std::string s;
  for (const auto& [bd, n] : parts_) {
    if (!s.empty()) s += " + ";
    s += "A[" + std::to_string(bd.first) + "," + std::to_string(bd.second) + "]" + str_node(*n);
  }
  return s.empty() ? "0" : s;
}

AdeleForm d_prime(const AdeleForm& a) {
  AdeleForm out(a.X_);
  for (const auto& [bd, n] : a.parts_)
    if (bd.first < a.X_.dim()) out.parts_[{bd.first + 1, bd.second}] = make(Kind::DPrime, a.X_, bd.first + 1, bd.second, n);
  return out;
}

AdeleForm d_double_prime(const AdeleForm& a) {
  AdeleForm out(a.X_);
  for (const auto& [bd, n] : a.parts_) {
    NodePtr c = make(Kind::Coboundary, a.X_, bd.first, bd.second + 1, n);
    if (bd.first % 2) {
      auto m = std::make_shared<Node>(*make(Kind::Scale, a.X_, bd.first, bd.second + 1, c));
      m->c = Scalar(-1L, a.X_.base());
      c = m;
    }
    out.parts_[{bd.first, bd.second + 1}] = c;
  }
  return out;
}

AdeleForm d_total(const AdeleForm& a) { return d_prime(a) + d_double_prime(a); }

bool equal_on(const AdeleForm& a, const AdeleForm& b, const std::vector<Point>& candidates) {
  AdeleForm d = a - b;
  for (const auto& [p, q] : d.bidegrees())
    for (const auto& x : candidates)
      for (const auto& xi : saturated_chains_from(x, q, candidates))
        if (!d.evaluate(p, xi).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------- dual forms

namespace {

std::vector<int> masks_of_degree(int n, int deg) {
  std::vector<int> out;
  for (int m = 0; m < (1 << n); ++m)
    if (popcount(m) == deg) out.push_back(m);
  return out;
}

const Vars& payload_vars(const Point& x) {
  const Scheme& X = x.scheme();
  return X.patch_vars(x.is_generic() ? 0 : x.patch());
}

int payload_patch(const Point& x) { return x.is_generic() ? 0 : x.patch(); }

// Basis form dx_J of x's patch, written in patch 0.
Form basis_in_patch0(const Point& x, int mask) {
  const Scheme& X = x.scheme();
  const int j = payload_patch(x);
  Form b = Form::basis(mask, X.patch_vars(j), X.base());
  return j == 0 ? b : X.form_to_patch(b, j, 0);
}

// phi' with phi'(a) = phi(d a / d x_k) on payloads.
ResidueElement transpose_partial(const ResidueElement& e, int k) {
  const Point& x = e.point();
  if (x.is_closed()) {
    Tail out;
    for (const auto& [m, w] : e.tail()) {
      Poly::Mono mm = m;
      mm[static_cast<std::size_t>(k)] += 1;
      out[mm] = Scalar(static_cast<long>(mm[static_cast<std::size_t>(k)]), x.scheme().base()) * w;
    }
    return ResidueElement::closed(x, std::move(out));
  }
  RatFunc g = -e.form_coeff().derivative(k);
  if (x.is_generic()) return ResidueElement::generic(x.scheme(), g);
  return ResidueElement::curve(x, g);
}

}  // namespace

DualForm DualForm::from_residue(const Scheme& X, const ResidueComplexElement& phi) {
  DualForm out(X);
  for (const auto& [x, e] : phi.terms()) out.add(0, x, {{0, e}});
  return out;
}

DualForm DualForm::generic_form(const Scheme& X, const Form& gamma) {
  const int n = X.dim();
  const int p = gamma.degree() - n;
  DualForm out(X);
  Values v;
  for (int I : masks_of_degree(n, -p)) {
    Form w = wedge(gamma, Form::basis(I, X.patch_vars(0), X.base()));
    RatFunc g = w.top_coeff();
    if (!g.is_zero()) v.emplace(I, ResidueElement::generic(X, g));
  }
  out.add(p, Point::generic(X), v);
  return out;
}

DualForm DualForm::component(int p, const Point& x, const Values& values) {
  DualForm out(x.scheme());
  out.add(p, x, values);
  return out;
}

void DualForm::add(int p, const Point& x, const Values& values) {
  if (X_.dim() == 0 && x.scheme().dim() > 0) X_ = x.scheme();
  if (p > 0 || -p > X_.dim()) return;
  Values& cur = c_[{p, x}];
  for (const auto& [m, e] : values) {
    if (e.point() != x) fail(ErrorCode::InvalidPoint, "value at the wrong point");
    auto it = cur.find(m);
    if (it == cur.end()) cur.emplace(m, e);
    else it->second = it->second + e;
    if (cur.at(m).is_zero()) cur.erase(m);
  }
  if (cur.empty()) c_.erase({p, x});
}

bool DualForm::is_zero() const { return c_.empty(); }

DualForm DualForm::part(int p, int q) const {
  DualForm out(X_);
  for (const auto& [key, v] : c_)
    if (key.first == p && -key.second.dim() == q) out.c_.emplace(key, v);
  return out;
}

std::vector<std::pair<int, int>> DualForm::bidegrees() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [key, v] : c_) out.emplace_back(key.first, -key.second.dim());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ResidueElement DualForm::apply(int p, const Point& x, const Form& beta) const {
  ResidueElement acc = ResidueElement::zero(x);
  auto it = c_.find({p, x});
  if (it == c_.end()) return acc;
  if (beta.degree() != -p) fail(ErrorCode::DegreeMismatch, "dual form of type " + std::to_string(p) + " applied to a " + std::to_string(beta.degree()) + "-form");
  const int j = payload_patch(x);
  Form b = j == 0 ? beta : X_.form_to_patch(beta, 0, j);
  for (const auto& [I, f] : b.coeffs()) {
    auto v = it->second.find(I);
    if (v == it->second.end()) continue;
    acc = acc + times_function(v->second, j == 0 ? f : X_.function_to_patch(f, j, 0));
  }
  return acc;
}

ResidueComplexElement DualForm::apply(int p, const Form& beta) const {
  ResidueComplexElement out;
  for (const auto& [key, v] : c_)
    if (key.first == p) out.add(apply(p, key.second, beta));
  return out;
}

DualForm operator+(const DualForm& a, const DualForm& b) {
  DualForm out = a;
  for (const auto& [key, v] : b.c_) out.add(key.first, key.second, v);
  return out;
}

DualForm operator*(const Scalar& c, const DualForm& a) {
  DualForm out(a.X_);
  for (const auto& [key, v] : a.c_) {
    DualForm::Values w;
    for (const auto& [m, e] : v) w.emplace(m, c * e);
    out.add(key.first, key.second, w);
  }
  return out;
}

DualForm DualForm::operator-() const { return Scalar(-1L, X_.base()) * *this; }
DualForm operator-(const DualForm& a, const DualForm& b) { return a + (-b); }

std::string DualForm::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (const auto& [key, v] : c_) {
    const Vars& vars = payload_vars(key.second);
    for (const auto& [m, e] : v) {
      std::string b;
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (m & (1 << i)) b += (b.empty() ? "d" : "^d") + vars[i];
      if (b.empty()) b = "1";
      s += "F[" + std::to_string(key.first) + "," + std::to_string(-key.second.dim()) + "] " + key.second.str() + " (" + b + ") -> " + e.str() + "\n";
    }
  }
  return s;
}

DualForm dual_d(const DualForm& phi) {
  const Scheme& X = phi.scheme();
  const int n = X.dim();
  DualForm out(X);
  for (const auto& [key, vals] : phi.components()) {
    const int p = key.first;
    if (p == 0) continue;
    DualForm::Values nv;
    for (int J : masks_of_degree(n, -p - 1))
      for (int k = 0; k < n; ++k) {
        if (J & (1 << k)) continue;
        auto it = vals.find(J | (1 << k));
        if (it == vals.end()) continue;
        ResidueElement t = transpose_partial(it->second, k);
        if (wedge_sign(1 << k, J) < 0) t = -t;
        auto cur = nv.find(J);
        if (cur == nv.end()) nv.emplace(J, t);
        else cur->second = cur->second + t;
      }
    out.add(p + 1, key.second, nv);
  }
  return out;
}

DualForm d_prime(const DualForm& phi) {
  DualForm out(phi.scheme());
  for (const auto& [p, q] : phi.bidegrees()) {
    DualForm t = dual_d(phi.part(p, q));
    out = out + (((p + q + 1) % 2 == 0) ? t : -t);
  }
  return out;
}

DualForm d_double_prime(const DualForm& phi, int cap) {
  const Scheme& X = phi.scheme();
  const int n = X.dim();
  DualForm out(X);
  for (const auto& [key, vals] : phi.components()) {
    const auto& [p, x] = key;
    if (x.is_closed()) continue;
    std::vector<Point> ys;
    for (const auto& [m, e] : vals) {
      auto c = delta_candidates(e);
      ys.insert(ys.end(), c.begin(), c.end());
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    const bool neg = (x.dim() + 1) % 2 != 0;
    for (const auto& y : ys) {
      DualForm::Values nv;
      for (int J : masks_of_degree(n, -p)) {
        ResidueElement e = delta_step(phi.apply(p, x, basis_in_patch0(y, J)), y, cap);
        if (neg) e = -e;
        if (!e.is_zero()) nv.emplace(J, e);
      }
      out.add(p, y, nv);
    }
  }
  return out;
}

DualForm d_total(const DualForm& phi, int cap) { return d_prime(phi) + d_double_prime(phi, cap); }

namespace {

std::vector<Point> form_action_candidates(const DualForm& phi, const AdeleForm& a) {
  const Scheme& X = phi.scheme();
  std::vector<RatFunc> functions;
  std::vector<Point> pts;
  a.collect_support(functions, pts);
  ResidueComplexElement carrier;
  for (const auto& [key, vals] : phi.components())
    for (const auto& [m, e] : vals) {
      if (e.point().is_closed()) {
        pts.push_back(e.point());
        continue;
      }
      // poles of the basis forms of other patches enter through the payload
      ResidueComplexElement one(e);
      std::vector<Point> c = action_candidates(one, Adele::global(X, RatFunc::constant(Scalar::one(X.base()), X.patch_vars(0), X.base())));
      pts.insert(pts.end(), c.begin(), c.end());
    }
  Adele support = Adele::one(X);
  ResidueComplexElement none;
  std::vector<Point> base = action_candidates(none, support);
  pts.insert(pts.end(), base.begin(), base.end());
  for (const auto& f : functions) {
    auto d = pole_divisors(X, Form::function(f));
    pts.insert(pts.end(), d.begin(), d.end());
  }
  if (X.is_projective()) {
    for (int j = 1; j < X.num_patches(); ++j) {
      // divisor at infinity: where the patch-0 basis forms have poles
      Form vol = Form::top(RatFunc::constant(Scalar::one(X.base()), X.patch_vars(0), X.base()));
      auto d = pole_divisors(X, vol);
      pts.insert(pts.end(), d.begin(), d.end());
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (X.dim() == 2) {
    std::vector<Point> curves;
    for (const auto& p : pts)
      if (p.is_curve()) curves.push_back(p);
    for (const auto& c : curves) {
      auto sp = special_points(c, curves);
      pts.insert(pts.end(), sp.begin(), sp.end());
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  }
  return pts;
}

}  // namespace

DualForm act_forms(const DualForm& phi, const AdeleForm& a, int cap) {
  const Scheme& X = phi.scheme();
  DualForm out(X);
  if (phi.is_zero() || a.is_null()) return out;
  const int n = X.dim();
  const std::vector<Point> cands = form_action_candidates(phi, a);
  for (const auto& [key, vals] : phi.components()) {
    const auto& [p, x] = key;
    for (const auto& [pp, qq] : a.bidegrees()) {
      const int pr = p + pp;
      if (pr > 0 || x.dim() < qq) continue;
      const bool neg = (pr * qq) % 2 != 0;
      for (const auto& xi : saturated_chains_from(x, qq, cands)) {
        Form v = a.evaluate(pp, xi);
        if (v.is_zero()) continue;
        const Point& y = xi.back();
        DualForm::Values nv;
        for (int J : masks_of_degree(n, -pr)) {
          ResidueElement e = phi.apply(p, x, wedge(v, basis_in_patch0(y, J)));
          if (qq > 0) e = delta_chain(e, xi, cap);
          if (neg) e = -e;
          if (!e.is_zero()) nv.emplace(J, e);
        }
        out.add(pr, y, nv);
      }
    }
  }
  return out;
}

std::vector<FieldElem> principal_part(const DualForm& phi, int p, const Point& x) {
  if (x.scheme().dim() != 1 || !x.is_closed() || (p != 0 && p != -1))
    fail(ErrorCode::Unsupported, "principal parts are implemented for closed points of a line");
  auto it = phi.components().find({p, x});
  std::vector<FieldElem> out;
  if (it == phi.components().end()) return out;
  auto v = it->second.find(p == 0 ? 0 : 1);
  if (v == it->second.end()) return out;
  for (const auto& [m, w] : v->second.tail()) {
    if (static_cast<int>(out.size()) <= m[0]) out.resize(static_cast<std::size_t>(m[0]) + 1, w.zero_like());
    out[static_cast<std::size_t>(m[0])] = w;
  }
  return out;
}

DualForm from_principal_part(int p, const Point& x, const std::vector<FieldElem>& polar) {
  Tail t;
  for (std::size_t i = 0; i < polar.size(); ++i)
    if (!polar[i].is_zero()) t[{static_cast<int>(i), 0}] = polar[i];
  return DualForm::component(p, x, {{p == 0 ? 0 : 1, ResidueElement::closed(x, t)}});
}

}  // namespace adelic
