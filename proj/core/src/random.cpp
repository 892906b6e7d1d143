#include "adelic/random.hpp"

#include <algorithm>

#include "adelic/factor.hpp"

namespace adelic {

std::uint64_t derive_seed(std::uint64_t seed, const std::string& name, std::uint64_t index) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::uint64_t z = seed ^ h ^ (index * 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

void add_unique(std::vector<Poly>& v, const Poly& p) {
  Poly m = p.monic();
  if (m.is_constant()) return;
  if (std::find(v.begin(), v.end(), m) == v.end()) v.push_back(m);
}

void add_point(std::vector<Point>& v, const Point& p) {
  if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(p);
}

}  // namespace

InstanceGenerator::InstanceGenerator(const Scheme& X, std::uint64_t seed) : X_(X), rng_(seed) {
  const BaseField& k = X.base();
  const Vars& vars = X.patch_vars(0);
  add_point(points_, Point::generic(X));
  if (X.dim() == 1) {
    Poly t = Poly::variable(0, vars, k);
    for (long c : {0L, 1L, -1L, 2L}) add_unique(pool_, t - Poly::constant(Scalar(c, k), vars, k));
    Poly q = t * t + t.one_like();
    auto [unit, fac] = factor_poly(q);
    (void)unit;
    if (fac.size() == 1 && fac[0].mult == 1) add_unique(pool_, q);
    for (const auto& f : pool_) add_point(points_, Point::closed_line(X, f.to_upoly(0)));
    if (X.is_projective()) add_point(points_, Point::infinity(X));
    return;
  }
  Poly x = Poly::variable(0, vars, k), y = Poly::variable(1, vars, k), one = x.one_like();
  for (const Poly& f : {x, y, x + y, x - one, y - one, x + y - one}) add_unique(pool_, f);
  std::vector<Point> curves;
  for (const auto& f : pool_) curves.push_back(Point::curve(X, f));
  if (X.is_projective()) curves.push_back(Point::parse(X, "curve(inf)"));
  for (const auto& c : curves) add_point(points_, c);
  for (const auto& c : curves)
    for (const auto& p : special_points(c, curves)) add_point(points_, p);
  std::sort(points_.begin(), points_.end());
}

int InstanceGenerator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

std::vector<Chain> InstanceGenerator::chains(int length) const {
  std::vector<Chain> out;
  for (const auto& p : points_) {
    auto c = saturated_chains_from(p, length, points_);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

Scalar InstanceGenerator::scalar(int range) { return Scalar(static_cast<long>(uniform(-range, range)), X_.base()); }

Scalar InstanceGenerator::nonzero_scalar(int range) {
  for (;;) {
    Scalar s = scalar(range);
    if (!s.is_zero()) return s;
  }
}

Poly InstanceGenerator::polynomial(int max_degree) {
  const Vars& vars = X_.patch_vars(0);
  const BaseField& k = X_.base();
  const int deg = uniform(0, max_degree);
  Poly p(vars, k);
  if (X_.dim() == 1) {
    for (int i = 0; i <= deg; ++i)
      if (i == deg || coin()) p += Poly::monomial(scalar(), {i}, vars, k);
  } else {
    for (int i = 0; i <= deg; ++i)
      for (int j = 0; i + j <= deg; ++j)
        if (uniform(0, 2) == 0) p += Poly::monomial(scalar(), {i, j}, vars, k);
  }
  if (p.is_zero()) p = Poly::constant(nonzero_scalar(), vars, k);
  return p;
}

RatFunc InstanceGenerator::function(int max_factors, const std::vector<Point>& regular) {
  const Vars& vars = X_.patch_vars(0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Poly num = polynomial(4);
    std::vector<DenFactor> den;
    const int nf = uniform(0, max_factors);
    for (int i = 0; i < nf; ++i) {
      const Poly& f = pool_[static_cast<std::size_t>(uniform(0, static_cast<int>(pool_.size()) - 1))];
      auto it = std::find_if(den.begin(), den.end(), [&](const DenFactor& d) { return d.poly == f; });
      if (it == den.end()) den.push_back({f, uniform(1, 2)});
    }
    RatFunc r(num, den);
    bool ok = true;
    for (const auto& p : regular) ok = ok && regular_at(r, p);
    if (ok) return r;
  }
  return RatFunc::constant(nonzero_scalar(), vars, X_.base());
}

Form InstanceGenerator::top_form(int max_lines) {
  RatFunc g = function(max_lines);
  while (g.is_polynomial() && X_.dim() == 2 && !X_.is_projective()) g = function(max_lines);
  return Form::top(g);
}

Form InstanceGenerator::polynomial_form(int p, int max_degree) {
  const int n = X_.dim();
  Form w(X_.patch_vars(0), X_.base(), p);
  for (int m = 0; m < (1 << n); ++m)
    if (popcount(m) == p && (coin() || w.is_zero())) w.set(m, RatFunc(polynomial(max_degree)));
  if (w.is_zero()) {
    for (int m = 0; m < (1 << n); ++m)
      if (popcount(m) == p) {
        w.set(m, RatFunc(Poly::constant(nonzero_scalar(), X_.patch_vars(0), X_.base())));
        break;
      }
  }
  return w;
}

ResidueComplexElement InstanceGenerator::residue_element(int q) {
  const int n = X_.dim();
  ResidueComplexElement gen(ResidueElement::generic(X_, top_form()));
  if (q == -n) return gen;
  ResidueComplexElement base = gen;
  for (int d = -n; d < q; ++d) base = coboundary_delta(base);
  // rescale components by functions regular there and add free closed tails
  ResidueComplexElement out;
  for (const auto& [p, e] : base.terms())
    if (coin()) out.add(times_function(e, function(2, {p})));
    else out.add(e);
  if (q == 0 && coin()) {
    std::vector<Point> closed;
    for (const auto& p : points_)
      if (p.is_closed()) closed.push_back(p);
    const Point& x = closed[static_cast<std::size_t>(uniform(0, static_cast<int>(closed.size()) - 1))];
    Tail t;
    const int deg = x.residue_field()->degree();
    for (int i = 0; i < uniform(1, 3); ++i) {
      std::vector<Scalar> c;
      for (int j = 0; j < deg; ++j) c.push_back(scalar());
      FieldElem w(x.residue_field(), ScalarPoly(c, Scalar::zero(X_.base())));
      if (w.is_zero()) continue;
      if (n == 1) t[{uniform(0, 2), 0}] = w;
      else t[{uniform(0, 1), uniform(0, 1)}] = w;
    }
    out.add(ResidueElement::closed(x, t));
  }
  return out;
}

Adele InstanceGenerator::explicit_adele(int q, const std::vector<Point>& avoid) {
  std::vector<Chain> all = chains(q), usable;
  for (const auto& c : all) {
    bool ok = true;
    for (const auto& p : c.points()) ok = ok && std::find(avoid.begin(), avoid.end(), p) == avoid.end();
    if (ok) usable.push_back(c);
  }
  std::map<Chain, RatFunc> values;
  if (!usable.empty()) {
    const int m = uniform(1, 3);
    for (int i = 0; i < m; ++i) {
      const Chain& c = usable[static_cast<std::size_t>(uniform(0, static_cast<int>(usable.size()) - 1))];
      values[c] = function(2, {c.front()});
    }
  }
  return Adele::explicit_values(X_, q, values);
}

Adele InstanceGenerator::adele(int q, bool symbolic) {
  Adele a = explicit_adele(q);
  if (!symbolic) return a;
  auto global = [&] {
    RatFunc r = X_.is_projective() ? RatFunc::constant(nonzero_scalar(), X_.patch_vars(0), X_.base()) : RatFunc(polynomial(2));
    return Adele::global(X_, r);
  };
  Adele s = global();
  for (int i = 0; i < q; ++i) s = Adele::coface(uniform(0, i + 1), s);
  a = a + nonzero_scalar() * s;
  if (q >= 1 && coin()) {
    int q1 = uniform(0, q - 1);
    a = a + explicit_adele(q1) * (q - q1 == 1 ? Adele::coface(uniform(0, 1), global()) : explicit_adele(q - q1));
  }
  return a;
}

DualForm InstanceGenerator::dual_form(int p, int q) {
  const int n = X_.dim();
  if (q == -n) {
    Form gamma(X_.patch_vars(0), X_.base(), n + p);
    for (int m = 0; m < (1 << n); ++m)
      if (popcount(m) == n + p && (coin() || gamma.is_zero())) gamma.set(m, function(3));
    return DualForm::generic_form(X_, gamma);
  }
  DualForm prev = dual_form(p, q - 1);
  DualForm out = d_double_prime(prev);
  if (coin()) out = out + d_double_prime(dual_form(p, q - 1));
  return out;
}

AdeleForm InstanceGenerator::adele_form(int p, int q) {
  if (p == 0) return AdeleForm::from_adele(adele(q));
  Form alpha = polynomial_form(p);
  if (!X_.is_projective()) return AdeleForm::term(alpha, adele(q));
  std::vector<Point> away;
  for (const auto& x : points_)
    if (x.patch() != 0) away.push_back(x);
  return AdeleForm::term(alpha, explicit_adele(q, away));
}

}  // namespace adelic
