#include "adelic/suite.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "adelic/cohomology.hpp"
#include "adelic/parse.hpp"
#include "adelic/random.hpp"
#include "adelic/trace.hpp"

namespace adelic {

namespace {

struct Instance {
  std::string input;
  std::optional<std::string> failure;
};

using Check = std::function<Instance(const Scheme&, InstanceGenerator&, int, int)>;

template <class T>
T signed_by(int s, const T& x) {
  return s % 2 ? -x : x;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Instance verdict(std::string input, bool ok, const std::string& what) {
  Instance r{std::move(input), std::nullopt};
  if (!ok) r.failure = what;
  return r;
}

std::vector<Point> closure_points(const Scheme& X, const InstanceGenerator& gen, const std::vector<RatFunc>& fs,
                                  std::vector<Point> pts) {
  pts.insert(pts.end(), gen.points().begin(), gen.points().end());
  for (const auto& f : fs) {
    auto d = pole_divisors(X, Form::function(f));
    pts.insert(pts.end(), d.begin(), d.end());
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

ResidueComplexElement restrict_to_patch0(const ResidueComplexElement& e) {
  ResidueComplexElement out;
  for (const auto& [p, v] : e.terms())
    if (p.patch() == 0) out.add(v);
  return out;
}

// ------------------------------------------------------------------ checks

Instance residue_formula(const Scheme& X, InstanceGenerator& gen, int i, int cap) {
  const BaseField& k = X.base();
  const Vars s{"s1", "s2"};
  if (i < 2) {
    Form beta = parse_form(i == 0 ? "1/((s1)*(s2)) ds1^ds2" : "1/((s1)*(s2)*(1-s1-s2)) ds1^ds2", s, k);
    Scalar r = laurent_residue(beta, RatFunc::constant(Scalar::one(k), s, k), cap);
    return verdict("beta = " + beta.str() + ", a = 1", r == Scalar::one(k), "residue " + r.str() + ", expected 1");
  }
  auto poly = [&] {
    Poly p(s, k);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; a + b <= 2; ++b) p += Poly::monomial(gen.scalar(), {a, b}, s, k);
    return p;
  };
  Poly g = poly(), a = poly();
  Poly s1 = Poly::variable(0, s, k), s2 = Poly::variable(1, s, k);
  std::vector<DenFactor> den{{s1, 1}, {s2, 1}};
  const bool third = gen.coin();
  if (third) den.push_back({s1 + s2 - s1.one_like(), 1});
  Form beta = Form::top(RatFunc(g, den));
  Scalar r = laurent_residue(beta, RatFunc(a), cap);
  Scalar expect = a.coeff({0, 0}) * g.coeff({0, 0});
  if (third) expect = -expect;
  return verdict("beta = " + beta.str() + ", a = " + a.str(), r == expect, "residue " + r.str() + ", expected " + expect.str());
}

Instance residue_theorem(const Scheme& X, InstanceGenerator& gen, int, int cap) {
  Form w = gen.top_form(3);
  ResidueComplexElement d = coboundary_delta(ResidueComplexElement(ResidueElement::generic(X, w)), cap);
  Scalar s = d.is_zero() ? Scalar::zero(X.base()) : residue_sum(d);
  return verdict("omega = " + w.str(), s.is_zero(), "sum of residues " + s.str());
}

Instance parshin(const Scheme& X, InstanceGenerator& gen, int i, int cap) {
  const BaseField& k = X.base();
  Form w = i == 0 ? parse_form("1/((x)*(y)*(x+y)) dx^dy", X.patch_vars(0), k) : gen.top_form(3);
  ResidueElement g = ResidueElement::generic(X, w);
  std::vector<Point> curves = pole_divisors(X, w);
  std::vector<Point> closed;
  if (i == 0) closed.push_back(Point::parse(X, "pt(x=0,y=0)"));
  else
    for (const auto& p : pole_support(X, w))
      if (p.is_closed()) closed.push_back(p);
  for (const auto& x : closed) {
    ResidueElement acc = ResidueElement::zero(x);
    for (const auto& c : curves)
      if (specializes(c, x)) acc = acc + delta_chain(g, Chain({Point::generic(X), c, x}), cap);
    if (!acc.is_zero())
      return verdict("omega = " + w.str(), false, "sum of composed residues at " + x.str() + " is " + acc.str());
  }
  return verdict("omega = " + w.str(), true, "");
}

Instance delta_squared(const Scheme& X, InstanceGenerator& gen, int, int cap) {
  Form w = gen.top_form(3);
  ResidueComplexElement e(ResidueElement::generic(X, w));
  ResidueComplexElement dd = coboundary_delta(coboundary_delta(e, cap), cap);
  return verdict("omega = " + w.str(), dd.is_zero(), "delta^2 = " + dd.str());
}

Instance leibniz(const Scheme& X, InstanceGenerator& gen, int, int cap) {
  const int n = X.dim();
  const int q = gen.uniform(-n, 0);
  const int qa = gen.uniform(0, -q);
  ResidueComplexElement phi = gen.residue_element(q);
  Adele a = gen.adele(qa);
  ResidueComplexElement lhs = coboundary_delta(act(phi, a, cap), cap);
  ResidueComplexElement rhs = act(coboundary_delta(phi, cap), a, cap) + signed_by(q, act(phi, a.coboundary(), cap));
  ResidueComplexElement diff = lhs - rhs;
  return verdict("phi = " + phi.str() + "; a = " + a.str(), diff.is_zero(), "difference " + diff.str());
}

Instance associativity(const Scheme& X, InstanceGenerator& gen, int i, int cap) {
  ResidueComplexElement phi = gen.residue_element(-2);
  Adele a, b;
  if (i % 2 == 0) {
    std::vector<Chain> c1, c2;
    for (const auto& c : gen.chains(1)) (c.front().is_generic() ? c1 : c2).push_back(c);
    const Chain& xi = c1[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(c1.size()) - 1))];
    std::vector<Chain> fitting;
    for (const auto& c : c2)
      if (c.front() == xi.back()) fitting.push_back(c);
    const Chain& eta = fitting[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(fitting.size()) - 1))];
    a = Adele::explicit_values(X, 1, {{xi, gen.function(2)}});
    b = Adele::explicit_values(X, 1, {{eta, gen.function(2, {eta.front()})}});
  } else {
    a = gen.adele(1);
    b = gen.adele(1);
  }
  ResidueComplexElement lhs = act(act(phi, a, cap), b, cap);
  ResidueComplexElement rhs = act(phi, a * b, cap);
  return verdict("phi = " + phi.str() + "; a = " + a.str() + "; b = " + b.str(), lhs == rhs, "difference " + (lhs - rhs).str());
}

Instance unit_coface(const Scheme& X, InstanceGenerator& gen, int i, int cap) {
  const int n = X.dim();
  const int q = -n + (i % (n + 1));
  ResidueComplexElement phi = gen.residue_element(q);
  Adele d1 = Adele::coface(1, Adele::one(X));
  ResidueComplexElement lhs = act(phi, d1, cap);
  ResidueComplexElement rhs = signed_by(q + 1, coboundary_delta(phi, cap));
  return verdict("phi = " + phi.str(), lhs == rhs, "difference " + (lhs - rhs).str());
}

Instance regular_forms(const Scheme& X, InstanceGenerator& gen, int i, int cap) {
  const BaseField& k = X.base();
  Form alpha = parse_form("dt", X.patch_vars(0), k);
  std::vector<Point> away;
  for (const auto& p : gen.points())
    if (p.patch() != 0) away.push_back(p);
  Adele a = gen.explicit_adele(i % 2, away);
  if (i % 4 == 1 && !X.is_projective()) a = a + Adele::coface(gen.uniform(0, 1), Adele::global(X, RatFunc(gen.polynomial(2))));
  ResidueComplexElement lhs = restrict_to_patch0(signed_by(X.dim(), coboundary_delta(regular_forms_map(alpha, a, cap), cap)));
  ResidueComplexElement rhs = restrict_to_patch0(regular_forms_map(alpha, a.coboundary(), cap));
  return verdict("alpha = dt; a = " + a.str(), lhs == rhs, "difference " + (lhs - rhs).str());
}

Instance trace_linearity(const Scheme& X, InstanceGenerator& gen, int i, int cap) {
  const BaseField& k = X.base();
  const bool power = i % 2 == 0 && k.characteristic() != 2;
  P1Map f = power ? P1Map::power(X, 2)
                  : P1Map::mobius(X, Scalar(2L, k), Scalar::one(k), Scalar::one(k), Scalar(-1L, k));
  const int q = gen.uniform(-1, 0);
  ResidueComplexElement phi = gen.residue_element(q);
  Adele a = gen.adele(gen.uniform(0, -q));
  ResidueComplexElement lhs = trace_pushforward(f, act(phi, Adele::pullback(f, a), cap));
  ResidueComplexElement rhs = act(trace_pushforward(f, phi), a, cap);
  return verdict("f = " + f.str() + "; phi = " + phi.str() + "; a = " + a.str(), lhs == rhs, "difference " + (lhs - rhs).str());
}

AdeleForm mixed_adele_form(InstanceGenerator& gen, int n) {
  AdeleForm a = gen.adele_form(gen.uniform(0, n), gen.uniform(0, n));
  AdeleForm b = gen.adele_form(gen.uniform(0, n), gen.uniform(0, n));
  return a + b;
}

Instance dg_module(const Scheme& X, InstanceGenerator& gen, int, int cap) {
  const int n = X.dim();
  const int p = gen.uniform(-n, 0), q = gen.uniform(-n, 0);
  DualForm phi = gen.dual_form(p, q);
  AdeleForm a = mixed_adele_form(gen, n);
  DualForm lhs = d_total(act_forms(phi, a, cap), cap);
  DualForm rhs = act_forms(d_total(phi, cap), a, cap) + signed_by(p + q, act_forms(phi, d_total(a), cap));
  return verdict("phi = " + phi.str() + "; a = " + a.str(), lhs == rhs, "difference " + (lhs - rhs).str());
}

Instance double_complex(const Scheme& X, InstanceGenerator& gen, int i, int cap) {
  const int n = X.dim();
  if (i % 2 == 0) {
    DualForm phi = gen.dual_form(gen.uniform(-n, 0), gen.uniform(-n, 0));
    std::string input = "phi = " + phi.str();
    if (!d_prime(d_prime(phi)).is_zero()) return verdict(input, false, "D'D' != 0");
    if (!d_double_prime(d_double_prime(phi, cap), cap).is_zero()) return verdict(input, false, "D''D'' != 0");
    if (!(d_prime(d_double_prime(phi, cap)) + d_double_prime(d_prime(phi), cap)).is_zero())
      return verdict(input, false, "D'D'' + D''D' != 0");
    return verdict(input, d_total(d_total(phi, cap), cap).is_zero(), "D^2 != 0");
  }
  AdeleForm a = mixed_adele_form(gen, n);
  std::vector<RatFunc> fs;
  std::vector<Point> pts;
  a.collect_support(fs, pts);
  std::vector<Point> cands = closure_points(X, gen, fs, pts);
  AdeleForm zero(X);
  std::string input = "a = " + a.str();
  if (!equal_on(d_prime(d_prime(a)), zero, cands)) return verdict(input, false, "D'D' != 0");
  if (!equal_on(d_double_prime(d_double_prime(a)), zero, cands)) return verdict(input, false, "D''D'' != 0");
  if (!equal_on(d_prime(d_double_prime(a)) + d_double_prime(d_prime(a)), zero, cands)) return verdict(input, false, "D'D'' + D''D' != 0");
  return verdict(input, equal_on(d_total(d_total(a)), zero, cands), "D^2 != 0");
}

Instance cohomology(const Scheme& X, InstanceGenerator&, int i, int) {
  const int n = -4 + (i % 9);
  CohomologyDims d = line_bundle_cohomology(X, n);
  const int h0 = std::max(n + 1, 0), h1 = std::max(-n - 1, 0);
  return verdict("O(" + std::to_string(n) + ")", d.h0 == h0 && d.h1 == h1,
                 "h0 = " + std::to_string(d.h0) + ", h1 = " + std::to_string(d.h1) + ", expected " + std::to_string(h0) + ", " +
                     std::to_string(h1));
}

Instance serre(const Scheme& X, InstanceGenerator&, int i, int) {
  const int n = 2 + (i % 3);
  Matrix m = serre_pairing_matrix(X, n);
  const int r = matrix_rank(m);
  return verdict("n = " + std::to_string(n), r == n - 1 && static_cast<int>(m.size()) == n - 1,
                 "pairing rank " + std::to_string(r) + " on " + std::to_string(m.size()) + " forms");
}

Instance classical(const Scheme& X, InstanceGenerator& gen, int, int) {
  const int order = 6;
  std::vector<Point> places{Point::parse(X, "pt(t=0)"), Point::parse(X, "pt(t=1)")};
  if (X.is_projective()) places.push_back(Point::infinity(X));
  RatFunc f = gen.function(3);
  Adele principal = -Adele::explicit_values(X, 0, {{Chain({Point::generic(X)}), f}}).coboundary();
  for (const auto& x : places) {
    Series c = classical_component(principal, x, order);
    Series e = expand_at_place(X, f, x, order);
    if (c != e) return verdict("f = " + f.str(), false, "component at " + x.str() + " is " + c.str() + ", expected " + e.str());
  }
  const Point& x = places[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(places.size()) - 1))];
  RatFunc g = gen.function(2, {x});
  Adele integral = Adele::explicit_values(X, 0, {{Chain({x}), g}}).coboundary();
  for (const auto& y : places) {
    Series c = classical_component(integral, y, order);
    bool ok = y == x ? c == expand_at_place(X, g, x, order) : c.is_zero() || c.valuation() >= order;
    if (!ok) return verdict("f = " + f.str() + "; g at " + x.str() + " = " + g.str(), false, "integral component at " + y.str() + " is " + c.str());
  }
  return verdict("f = " + f.str() + "; g at " + x.str() + " = " + g.str(), true, "");
}

struct Entry {
  Check check;
  std::function<bool(const Scheme&)> applies;
};

bool is_line(const Scheme& X) { return X.dim() == 1; }
bool is_plane(const Scheme& X) { return X.dim() == 2; }
bool is_p1(const Scheme& X) { return X.kind() == SchemeKind::ProjectiveLine; }
bool any(const Scheme&) { return true; }

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> r{
      {"residue-formula", {residue_formula, any}},
      {"residue-theorem", {residue_theorem, is_p1}},
      {"parshin-2d", {parshin, is_plane}},
      {"delta-squared", {delta_squared, any}},
      {"leibniz", {leibniz, any}},
      {"associativity", {associativity, is_plane}},
      {"unit-coface-action", {unit_coface, any}},
      {"regular-forms-chain-map", {regular_forms, is_line}},
      {"trace-linearity", {trace_linearity, is_p1}},
      {"dg-module", {dg_module, any}},
      {"double-complex", {double_complex, any}},
      {"cohomology", {cohomology, is_p1}},
      {"serre-duality", {serre, is_p1}},
      {"classical-adeles", {classical, is_line}},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, e] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

bool suite_applies(const std::string& name, const Scheme& X) {
  auto it = registry().find(name);
  if (it == registry().end()) fail(ErrorCode::Parse, "unknown suite " + name);
  return it->second.applies(X);
}

IdentityReport run_identity(const std::string& name, const Scheme& X, std::uint64_t seed, int trials, int cap) {
  auto it = registry().find(name);
  if (it == registry().end()) fail(ErrorCode::Parse, "unknown suite " + name);
  if (!it->second.applies(X)) fail(ErrorCode::Unsupported, "suite " + name + " does not apply to " + X.str());
  IdentityReport rep{name, X.str(), seed, 0, {}, 0};
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t s = derive_seed(seed, name, static_cast<std::uint64_t>(i));
    InstanceGenerator gen(X, s);
    Instance res;
    try {
      res = it->second.check(X, gen, i, cap);
    } catch (const Error& e) {
      res.failure = std::string("error: ") + e.what();
    }
    ++rep.instances;
    if (res.failure) rep.failures.push_back({i, s, res.input, *res.failure});
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

bool Report::ok() const {
  return std::all_of(identities.begin(), identities.end(), [](const IdentityReport& r) { return r.failures.empty(); });
}

Report run_suite(const SuiteConfig& config) {
  config.validate();
  Scheme X = Scheme::parse(config.scheme);
  std::vector<std::string> names = config.suites;
  if (names.empty())
    for (const auto& n : suite_names())
      if (suite_applies(n, X)) names.push_back(n);
  Report rep;
  for (const auto& n : names) rep.identities.push_back(run_identity(n, X, config.seed, config.trials, config.order_cap));
  std::sort(rep.identities.begin(), rep.identities.end(),
            [](const IdentityReport& a, const IdentityReport& b) { return a.name < b.name; });
  return rep;
}

void SuiteConfig::validate() const {
  if (trials < 1) fail(ErrorCode::Parse, "trials must be at least 1");
  if (order_cap < 4) fail(ErrorCode::Parse, "order cap must be at least 4");
  Scheme X = Scheme::parse(scheme);
  for (const auto& s : suites)
    if (!suite_applies(s, X)) fail(ErrorCode::Unsupported, "suite " + s + " does not apply to " + X.str());
}

SuiteConfig SuiteConfig::parse(const std::string& text) {
  SuiteConfig c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    try {
      if (key == "scheme") c.scheme = value;
      else if (key == "seed") c.seed = std::stoull(value);
      else if (key == "trials") c.trials = std::stoi(value);
      else if (key == "order-cap" || key == "order_cap") c.order_cap = std::stoi(value);
      else if (key == "suite") {
        std::istringstream parts(value);
        std::string s;
        while (std::getline(parts, s, ','))
          if (!trim(s).empty()) c.suites.push_back(trim(s));
      } else
        fail(ErrorCode::Parse, "line " + std::to_string(lineno) + ": unknown key " + key);
    } catch (const std::logic_error&) {
      fail(ErrorCode::Parse, "line " + std::to_string(lineno) + ": bad value for " + key);
    }
  }
  return c;
}

SuiteConfig SuiteConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Parse, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace adelic
