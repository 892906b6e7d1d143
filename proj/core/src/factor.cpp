#include "adelic/factor.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "adelic/error.hpp"

namespace adelic {
namespace {

bool poly_less(const ScalarPoly& a, const ScalarPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) == b.coeff(i)) continue;
    return a.coeff(i) < b.coeff(i);
  }
  return false;
}

void sort_merge(std::vector<Factor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
  std::vector<Factor> out;
  for (auto& f : fs) {
    if (!out.empty() && out.back().poly == f.poly)
      out.back().multiplicity += f.multiplicity;
    else
      out.push_back(f);
  }
  fs = std::move(out);
}

// p-th root of a polynomial whose derivative vanishes (char p, F_p coefficients).
ScalarPoly pth_root(const ScalarPoly& a, std::int64_t p) {
  std::vector<Scalar> c;
  for (int i = 0; i <= a.degree(); i += static_cast<int>(p)) c.push_back(a.coeff(i));
  return ScalarPoly(std::move(c), a.zero_sample());
}

std::vector<Factor> squarefree_fp(const ScalarPoly& f, std::int64_t p) {
  std::vector<Factor> out;
  if (f.degree() <= 0) return out;
  ScalarPoly c = gcd(f, f.derivative());
  ScalarPoly w = f.exact_div(c).monic();
  int i = 1;
  while (w.degree() > 0) {
    ScalarPoly y = gcd(w, c);
    ScalarPoly z = w.exact_div(y).monic();
    if (z.degree() > 0) out.push_back({z, i});
    ++i;
    w = y;
    c = c.exact_div(y);
  }
  if (c.degree() > 0) {
    auto inner = squarefree_fp(pth_root(c.monic(), p), p);
    for (auto& g : inner) out.push_back({g.poly, g.multiplicity * static_cast<int>(p)});
  }
  return out;
}

std::vector<Factor> squarefree_char0(const ScalarPoly& f) {
  std::vector<Factor> out;
  if (f.degree() <= 0) return out;
  ScalarPoly a = f.monic();
  ScalarPoly b = gcd(a, a.derivative());
  ScalarPoly c = a.exact_div(b);
  ScalarPoly d = (a.derivative().exact_div(b)) - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    ScalarPoly g = gcd(c, d);
    if (g.degree() > 0) out.push_back({g, i});
    ScalarPoly cn = c.exact_div(g);
    d = d.exact_div(g) - cn.derivative();
    c = cn;
    ++i;
  }
  return out;
}

// Distinct-degree factorization of a monic square-free polynomial over F_p.
std::vector<std::pair<ScalarPoly, int>> ddf(ScalarPoly f, std::int64_t p) {
  std::vector<std::pair<ScalarPoly, int>> out;
  ScalarPoly x = ScalarPoly::variable(f.zero_sample());
  ScalarPoly h = x;
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, mpz_class(static_cast<long>(p)), f);
    ScalarPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f.exact_div(g).monic();
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

void edf(const ScalarPoly& f, int d, std::int64_t p, std::mt19937_64& rng, std::vector<ScalarPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const BaseField k = f.zero_sample().field();
  std::uniform_int_distribution<std::int64_t> coef(0, p - 1);
  for (;;) {
    std::vector<Scalar> c;
    for (int i = 0; i < f.degree(); ++i) c.emplace_back(static_cast<long>(coef(rng)), k);
    ScalarPoly r(std::move(c), f.zero_sample());
    if (r.degree() <= 0) continue;
    ScalarPoly g;
    if (p == 2) {
      ScalarPoly t = r, acc = r;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % f;
        acc = acc + t;
      }
      g = gcd(f, acc);
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      ScalarPoly s = powmod(r, e, f) - ScalarPoly::constant(Scalar::one(k));
      g = gcd(f, s);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      edf(g, d, p, rng, out);
      edf(f.exact_div(g).monic(), d, p, rng, out);
      return;
    }
  }
}

mpz_class lcm_of_denominators(const ScalarPoly& a) {
  mpz_class l = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den_mpz_t());
  return l;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  if (n == 0) return out;
  if (n > mpz_class(1000000000L)) fail(ErrorCode::UnsupportedFactorization, "coefficients too large for rational root search");
  long v = n.get_si();
  for (long d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.emplace_back(d);
      if (d != v / d) out.emplace_back(v / d);
    }
  }
  return out;
}

std::vector<Scalar> rational_roots(const ScalarPoly& a) {
  std::vector<Scalar> roots;
  if (a.degree() <= 0) return roots;
  const BaseField k = BaseField::rationals();
  ScalarPoly f = a;
  // Strip the root 0.
  int lo = 0;
  while (f.coeff(lo).is_zero()) ++lo;
  if (lo > 0) roots.push_back(Scalar::zero(k));
  mpz_class l = lcm_of_denominators(f);
  mpz_class c0 = mpq_class(f.coeff(lo).value() * l).get_num();
  mpz_class cn = mpq_class(f.lead().value() * l).get_num();
  for (const auto& pnum : divisors(c0)) {
    for (const auto& qden : divisors(cn)) {
      for (int sgn : {1, -1}) {
        Scalar r(mpq_class(pnum * sgn, qden), k);
        if (f.eval(r).is_zero()) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

ScalarPoly Factorization::expand() const {
  ScalarPoly r = ScalarPoly::constant(unit);
  for (const auto& f : factors)
    for (int i = 0; i < f.multiplicity; ++i) r = r * f.poly;
  return r;
}

std::vector<Factor> squarefree_decomposition(const ScalarPoly& a) {
  std::int64_t p = a.zero_sample().characteristic();
  return p == 0 ? squarefree_char0(a) : squarefree_fp(a.monic(), p);
}

std::vector<Scalar> roots_in_base(const ScalarPoly& a) {
  std::int64_t p = a.zero_sample().characteristic();
  if (p == 0) return rational_roots(a);
  std::vector<Scalar> roots;
  for (const auto& f : factor_univariate(a).factors)
    if (f.poly.degree() == 1) roots.push_back(-f.poly.coeff(0));
  std::sort(roots.begin(), roots.end());
  return roots;
}

Factorization factor_univariate(const ScalarPoly& a) {
  if (a.is_zero()) fail(ErrorCode::UnsupportedFactorization, "factorization of the zero polynomial");
  Factorization out{a.lead(), {}};
  if (a.degree() == 0) return out;
  const std::int64_t p = a.zero_sample().characteristic();
  const BaseField k = a.zero_sample().field();

  if (p != 0) {
    std::mt19937_64 rng(0x5eed1234ULL + static_cast<std::uint64_t>(a.degree()));
    for (const auto& sf : squarefree_fp(a.monic(), p)) {
      for (auto& [g, d] : ddf(sf.poly, p)) {
        std::vector<ScalarPoly> parts;
        edf(g, d, p, rng, parts);
        for (auto& q : parts) out.factors.push_back({q, sf.multiplicity});
      }
    }
    sort_merge(out.factors);
    return out;
  }

  ScalarPoly rest = a.monic();
  for (const auto& r : rational_roots(rest)) {
    ScalarPoly lin({-r, Scalar::one(k)}, r);
    int m = 0;
    for (;;) {
      auto [q, rem] = rest.divmod(lin);
      if (!rem.is_zero()) break;
      rest = q;
      ++m;
    }
    out.factors.push_back({lin, m});
  }
  rest = rest.monic();
  if (rest.degree() > 0) {
    // Root-free cofactor: degree <= 3 is irreducible; otherwise split off
    // repeated parts and accept only square-free pieces of degree <= 3.
    for (const auto& sf : squarefree_char0(rest)) {
      if (sf.poly.degree() > 3)
        fail(ErrorCode::UnsupportedFactorization,
             "root-free factor of degree " + std::to_string(sf.poly.degree()) + " over Q: " + sf.poly.str());
      out.factors.push_back({sf.poly.monic(), sf.multiplicity});
    }
  }
  sort_merge(out.factors);
  return out;
}

bool is_irreducible(const ScalarPoly& a) {
  if (a.degree() <= 0) return false;
  if (a.degree() == 1) return true;
  const std::int64_t p = a.zero_sample().characteristic();
  if (p == 0) {
    if (!rational_roots(a).empty()) return false;
    if (a.degree() <= 3) return true;
    auto sf = squarefree_char0(a);
    if (sf.size() != 1 || sf[0].multiplicity != 1) return false;
    fail(ErrorCode::UnsupportedFactorization, "irreducibility over Q of degree >= 4 is not decided");
  }
  auto f = factor_univariate(a);
  return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

}  // namespace adelic
