#include "adelic/poly.hpp"

#include <algorithm>
#include <sstream>

#include "adelic/error.hpp"

namespace adelic {

namespace {

BaseField join_fields(const BaseField& a, const BaseField& b) {
  if (a == b) return a;
  if (a.is_rationals()) return b;
  if (b.is_rationals()) return a;
  fail(ErrorCode::FieldMismatch, "polynomials over " + a.name() + " and " + b.name());
}

std::string join_vars(const Vars& v) {
  std::string s;
  for (const auto& n : v) s += (s.empty() ? "" : ",") + n;
  return "(" + s + ")";
}

}  // namespace

Poly::Poly(Vars vars, const BaseField& k) : vars_(std::move(vars)), k_(k) {
  if (vars_.size() > 2) fail(ErrorCode::VariableMismatch, "at most two variables are supported");
}

Poly Poly::constant(const Scalar& c, Vars vars, const BaseField& k) {
  Poly p(std::move(vars), k);
  Scalar v = Scalar::zero(k) + c;
  if (!v.is_zero()) p.terms_[{0, 0}] = v;
  return p;
}

Poly Poly::variable(int i, Vars vars, const BaseField& k) {
  Mono m{0, 0};
  m[static_cast<std::size_t>(i)] = 1;
  return monomial(Scalar::one(k), m, std::move(vars), k);
}

Poly Poly::monomial(const Scalar& c, Mono m, Vars vars, const BaseField& k) {
  Poly p(std::move(vars), k);
  if (m[0] < 0 || m[1] < 0) fail(ErrorCode::Unsupported, "negative exponent in polynomial");
  if (static_cast<int>(p.vars_.size()) < 2 && m[1] != 0) fail(ErrorCode::VariableMismatch, "exponent for a missing variable");
  if (p.vars_.empty() && m[0] != 0) fail(ErrorCode::VariableMismatch, "exponent for a missing variable");
  Scalar v = Scalar::zero(k) + c;
  if (!v.is_zero()) p.terms_[m] = v;
  return p;
}

Poly Poly::from_upoly(const ScalarPoly& u, int i, Vars vars, const BaseField& k) {
  Poly p(std::move(vars), k);
  for (int d = 0; d <= u.degree(); ++d) {
    Scalar c = Scalar::zero(k) + u.coeff(d);
    if (c.is_zero()) continue;
    Mono m{0, 0};
    m[static_cast<std::size_t>(i)] = d;
    p.terms_[m] = c;
  }
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0}); }

Scalar Poly::constant_value() const {
  if (!is_constant()) fail(ErrorCode::DegreeMismatch, "polynomial " + str() + " is not constant");
  return terms_.empty() ? Scalar::zero(k_) : terms_.begin()->second;
}

Scalar Poly::coeff(Mono m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(k_) : it->second;
}

int Poly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[0] + m[1]);
  return d;
}

int Poly::degree_in(int i) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<std::size_t>(i)]);
  return d;
}

Poly::Mono Poly::lead_mono() const {
  if (terms_.empty()) fail(ErrorCode::DivisionByZero, "leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

Scalar Poly::lead_coeff() const { return terms_.empty() ? Scalar::zero(k_) : terms_.rbegin()->second; }

int Poly::sole_variable() const {
  bool a = false, b = false;
  for (const auto& [m, c] : terms_) {
    a = a || m[0] > 0;
    b = b || m[1] > 0;
  }
  if (a && b) return -2;
  if (a) return 0;
  if (b) return 1;
  return -1;
}

void Poly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

void Poly::check_compatible(const Poly& o) const {
  if (vars_ != o.vars_) fail(ErrorCode::VariableMismatch, join_vars(vars_) + " vs " + join_vars(o.vars_));
}

namespace {
// Constants without variables adopt the other operand's variables.
std::pair<Poly, Poly> unify(const Poly& a, const Poly& b) {
  if (a.vars() == b.vars()) return {a, b};
  if (a.vars().empty() && a.is_constant()) return {Poly::constant(a.constant_value(), b.vars(), b.field()), b};
  if (b.vars().empty() && b.is_constant()) return {a, Poly::constant(b.constant_value(), a.vars(), a.field())};
  fail(ErrorCode::VariableMismatch, join_vars(a.vars()) + " vs " + join_vars(b.vars()));
}
}  // namespace

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly operator+(const Poly& a0, const Poly& b0) {
  auto [a, b] = unify(a0, b0);
  Poly r(a.vars_, join_fields(a.k_, b.k_));
  for (const auto& [m, c] : a.terms_) r.terms_[m] = Scalar::zero(r.k_) + c;
  for (const auto& [m, c] : b.terms_) {
    auto it = r.terms_.find(m);
    if (it == r.terms_.end())
      r.terms_[m] = Scalar::zero(r.k_) + c;
    else
      it->second += c;
  }
  r.prune();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a0, const Poly& b0) {
  auto [a, b] = unify(a0, b0);
  Poly r(a.vars_, join_fields(a.k_, b.k_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Poly::Mono m{ma[0] + mb[0], ma[1] + mb[1]};
      auto it = r.terms_.find(m);
      if (it == r.terms_.end())
        r.terms_[m] = ca * cb;
      else
        it->second += ca * cb;
    }
  r.prune();
  return r;
}

Poly operator*(const Scalar& c, const Poly& a) {
  Poly r = a;
  for (auto& [m, v] : r.terms_) v = c * v;
  r.prune();
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) fail(ErrorCode::Unsupported, "negative power of a polynomial");
  Poly result = one_like(), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Poly& a0, const Poly& b0) {
  if (a0.vars_ != b0.vars_) {
    if (!(a0.is_constant() && b0.is_constant())) return false;
    return a0.constant_value() == b0.constant_value();
  }
  return a0.terms_ == b0.terms_;
}

bool operator<(const Poly& a, const Poly& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.terms_ < b.terms_;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return lead_coeff().inverse() * *this;
}

Poly Poly::derivative(int i) const {
  Poly r(vars_, k_);
  if (i >= nvars()) return r;
  for (const auto& [m, c] : terms_) {
    int e = m[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    Mono n = m;
    n[static_cast<std::size_t>(i)] = e - 1;
    r.terms_[n] = Scalar(static_cast<long>(e), k_) * c;
  }
  r.prune();
  return r;
}

Scalar Poly::eval(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != nvars())
    fail(ErrorCode::VariableMismatch, "evaluation point has wrong arity for " + str());
  Scalar acc = Scalar::zero(k_);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < nvars(); ++i) t *= point[static_cast<std::size_t>(i)].pow(m[static_cast<std::size_t>(i)]);
    acc += t;
  }
  return acc;
}

FieldElem Poly::eval(const std::vector<FieldElem>& point) const {
  if (static_cast<int>(point.size()) != nvars() || point.empty())
    fail(ErrorCode::VariableMismatch, "evaluation point has wrong arity for " + str());
  FieldElem acc = point[0].zero_like();
  for (const auto& [m, c] : terms_) {
    FieldElem t = c * point[0].one_like();
    for (int i = 0; i < nvars(); ++i) t *= point[static_cast<std::size_t>(i)].pow(m[static_cast<std::size_t>(i)]);
    acc += t;
  }
  return acc;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != nvars())
    fail(ErrorCode::VariableMismatch, "substitution arity mismatch for " + str());
  if (images.empty()) return *this;
  const Poly& s = images[0];
  Poly acc = s.zero_like();
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Poly& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(images[i].one_like());
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * images[i]);
    return v[static_cast<std::size_t>(e)];
  };
  for (const auto& [m, c] : terms_) {
    Poly t = c * s.one_like();
    for (std::size_t i = 0; i < images.size(); ++i) t *= power(i, m[i]);
    acc += t;
  }
  return acc;
}

std::vector<Poly> Poly::coefficients_in(int i) const {
  int d = degree_in(i);
  std::vector<Poly> out(static_cast<std::size_t>(std::max(d + 1, 0)), zero_like());
  for (const auto& [m, c] : terms_) {
    Mono n = m;
    n[static_cast<std::size_t>(i)] = 0;
    out[static_cast<std::size_t>(m[static_cast<std::size_t>(i)])] += monomial(c, n, vars_, k_);
  }
  return out;
}

ScalarPoly Poly::to_upoly(int i) const {
  std::vector<Scalar> c(static_cast<std::size_t>(std::max(degree_in(i) + 1, 0)), Scalar::zero(k_));
  for (const auto& [m, v] : terms_) {
    for (int j = 0; j < 2; ++j)
      if (j != i && m[static_cast<std::size_t>(j)] != 0)
        fail(ErrorCode::VariableMismatch, "polynomial " + str() + " is not univariate");
    c[static_cast<std::size_t>(m[static_cast<std::size_t>(i)])] = v;
  }
  return ScalarPoly(c, Scalar::zero(k_));
}

Poly Poly::with_vars(Vars vars) const {
  if (vars.size() != vars_.size()) fail(ErrorCode::VariableMismatch, "rename changes arity");
  Poly r = *this;
  r.vars_ = std::move(vars);
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (int i = 0; i < nvars(); ++i) {
      int e = m[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[static_cast<std::size_t>(i)];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    bool neg = sgn(c.value()) < 0;
    Scalar a = neg ? -c : c;
    if (c.characteristic() != 0) {
      neg = false;
      a = c;
    }
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (mono.empty())
      os << a.str();
    else if (a.is_one())
      os << mono;
    else
      os << a.str() << "*" << mono;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a0, const Poly& b0) {
  if (b0.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  auto [a, b] = unify(a0, b0);
  Poly q = a.zero_like(), r = a.zero_like(), p = a;
  const Poly::Mono lb = b.lead_mono();
  const Scalar cb = b.lead_coeff().inverse();
  while (!p.is_zero()) {
    Poly::Mono lp = p.lead_mono();
    Scalar cp = p.lead_coeff();
    if (lp[0] >= lb[0] && lp[1] >= lb[1]) {
      Poly t = Poly::monomial(cp * cb, {lp[0] - lb[0], lp[1] - lb[1]}, a.vars(), a.field());
      q += t;
      p -= t * b;
    } else {
      Poly t = Poly::monomial(cp, lp, a.vars(), a.field());
      r += t;
      p -= t;
    }
  }
  return {q, r};
}

bool divides(const Poly& b, const Poly& a) { return divmod(a, b).second.is_zero(); }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail(ErrorCode::DegreeMismatch, b.str() + " does not divide " + a.str());
  return q;
}

namespace {

Poly univariate_gcd(const Poly& a, const Poly& b, int var) {
  ScalarPoly g = gcd(a.to_upoly(var), b.to_upoly(var));
  return Poly::from_upoly(g, var, a.vars(), a.field());
}

// Content with respect to the second variable: gcd of coefficients in k[first].
Poly content1(const Poly& p) {
  Poly g = p.zero_like();
  for (const Poly& c : p.coefficients_in(1)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : univariate_gcd(g, c, 0);
    if (g.is_constant()) break;
  }
  return g.monic();
}

Poly primitive1(const Poly& p) { return exact_div(p, content1(p)); }

Poly lead1(const Poly& p) { return p.coefficients_in(1).back(); }

Poly shift1(const Poly& p, int e) { return p * Poly::monomial(Scalar::one(p.field()), {0, e}, p.vars(), p.field()); }

Poly prem1(Poly a, const Poly& b) {
  const int db = b.degree_in(1);
  const Poly lb = lead1(b);
  while (!a.is_zero() && a.degree_in(1) >= db) {
    Poly la = lead1(a);
    a = lb * a - shift1(la * b, a.degree_in(1) - db);
  }
  return a;
}

}  // namespace

Poly poly_gcd(const Poly& a0, const Poly& b0) {
  auto [a, b] = unify(a0, b0);
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return a.one_like();
  int sa = a.sole_variable(), sb = b.sole_variable();
  if (sa >= 0 && sa == sb) return univariate_gcd(a, b, sa);
  if (a.nvars() < 2) return a.one_like();
  if (sa == 0 && sb == 0) return univariate_gcd(a, b, 0);
  Poly ca = content1(a), cb = content1(b);
  Poly gc = (ca.is_constant() || cb.is_constant()) ? a.one_like() : univariate_gcd(ca, cb, 0);
  Poly pa = primitive1(a), pb = primitive1(b);
  if (pa.degree_in(1) < pb.degree_in(1)) std::swap(pa, pb);
  while (!pb.is_zero() && pb.degree_in(1) > 0) {
    Poly r = prem1(pa, pb);
    pa = pb;
    pb = r.is_zero() ? r : primitive1(r);
  }
  Poly g = pb.is_zero() ? pa : a.one_like();
  return (gc * g).monic();
}

Poly resultant(const Poly& a0, const Poly& b0, int i) {
  auto [a, b] = unify(a0, b0);
  if (a.is_zero() || b.is_zero()) return a.zero_like();
  std::vector<Poly> ca = a.coefficients_in(i), cb = b.coefficients_in(i);
  const int m = static_cast<int>(ca.size()) - 1, n = static_cast<int>(cb.size()) - 1;
  if (m == 0) return ca[0].pow(n);
  if (n == 0) return cb[0].pow(m);
  const int N = m + n;
  std::vector<std::vector<Poly>> M(static_cast<std::size_t>(N), std::vector<Poly>(static_cast<std::size_t>(N), a.zero_like()));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = ca[static_cast<std::size_t>(m - j)];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) M[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = cb[static_cast<std::size_t>(n - j)];
  // Fraction-free Gaussian elimination (Bareiss).
  Poly prev = a.one_like();
  bool negate = false;
  for (int k = 0; k < N - 1; ++k) {
    auto K = static_cast<std::size_t>(k);
    if (M[K][K].is_zero()) {
      int piv = -1;
      for (int r = k + 1; r < N; ++r)
        if (!M[static_cast<std::size_t>(r)][K].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return a.zero_like();
      std::swap(M[K], M[static_cast<std::size_t>(piv)]);
      negate = !negate;
    }
    for (int r = k + 1; r < N; ++r)
      for (int c = k + 1; c < N; ++c) {
        auto R = static_cast<std::size_t>(r), C = static_cast<std::size_t>(c);
        M[R][C] = exact_div(M[K][K] * M[R][C] - M[R][K] * M[K][C], prev);
      }
    prev = M[K][K];
  }
  Poly det = M[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(N - 1)];
  return negate ? -det : det;
}

}  // namespace adelic
