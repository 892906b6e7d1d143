#include "adelic/ratfunc.hpp"

#include <algorithm>
#include <map>

#include "adelic/error.hpp"
#include "adelic/factor.hpp"

namespace adelic {

RatFunc::RatFunc(const Poly& num) : num_(num) {}

RatFunc::RatFunc(const Poly& num, std::vector<DenFactor> den, bool verify) : num_(num), den_(std::move(den)) {
  for (const auto& f : den_) {
    if (f.poly.is_zero()) fail(ErrorCode::DivisionByZero, "zero denominator factor");
    if (f.mult < 1) fail(ErrorCode::DegreeMismatch, "denominator multiplicity must be positive");
  }
  if (verify) {
    for (std::size_t i = 0; i < den_.size(); ++i) {
      const Poly& f = den_[i].poly;
      int v = f.sole_variable();
      if (v >= 0 && !f.field().is_rationals() && !is_irreducible(f.to_upoly(v)))
        fail(ErrorCode::NotIrreducible, "denominator factor " + f.str() + " is reducible");
      for (std::size_t j = i + 1; j < den_.size(); ++j) {
        Poly g = poly_gcd(f, den_[j].poly);
        if (!g.is_constant() && !(g == f.monic() && g == den_[j].poly.monic()))
          fail(ErrorCode::NotCoprime, "denominator factors " + f.str() + " and " + den_[j].poly.str() + " share " + g.str());
      }
    }
  }
  normalize();
}

RatFunc RatFunc::constant(const Scalar& c, const Vars& vars, const BaseField& k) {
  return RatFunc(Poly::constant(c, vars, k));
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  std::map<Poly, int> merged;
  for (auto& f : den_) {
    if (f.poly.is_constant()) {
      num_ = f.poly.constant_value().pow(-f.mult) * num_;
      continue;
    }
    Scalar lc = f.poly.lead_coeff();
    if (!lc.is_one()) num_ = lc.pow(-f.mult) * num_;
    merged[f.poly.monic()] += f.mult;
  }
  den_.clear();
  for (auto& [p, m] : merged) {
    int mult = m;
    while (mult > 0) {
      auto [q, r] = divmod(num_, p);
      if (!r.is_zero()) break;
      num_ = q;
      --mult;
    }
    if (mult > 0) den_.push_back({p, mult});
  }
}

Poly RatFunc::den_poly() const {
  Poly d = num_.one_like();
  for (const auto& f : den_) d *= f.poly.pow(f.mult);
  return d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::map<Poly, std::pair<int, int>> m;
  for (const auto& f : a.den_) m[f.poly].first = f.mult;
  for (const auto& f : b.den_) m[f.poly].second = f.mult;
  Poly na = a.num_, nb = b.num_;
  std::vector<DenFactor> den;
  for (const auto& [p, e] : m) {
    int M = std::max(e.first, e.second);
    if (M > e.first) na *= p.pow(M - e.first);
    if (M > e.second) nb *= p.pow(M - e.second);
    den.push_back({p, M});
  }
  return RatFunc(na + nb, std::move(den));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  std::vector<DenFactor> den = a.den_;
  den.insert(den.end(), b.den_.begin(), b.den_.end());
  return RatFunc(a.num_ * b.num_, std::move(den));
}

RatFunc operator*(const Scalar& c, const RatFunc& a) {
  RatFunc r = a;
  r.num_ = c * r.num_;
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc result = one_like(), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

RatFunc RatFunc::div_by(const Poly& factor, int mult) const {
  std::vector<DenFactor> den = den_;
  den.push_back({factor, mult});
  return RatFunc(num_, std::move(den));
}

namespace {

RatFunc invert_with(const RatFunc& a, const Scalar& unit, const std::vector<DenFactor>& factors) {
  Poly num = a.den_poly();
  return RatFunc(unit.inverse() * num, factors);
}

}  // namespace

RatFunc RatFunc::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero rational function");
  if (num_.sole_variable() == -2)
    fail(ErrorCode::UnsupportedFactorization, "cannot factor bivariate numerator " + num_.str());
  auto [unit, factors] = factor_poly(num_);
  return invert_with(*this, unit, factors);
}

RatFunc RatFunc::inverse_trusted() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero rational function");
  std::vector<Poly> known;
  for (const auto& f : den_) known.push_back(f.poly);
  auto [unit, factors] = factor_poly(num_, known);
  return invert_with(*this, unit, factors);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return (a.num_ * b.den_poly() - b.num_ * a.den_poly()).is_zero();
}

RatFunc RatFunc::derivative(int i) const {
  // (N / prod f^m)' = (N' prod f - N sum m f' prod_{g != f} g) / prod f^{m+1}
  Poly P = num_.one_like();
  for (const auto& f : den_) P *= f.poly;
  Poly top = num_.derivative(i) * P;
  for (const auto& f : den_) {
    Poly rest = num_.one_like();
    for (const auto& g : den_)
      if (!(g.poly == f.poly)) rest *= g.poly;
    top -= Scalar(static_cast<long>(f.mult), field()) * (num_ * f.poly.derivative(i) * rest);
  }
  std::vector<DenFactor> den;
  for (const auto& f : den_) den.push_back({f.poly, f.mult + 1});
  return RatFunc(top, std::move(den));
}

Scalar RatFunc::eval(const std::vector<Scalar>& point) const {
  Scalar d = Scalar::one(field());
  for (const auto& f : den_) {
    Scalar v = f.poly.eval(point);
    if (v.is_zero()) fail(ErrorCode::Undefined, str() + " has a pole at the evaluation point");
    d *= v.pow(f.mult);
  }
  return num_.eval(point) / d;
}

FieldElem RatFunc::eval(const std::vector<FieldElem>& point) const {
  FieldElem d = point.at(0).one_like();
  for (const auto& f : den_) {
    FieldElem v = f.poly.eval(point);
    if (v.is_zero()) fail(ErrorCode::Undefined, str() + " has a pole at the evaluation point");
    d *= v.pow(f.mult);
  }
  return num_.eval(point) * d.inverse();
}

bool RatFunc::is_defined_at(const std::vector<Scalar>& point) const {
  for (const auto& f : den_)
    if (f.poly.eval(point).is_zero()) return false;
  return true;
}

int RatFunc::valuation(const Poly& f0) const {
  Poly f = f0.monic();
  for (const auto& d : den_)
    if (d.poly == f) return -d.mult;
  if (num_.is_zero()) return 1 << 20;
  int v = 0;
  Poly n = num_;
  while (true) {
    auto [q, r] = divmod(n, f);
    if (!r.is_zero()) break;
    n = q;
    ++v;
  }
  return v;
}

bool RatFunc::is_regular_along(const Poly& f0) const {
  Poly f = f0.monic();
  for (const auto& d : den_)
    if (d.poly == f) return false;
  return true;
}

RatFunc RatFunc::substitute(const std::vector<RatFunc>& images) const {
  if (static_cast<int>(images.size()) != num_.nvars())
    fail(ErrorCode::VariableMismatch, "substitution arity mismatch for " + str());
  if (images.empty()) return *this;
  auto subst_poly = [&](const Poly& p) {
    RatFunc acc = images[0].zero_like();
    for (const auto& [m, c] : p.terms()) {
      RatFunc t = c * images[0].one_like();
      for (std::size_t i = 0; i < images.size(); ++i) t *= images[i].pow(m[i]);
      acc += t;
    }
    return acc;
  };
  RatFunc r = subst_poly(num_);
  for (const auto& f : den_) r *= subst_poly(f.poly).inverse_trusted().pow(f.mult);
  return r;
}

std::string RatFunc::str() const {
  if (den_.empty()) return num_.str();
  std::string d;
  for (const auto& f : den_) {
    if (!d.empty()) d += "*";
    d += "(" + f.poly.str() + ")";
    if (f.mult > 1) d += "^" + std::to_string(f.mult);
  }
  std::string n = num_.str();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  return n + "/(" + d + ")";
}

std::pair<Scalar, std::vector<DenFactor>> factor_poly(const Poly& p, const std::vector<Poly>& known) {
  if (p.is_zero()) fail(ErrorCode::DivisionByZero, "factoring zero polynomial");
  const BaseField k = p.field();
  std::vector<DenFactor> out;
  Poly rest = p;
  for (const Poly& f : known) {
    if (f.is_constant()) continue;
    int m = 0;
    while (!rest.is_constant()) {
      auto [q, r] = divmod(rest, f);
      if (!r.is_zero()) break;
      rest = q;
      ++m;
    }
    if (m > 0) out.push_back({f, m});
  }
  Scalar unit = Scalar::one(k);
  if (rest.is_constant()) {
    unit = rest.constant_value();
  } else if (int v = rest.sole_variable(); v >= 0) {
    ScalarPoly u = rest.to_upoly(v);
    Factorization fac;
    try {
      fac = factor_univariate(u);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedFactorization) throw;
      // Trust the square-free parts of the root-free cofactor.
      fac.unit = u.lead();
      fac.factors.clear();
      ScalarPoly w = u.monic();
      for (const Scalar& r : roots_in_base(w)) {
        ScalarPoly lin({-r, Scalar::one(k)}, Scalar::zero(k));
        int m = 0;
        while ((w % lin).is_zero()) {
          w = w / lin;
          ++m;
        }
        fac.factors.push_back({lin, m});
      }
      for (const auto& sf : squarefree_decomposition(w))
        if (sf.poly.degree() > 0) fac.factors.push_back(sf);
    }
    unit = fac.unit;
    for (const auto& f : fac.factors) out.push_back({Poly::from_upoly(f.poly, v, p.vars(), k), f.multiplicity});
  } else {
    out.push_back({rest, 1});
  }
  std::vector<DenFactor> monic;
  for (const auto& f : out) {
    unit *= f.poly.lead_coeff().pow(f.mult);
    monic.push_back({f.poly.monic(), f.mult});
  }
  return {unit, monic};
}

}  // namespace adelic
