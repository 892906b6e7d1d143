#include "adelic/form.hpp"

#include "adelic/error.hpp"

namespace adelic {

int popcount(int mask) { return __builtin_popcount(static_cast<unsigned>(mask)); }

int wedge_sign(int I, int J) {
  if (I & J) return 0;
  int inversions = 0;
  for (int j = 0; j < 8; ++j)
    if (J & (1 << j)) inversions += popcount(I & ~((1 << (j + 1)) - 1));
  return (inversions % 2) ? -1 : 1;
}

Form::Form(Vars vars, const BaseField& k, int degree) : vars_(std::move(vars)), k_(k), degree_(degree) {}

Form Form::function(const RatFunc& f) {
  Form r(f.vars(), f.field(), 0);
  r.set(0, f);
  return r;
}

Form Form::basis(int mask, const Vars& vars, const BaseField& k) {
  Form r(vars, k, popcount(mask));
  r.set(mask, RatFunc::constant(Scalar::one(k), vars, k));
  return r;
}

Form Form::top(const RatFunc& f) {
  Form r(f.vars(), f.field(), static_cast<int>(f.vars().size()));
  r.set((1 << r.nvars()) - 1, f);
  return r;
}

RatFunc Form::coeff(int mask) const {
  auto it = c_.find(mask);
  if (it != c_.end()) return it->second;
  return RatFunc::constant(Scalar::zero(k_), vars_, k_);
}

void Form::set(int mask, const RatFunc& f) {
  if (popcount(mask) != degree_) fail(ErrorCode::DegreeMismatch, "basis element of wrong degree");
  if (mask >= (1 << nvars())) fail(ErrorCode::VariableMismatch, "differential of a missing variable");
  if (f.is_zero())
    c_.erase(mask);
  else
    c_[mask] = f;
}

Form Form::operator-() const {
  Form r = *this;
  for (auto& [m, f] : r.c_) f = -f;
  return r;
}

Form operator+(const Form& a, const Form& b) {
  if (a.is_zero() && a.degree_ != b.degree_) return b;
  if (b.is_zero() && a.degree_ != b.degree_) return a;
  if (a.degree_ != b.degree_) fail(ErrorCode::DegreeMismatch, "adding forms of degrees " + std::to_string(a.degree_) + " and " + std::to_string(b.degree_));
  if (a.vars_ != b.vars_) fail(ErrorCode::VariableMismatch, "forms over different coordinates");
  Form r = a;
  for (const auto& [m, f] : b.c_) r.set(m, r.coeff(m) + f);
  return r;
}

Form operator-(const Form& a, const Form& b) { return a + (-b); }

Form operator*(const RatFunc& f, const Form& a) {
  Form r = a;
  for (auto& [m, g] : a.c_) r.set(m, f * g);
  return r;
}

Form operator*(const Scalar& c, const Form& a) {
  Form r = a;
  for (auto& [m, g] : a.c_) r.set(m, c * g);
  return r;
}

bool operator==(const Form& a, const Form& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.degree_ != b.degree_) return false;
  for (const auto& [m, f] : a.c_)
    if (f != b.coeff(m)) return false;
  for (const auto& [m, f] : b.c_)
    if (!a.c_.count(m)) return false;
  return true;
}

std::string Form::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (const auto& [m, f] : c_) {
    if (!s.empty()) s += " + ";
    std::string basis;
    for (int i = 0; i < nvars(); ++i)
      if (m & (1 << i)) basis += (basis.empty() ? "d" : "^d") + vars_[static_cast<std::size_t>(i)];
    std::string coef = f.str();
    bool wrap = coef.find_first_of("+-", 1) != std::string::npos;
    if (basis.empty())
      s += coef;
    else if (f.is_constant() && f.num().constant_value().is_one())
      s += basis;
    else
      s += (wrap ? "(" + coef + ")" : coef) + "*" + basis;
  }
  return s;
}

Form wedge(const Form& a, const Form& b) {
  if (a.vars() != b.vars()) fail(ErrorCode::VariableMismatch, "wedge of forms over different coordinates");
  Form r(a.vars(), a.field(), a.degree() + b.degree());
  if (r.degree() > r.nvars()) return r;
  for (const auto& [I, f] : a.coeffs())
    for (const auto& [J, g] : b.coeffs()) {
      int s = wedge_sign(I, J);
      if (s == 0) continue;
      RatFunc t = f * g;
      r.set(I | J, r.coeff(I | J) + (s > 0 ? t : -t));
    }
  return r;
}

Form exterior_d(const Form& a) {
  Form r(a.vars(), a.field(), a.degree() + 1);
  if (r.degree() > r.nvars()) return r;
  for (const auto& [I, f] : a.coeffs())
    for (int j = 0; j < a.nvars(); ++j) {
      int s = wedge_sign(1 << j, I);
      if (s == 0) continue;
      RatFunc t = f.derivative(j);
      r.set(I | (1 << j), r.coeff(I | (1 << j)) + (s > 0 ? t : -t));
    }
  return r;
}

}  // namespace adelic
