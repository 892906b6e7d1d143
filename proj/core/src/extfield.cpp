#include "adelic/extfield.hpp"

#include <sstream>

#include "adelic/error.hpp"
#include "adelic/factor.hpp"

namespace adelic {

ExtFieldPtr ExtField::make(const ScalarPoly& minpoly) {
  if (minpoly.degree() < 1 || minpoly.degree() > kMaxDegree)
    fail(ErrorCode::Unsupported, "extension degree must be in [1, 4], got " + std::to_string(minpoly.degree()));
  ScalarPoly m = minpoly.monic();
  const BaseField k = m.zero_sample().field();
  if (m.degree() > 1) {
    bool ok;
    if (k.is_rationals() && m.degree() == 4) {
      auto sf = squarefree_decomposition(m);
      ok = roots_in_base(m).empty() && sf.size() == 1 && sf[0].multiplicity == 1;
    } else {
      ok = is_irreducible(m);
    }
    if (!ok) fail(ErrorCode::NotIrreducible, "minimal polynomial " + m.str() + " is reducible over " + k.name());
  }
  return ExtFieldPtr(new ExtField(k, m));
}

ExtFieldPtr ExtField::trivial(const BaseField& k) {
  return ExtFieldPtr(new ExtField(k, ScalarPoly({Scalar::zero(k), Scalar::one(k)}, Scalar::zero(k))));
}

std::string ExtField::name() const {
  if (is_trivial()) return base_.name();
  return base_.name() + "[a]/(" + minpoly_.str("a") + ")";
}

FieldElem::FieldElem(ExtFieldPtr F, const Scalar& s) : F_(std::move(F)) {
  c_.assign(static_cast<std::size_t>(F_->degree()), Scalar::zero(F_->base()));
  c_[0] = Scalar::zero(F_->base()) + s;
}

FieldElem::FieldElem(ExtFieldPtr F, const ScalarPoly& rep) : F_(std::move(F)) {
  ScalarPoly r = rep % F_->minpoly();
  c_.assign(static_cast<std::size_t>(F_->degree()), Scalar::zero(F_->base()));
  for (int i = 0; i <= r.degree(); ++i) c_[static_cast<std::size_t>(i)] = Scalar::zero(F_->base()) + r.coeff(i);
}

FieldElem FieldElem::generator(const ExtFieldPtr& F) {
  return FieldElem(F, ScalarPoly::variable(Scalar::zero(F->base())));
}

ScalarPoly FieldElem::rep() const { return ScalarPoly(c_, Scalar::zero(F_->base())); }

bool FieldElem::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

bool FieldElem::is_one() const {
  if (c_.empty() || !c_[0].is_one()) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

bool FieldElem::is_base() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Scalar FieldElem::base_value() const {
  if (!is_base()) fail(ErrorCode::FieldMismatch, "element " + str() + " is not in the base field");
  return c_[0];
}

namespace {
void check_same(const FieldElem& a, const FieldElem& b) {
  if (a.field() != b.field() && !a.field()->same_as(*b.field()))
    fail(ErrorCode::FieldMismatch, "elements of " + a.field()->name() + " and " + b.field()->name());
}
}  // namespace

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& s : r.c_) s = -s;
  return r;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  FieldElem r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  FieldElem r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
  return r;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  if (a.F_->degree() == 1) {
    FieldElem r = a;
    r.c_[0] *= b.c_[0];
    return r;
  }
  return FieldElem(a.F_, a.rep() * b.rep());
}

FieldElem operator*(const Scalar& a, const FieldElem& b) {
  FieldElem r = b;
  for (auto& s : r.c_) s = a * s;
  return r;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in " + F_->name());
  if (F_->degree() == 1) return FieldElem(F_, c_[0].inverse());
  auto [g, s, t] = xgcd(rep(), F_->minpoly());
  (void)t;
  if (g.degree() != 0) fail(ErrorCode::NotIrreducible, "minimal polynomial has a factor in common with element");
  return FieldElem(F_, s);
}

FieldElem FieldElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem result = one_like(), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

Scalar FieldElem::trace() const {
  // Trace of the multiplication-by-this matrix in the power basis.
  const int d = F_->degree();
  Scalar tr = Scalar::zero(F_->base());
  FieldElem basis = one_like();
  const FieldElem gen = generator(F_);
  for (int i = 0; i < d; ++i) {
    FieldElem col = (*this) * basis;
    tr += col.c_[static_cast<std::size_t>(i)];
    basis = basis * gen;
  }
  return tr;
}

ScalarPoly FieldElem::minimal_polynomial() const {
  // Smallest linear dependency among 1, e, e^2, ... by Gaussian elimination.
  const int d = F_->degree();
  const BaseField k = F_->base();
  std::vector<std::vector<Scalar>> rows;  // reduced power vectors
  std::vector<std::vector<Scalar>> combos;  // expression of each row in powers
  std::vector<int> pivots;
  FieldElem power = one_like();
  for (int n = 0; n <= d; ++n) {
    std::vector<Scalar> v = power.c_;
    std::vector<Scalar> combo(static_cast<std::size_t>(d) + 1, Scalar::zero(k));
    combo[static_cast<std::size_t>(n)] = Scalar::one(k);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Scalar f = v[static_cast<std::size_t>(pivots[r])];
      if (f.is_zero()) continue;
      for (int j = 0; j < d; ++j) v[static_cast<std::size_t>(j)] -= f * rows[r][static_cast<std::size_t>(j)];
      for (int j = 0; j <= d; ++j) combo[static_cast<std::size_t>(j)] -= f * combos[r][static_cast<std::size_t>(j)];
    }
    int piv = -1;
    for (int j = 0; j < d; ++j)
      if (!v[static_cast<std::size_t>(j)].is_zero()) {
        piv = j;
        break;
      }
    if (piv < 0) return ScalarPoly(combo, Scalar::zero(k)).monic();
    Scalar inv = v[static_cast<std::size_t>(piv)].inverse();
    for (auto& s : v) s *= inv;
    for (auto& s : combo) s *= inv;
    rows.push_back(v);
    combos.push_back(combo);
    pivots.push_back(piv);
    power = power * (*this);
  }
  fail(ErrorCode::NotIrreducible, "no minimal polynomial found");
}

std::string FieldElem::str() const {
  if (!F_) return "?";
  if (F_->degree() == 1) return c_[0].str();
  return "[" + rep().str("a") + "]";
}

FieldElem embed(const FieldElem& e, const FieldElem& image_of_generator) {
  FieldElem acc = image_of_generator.zero_like();
  const auto& c = e.coords();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * image_of_generator + FieldElem(image_of_generator.field(), c[i]);
  return acc;
}

}  // namespace adelic
