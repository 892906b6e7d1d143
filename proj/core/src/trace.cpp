#include "adelic/trace.hpp"

namespace adelic {

namespace {

// Solve A x = b over k (A square, invertible).
std::vector<Scalar> solve(std::vector<std::vector<Scalar>> A, std::vector<Scalar> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && A[p][c].is_zero()) ++p;
    if (p == n) fail(ErrorCode::DivisionByZero, "singular trace form");
    std::swap(A[p], A[c]);
    std::swap(b[p], b[c]);
    Scalar inv = A[c][c].inverse();
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c].is_zero()) continue;
      Scalar m = A[r][c] * inv;
      for (std::size_t j = c; j < n; ++j) A[r][j] -= m * A[c][j];
      b[r] -= m * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] = b[i] / A[i][i];
  return b;
}

// The coordinate of y's patch downstairs, pulled back and written in the
// coordinate of x's patch upstairs.
RatFunc target_coordinate(const P1Map& f, int x_patch, int y_patch) {
  const Scheme& X = f.scheme();
  RatFunc coord = X.coords_in(y_patch, 0)[0];
  return X.function_to_patch(f.pullback(coord), 0, x_patch);
}

Tail pushforward_tail(const P1Map& f, const ResidueElement& phi, const Point& y) {
  const Point& x = phi.point();
  const int n = phi.annihilator();
  Tail out;
  if (n == 0) return out;
  FieldElem alpha = x.root();
  FieldElem beta = y.root();
  RatFunc Yx = target_coordinate(f, x.patch(), y.patch());
  FieldElem beta_img = Yx.eval(std::vector<FieldElem>{alpha});
  Series S = expand_local(Yx, x, n) - Series::monomial(beta_img, 0, "s");
  const int dy = y.residue_field()->degree();
  std::vector<FieldElem> basis_y, basis_x;
  for (int j = 0; j < dy; ++j) {
    basis_y.push_back(beta.pow(j));
    basis_x.push_back(beta_img.pow(j));
  }
  std::vector<std::vector<Scalar>> T(static_cast<std::size_t>(dy), std::vector<Scalar>(static_cast<std::size_t>(dy)));
  for (int j = 0; j < dy; ++j)
    for (int l = 0; l < dy; ++l) T[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] = (basis_y[static_cast<std::size_t>(j)] * basis_y[static_cast<std::size_t>(l)]).trace();
  Series P = Series::monomial(alpha.one_like(), 0, "s").truncate(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> v;
    for (int j = 0; j < dy; ++j) {
      FieldElem acc = alpha.zero_like();
      for (const auto& [m, w] : phi.tail()) acc += basis_x[static_cast<std::size_t>(j)] * P.coeff(m[0]) * w;
      v.push_back(acc.trace());
    }
    std::vector<Scalar> c = solve(T, v);
    FieldElem wi = beta.zero_like();
    for (int l = 0; l < dy; ++l) wi += c[static_cast<std::size_t>(l)] * basis_y[static_cast<std::size_t>(l)];
    out[{i, 0}] = wi;
    P = (P * S).truncate(n);
  }
  return out;
}

}  // namespace

RatFunc trace_function(const P1Map& f, const RatFunc& h) {
  const Scheme& X = f.scheme();
  const BaseField& k = X.base();
  const Vars& tv = X.patch_vars(0);
  if (!f.is_power()) return h.substitute({f.inverse().function()});
  const int e = f.exponent();
  const Vars st{"s", "t"};
  Poly a = Poly::variable(1, st, k).pow(e) - Poly::variable(0, st, k);
  Poly D = h.den_poly().with_vars({"t"});
  Poly D2 = D.nvars() == 0 ? D : D.substitute({Poly::variable(1, st, k)});
  if (D.nvars() == 0) D2 = Poly::constant(D.constant_value(), st, k);
  ScalarPoly norm = resultant(a, D2, 1).to_upoly(0);
  // norm(t^e) / D(t)
  Poly t = Poly::variable(0, tv, k);
  Poly norm_te(tv, k);
  for (int j = 0; j <= norm.degree(); ++j) norm_te += Poly::constant(norm.coeff(j), tv, k) * t.pow(e * j);
  Poly M = h.num() * exact_div(norm_te, h.den_poly().nvars() == 0 ? Poly::constant(h.den_poly().constant_value(), tv, k) : h.den_poly());
  Poly num(tv, k);
  for (const auto& [m, c] : M.terms())
    if (m[0] % e == 0) num += Poly::monomial(Scalar(static_cast<long>(e), k) * c, {m[0] / e, 0}, tv, k);
  auto [unit, fac] = factor_poly(Poly::from_upoly(norm, 0, tv, k));
  return RatFunc(unit.inverse() * num, fac);
}

RatFunc trace_form(const P1Map& f, const RatFunc& g) {
  if (!f.is_power()) {
    const RatFunc psi = f.inverse().function();
    return g.substitute({psi}) * psi.derivative(0);
  }
  return trace_function(f, g * f.function().derivative(0).inverse());
}

ResidueElement trace_component(const P1Map& f, const ResidueElement& phi) {
  const Point& x = phi.point();
  if (x.scheme() != f.scheme()) fail(ErrorCode::InvalidPoint, "component on another scheme");
  if (x.is_generic()) return ResidueElement::generic(x.scheme(), trace_form(f, phi.form_coeff()));
  Point y = f.image(x);
  return ResidueElement::closed(y, pushforward_tail(f, phi, y));
}

ResidueComplexElement trace_pushforward(const P1Map& f, const ResidueComplexElement& phi) {
  ResidueComplexElement out;
  for (const auto& [p, e] : phi.terms()) {
    (void)p;
    out.add(trace_component(f, e));
  }
  return out;
}

}  // namespace adelic
