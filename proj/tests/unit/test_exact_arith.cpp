#include <doctest.h>

#include "adelic/extfield.hpp"
#include "adelic/factor.hpp"
#include "adelic/parse.hpp"

using namespace adelic;

namespace {

const BaseField Q = BaseField::rationals();
const BaseField F5 = BaseField::prime(5);
const Vars T{"t"};
const Vars XY{"x", "y"};

Poly P(const std::string& s, const Vars& v = XY, const BaseField& k = Q) { return parse_poly(s, v, k); }

// schoolbook product on dense coefficient maps
Poly schoolbook(const Poly& a, const Poly& b) {
  Poly out = a.zero_like();
  for (int i = 0; i <= a.degree_in(0); ++i)
    for (int j = 0; j <= a.degree_in(1); ++j)
      for (int k = 0; k <= b.degree_in(0); ++k)
        for (int l = 0; l <= b.degree_in(1); ++l) {
          Scalar c = a.coeff({i, j}) * b.coeff({k, l});
          if (!c.is_zero()) out += Poly::monomial(c, {i + k, j + l}, a.vars(), Q);
        }
  return out;
}

// Euclid, run by hand on dense univariate coefficient vectors over Q
std::vector<Scalar> euclid(std::vector<Scalar> a, std::vector<Scalar> b) {
  auto trim = [](std::vector<Scalar>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      Scalar f = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = a[i + shift] - f * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  Scalar lead = a.back();
  for (auto& c : a) c = c / lead;
  return a;
}

}  // namespace

TEST_SUITE("exact-arith") {
  TEST_CASE("scalars over Q and F_p") {
    CHECK(Scalar(3L, F5) + Scalar(4L, F5) == Scalar(2L, F5));
    CHECK(Scalar(2L, F5).inverse() == Scalar(3L, F5));
    CHECK((Scalar(1L, Q) / Scalar(3L, Q) + Scalar(1L, Q) / Scalar(6L, Q)) == Scalar(1L, Q) / Scalar(2L, Q));
    CHECK_THROWS_AS(Scalar::zero(Q).inverse(), Error);
    CHECK_THROWS_AS(BaseField::prime(6), Error);
    CHECK_THROWS_AS(Scalar(1L, BaseField::prime(7)) + Scalar(1L, F5), Error);
  }

  TEST_CASE("polynomial arithmetic") {
    CHECK(P("x+y") + P("x-y") == P("2*x"));
    CHECK(P("t", T) * P("t", T) == P("t^2", T));
    CHECK(P("(x+1)*(x-1)") == P("x^2-1"));
    Poly a = P("x^2+3*x*y-2"), b = P("y^2-x+5*x*y");
    CHECK(a * b == schoolbook(a, b));
    CHECK_THROWS_AS(P("x") + P("t", T), Error);
  }

  TEST_CASE("gcd") {
    CHECK(poly_gcd(P("t^2", T), P("t^3", T)) == P("t^2", T));
    CHECK(poly_gcd(P("t-1", T), P("t+1", T)).is_constant());
    Poly g = poly_gcd(P("t^2-1", T), P("t^2-2*t+1", T));
    CHECK(g == P("t-1", T));
    std::vector<Scalar> ora = euclid({Scalar(-1L, Q), Scalar(0L, Q), Scalar(1L, Q)},
                                     {Scalar(1L, Q), Scalar(-2L, Q), Scalar(1L, Q)});
    REQUIRE(ora.size() == 2);
    CHECK(g.coeff({0, 0}) == ora[0]);
    CHECK(g.coeff({1, 0}) == ora[1]);
    CHECK(poly_gcd(P("x^2-y^2"), P("x^2-2*x*y+y^2")) == P("x-y"));
  }

  TEST_CASE("univariate factorization") {
    auto f = factor_univariate(scalar_poly({-1, 0, 1}, F5));
    REQUIRE(f.factors.size() == 2);
    for (const auto& fa : f.factors) {
      CHECK(fa.poly.degree() == 1);
      CHECK(fa.multiplicity == 1);
    }
    CHECK(f.expand() == scalar_poly({-1, 0, 1}, F5));

    auto cube = factor_univariate(scalar_poly({0, 0, 0, 1}, Q));
    REQUIRE(cube.factors.size() == 1);
    CHECK(cube.factors[0].multiplicity == 3);

    // 2^2 = -1 mod 5
    auto g = factor_univariate(scalar_poly({1, 0, 1}, F5));
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].poly * g.factors[1].poly == scalar_poly({-2, 1}, F5) * scalar_poly({2, 1}, F5));
    CHECK((g.factors[0].poly == scalar_poly({2, 1}, F5) || g.factors[1].poly == scalar_poly({2, 1}, F5)));

    CHECK(is_irreducible(scalar_poly({1, 0, 1}, Q)));
    CHECK(is_irreducible(scalar_poly({2, 0, 1}, F5)));
  }

  TEST_CASE("factorization over F_p against brute force root counts") {
    const BaseField F7 = BaseField::prime(7);
    for (long a = 0; a < 7; ++a)
      for (long b = 0; b < 7; ++b) {
        ScalarPoly p = scalar_poly({b, a, 0, 1}, F7);
        int roots = 0;
        for (long x = 0; x < 7; ++x)
          if (p.eval(Scalar(x, F7)).is_zero()) ++roots;
        auto f = factor_univariate(p);
        CHECK(f.expand() == p);
        int linear = 0;
        for (const auto& fa : f.factors)
          if (fa.poly.degree() == 1) ++linear;
        CHECK(static_cast<int>(roots_in_base(p).size()) == linear);
        CHECK((roots > 0) == (linear > 0));
      }
  }

  TEST_CASE("finite extensions") {
    auto F = ExtField::make(scalar_poly({1, 0, 1}, Q));
    FieldElem i = FieldElem::generator(F);
    CHECK(i * i == FieldElem(F, Scalar(-1L, Q)));
    CHECK(i.inverse() == -i);
    CHECK(i.trace() == Scalar(0L, Q));
    CHECK((i + i.one_like()).trace() == Scalar(2L, Q));
    CHECK_THROWS_AS(ExtField::make(scalar_poly({-1, 0, 1}, Q)), Error);
  }

  TEST_CASE("rational functions") {
    RatFunc f = parse_ratfunc("(t^2-1)/(t-1)", T, Q);
    CHECK(f.is_polynomial());
    CHECK(f == parse_ratfunc("t+1", T, Q));
    RatFunc g = parse_ratfunc("1/t", T, Q) + parse_ratfunc("1/(t-1)", T, Q);
    CHECK(g == parse_ratfunc("(2*t-1)/((t)*(t-1))", T, Q));
    CHECK(g.derivative(0) == parse_ratfunc("-1/(t^2)", T, Q) + parse_ratfunc("-1/((t-1)^2)", T, Q));
    CHECK(parse_ratfunc("x/(x*y)", XY, Q) == parse_ratfunc("1/y", XY, Q));
    CHECK_THROWS_AS(parse_ratfunc("1/(t-t)", T, Q), Error);
  }

  TEST_CASE("forms and exterior derivative") {
    CHECK(exterior_d(parse_form("t^2", T, Q)) == parse_form("2*t dt", T, Q));
    CHECK(exterior_d(parse_form("x dy", XY, Q)) == parse_form("dx^dy", XY, Q));
    Form f = parse_form("x^2*y/(x+y)", XY, Q);
    CHECK(exterior_d(exterior_d(f)).is_zero());
    CHECK(wedge(parse_form("dy", XY, Q), parse_form("dx", XY, Q)) == Scalar(-1L, Q) * parse_form("dx^dy", XY, Q));
  }

  TEST_CASE("parser reports positions") {
    try {
      parse_poly("x + * y", XY, Q);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 4);
    }
  }
}
