#include <doctest.h>

#include <algorithm>
#include <random>

#include "adelic/act.hpp"
#include "adelic/cohomology.hpp"
#include "adelic/parse.hpp"

using namespace adelic;

namespace {

const BaseField Q = BaseField::rationals();

RatFunc R(const Scheme& X, const std::string& s, int patch = 0) { return parse_ratfunc(s, X.patch_vars(patch), X.base()); }

// h^0 and h^1 of O(n) on P^1 from the Cech complex k[t] + k[1/t] -> k[t, 1/t],
// (f, g) -> f - t^n g(1/t), counted on the monomial basis t^e, |e| <= window.
std::pair<int, int> cech(int n, int window) {
  int h0 = 0, h1 = 0;
  for (int e = -window; e <= window; ++e) {
    const bool from_t = e >= 0, from_s = e <= n;
    if (from_t && from_s) ++h0;
    if (!from_t && !from_s) ++h1;
  }
  return {h0, h1};
}

// Laurent expansion of num/den at t = a by substituting t = s + a and
// dividing dense coefficient vectors.
std::vector<Scalar> shifted_coeffs(const ScalarPoly& p, const Scalar& a) {
  ScalarPoly q = p.compose(ScalarPoly({a, Scalar::one(a.field())}, a.zero_like()));
  std::vector<Scalar> c;
  for (int i = 0; i <= q.degree(); ++i) c.push_back(q.coeff(i));
  return c;
}

std::map<int, Scalar> laurent_oracle(const ScalarPoly& num, const ScalarPoly& den, const Scalar& a, int order) {
  std::vector<Scalar> N = shifted_coeffs(num, a), D = shifted_coeffs(den, a);
  int v = 0;
  while (D[static_cast<std::size_t>(v)].is_zero()) ++v;
  D.erase(D.begin(), D.begin() + v);
  std::map<int, Scalar> out;
  const int len = order + v + 1;
  std::vector<Scalar> q(static_cast<std::size_t>(len), a.zero_like());
  for (int m = 0; m < len; ++m) {
    Scalar acc = m < static_cast<int>(N.size()) ? N[static_cast<std::size_t>(m)] : a.zero_like();
    for (int k = 1; k <= m && k < static_cast<int>(D.size()); ++k) acc = acc - D[static_cast<std::size_t>(k)] * q[static_cast<std::size_t>(m - k)];
    q[static_cast<std::size_t>(m)] = acc / D[0];
    if (m - v < order && !q[static_cast<std::size_t>(m)].is_zero()) out[m - v] = q[static_cast<std::size_t>(m)];
  }
  return out;
}

}  // namespace

TEST_SUITE("adeles") {
  TEST_CASE("evaluation") {
    Scheme P1 = Scheme::parse("P1/Q");
    Point eta = Point::generic(P1), zero = Point::parse(P1, "pt(t=0)"), inf = Point::infinity(P1);
    Adele d1 = Adele::coface(1, Adele::one(P1));
    CHECK(d1.degree() == 1);
    CHECK(d1.evaluate(Chain({eta, zero})) == R(P1, "1"));
    Adele a = Adele::explicit_values(P1, 1, {{Chain({eta, zero}), R(P1, "1/t")}});
    CHECK(a.evaluate(Chain({eta, zero})) == R(P1, "1/t"));
    CHECK(a.evaluate(Chain({eta, inf})).is_zero());
    CHECK_THROWS_AS(Adele::explicit_values(P1, 1, {{Chain({zero}), R(P1, "1")}}), Error);
    CHECK_THROWS_AS(Adele::explicit_values(P1, 0, {{Chain({zero}), R(P1, "1/t")}}), Error);
  }

  TEST_CASE("simplicial coboundary") {
    Scheme P1 = Scheme::parse("P1/Q");
    Point eta = Point::generic(P1), zero = Point::parse(P1, "pt(t=0)"), one = Point::parse(P1, "pt(t=1)");
    Adele c = Adele::explicit_values(P1, 0, {{Chain({eta}), R(P1, "5")}});
    CHECK(c.coboundary().evaluate(Chain({eta, zero})) == R(P1, "-5"));
    CHECK(Adele::one(P1).coboundary().evaluate(Chain({eta, one})).is_zero());

    Scheme A2 = Scheme::parse("A2/Q");
    Point e2 = Point::generic(A2), C = Point::parse(A2, "curve(x-y)"), o = Point::parse(A2, "pt(x=0,y=0)");
    Adele b = Adele::explicit_values(A2, 0, {{Chain({e2}), R(A2, "1/(x-y)")}, {Chain({C}), R(A2, "x/(x+1)")}, {Chain({o}), R(A2, "x+2")}});
    b = b + Adele::global(A2, R(A2, "x*y"));
    Adele db = b.coboundary();
    CHECK(db.evaluate(Chain({C, o})) == R(A2, "x+2") - R(A2, "x/(x+1)"));
    Adele dd = db.coboundary();
    CHECK(dd.degree() == 2);
    auto chains = saturated_chains_from(e2, 2, {e2, C, o});
    REQUIRE_FALSE(chains.empty());
    for (const auto& ch : chains) CHECK(dd.evaluate(ch).is_zero());
    CHECK(dd.evaluate(Chain({e2, C, o})).is_zero());
  }

  TEST_CASE("Alexander-Whitney product") {
    Scheme P1 = Scheme::parse("P1/Q");
    Point eta = Point::generic(P1), zero = Point::parse(P1, "pt(t=0)");
    Adele a0 = Adele::explicit_values(P1, 0, {{Chain({zero}), R(P1, "t+1")}});
    Adele b0 = Adele::explicit_values(P1, 0, {{Chain({zero}), R(P1, "t-3")}});
    CHECK((a0 * b0).evaluate(Chain({zero})) == R(P1, "(t+1)*(t-3)"));
    Adele one = Adele::one(P1);
    Adele a1 = Adele::explicit_values(P1, 1, {{Chain({eta, zero}), R(P1, "1/t")}});
    CHECK((one * a1).evaluate(Chain({eta, zero})) == R(P1, "1/t"));
    CHECK((a1 * one).evaluate(Chain({eta, zero})) == R(P1, "1/t"));
    Adele c = Adele::explicit_values(P1, 0, {{Chain({zero}), R(P1, "4")}});
    CHECK((a1 * c).evaluate(Chain({eta, zero})) == R(P1, "4/t"));
    CHECK((c * a1).evaluate(Chain({eta, zero})).is_zero());
  }

  TEST_CASE("literals") {
    Scheme P1 = Scheme::parse("P1/Q");
    Adele a = parse_adele(P1, "adele{ (generic,pt(t=0)): 1/t ; symb: d1(1) }");
    CHECK(a.degree() == 1);
    CHECK(a.evaluate(Chain({Point::generic(P1), Point::parse(P1, "pt(t=0)")})) == R(P1, "1/t + 1"));
    CHECK_THROWS_AS(parse_adele(P1, "adele{ (generic,pt(t=0)) 1/t }"), Error);
  }

  TEST_CASE("residue pairing") {
    Scheme P1 = Scheme::parse("P1/Q");
    Point zero = Point::parse(P1, "pt(t=0)");
    ResidueComplexElement ev(ResidueElement::closed(zero, {{{0, 0}, FieldElem(zero.residue_field(), Scalar::one(Q))}}));
    CHECK(residue_pairing(ev, Adele::one(P1)) == Scalar::one(Q));
    ResidueComplexElement d = coboundary_delta(ResidueComplexElement(ResidueElement::generic(P1, parse_form("dt/t", P1.patch_vars(0), Q))));
    CHECK(residue_pairing(d, Adele::one(P1)).is_zero());

    ResidueComplexElement dt(ResidueElement::generic(P1, parse_form("dt", P1.patch_vars(0), Q)));
    Adele rep = Adele::explicit_values(P1, 1, {{Chain({Point::generic(P1), zero}), R(P1, "1/t")}});
    CHECK(residue_pairing(dt, rep) == Scalar::one(Q));
  }

  TEST_CASE("line bundle cohomology against Cech") {
    for (const char* s : {"P1/Q", "P1/F7"}) {
      Scheme P1 = Scheme::parse(s);
      for (int n = -4; n <= 4; ++n) {
        auto [h0, h1] = cech(n, 12);
        CohomologyDims d = line_bundle_cohomology(P1, n);
        CHECK(d.h0 == h0);
        CHECK(d.h1 == h1);
      }
    }
  }

  TEST_CASE("Serre duality pairing") {
    Scheme P1 = Scheme::parse("P1/Q");
    for (int n = 2; n <= 4; ++n) {
      Matrix m = serre_pairing_matrix(P1, n);
      CHECK(static_cast<int>(m.size()) == n - 1);
      CHECK(matrix_rank(m) == n - 1);
    }
  }

  TEST_CASE("classical adeles") {
    Scheme P1 = Scheme::parse("P1/Q");
    const Vars& t = P1.patch_vars(0);
    ScalarPoly num = scalar_poly({3, 0, 1, 2}, Q), den = scalar_poly({0, -1, 1}, Q);
    RatFunc f = RatFunc(Poly::from_upoly(num, 0, t, Q)) / RatFunc(Poly::from_upoly(den, 0, t, Q));
    Adele a = -Adele::explicit_values(P1, 0, {{Chain({Point::generic(P1)}), f}}).coboundary();
    for (long x : {0L, 1L}) {
      Point p = Point::parse(P1, "pt(t=" + std::to_string(x) + ")");
      Series c = classical_component(a, p, 6);
      auto ora = laurent_oracle(num, den, Scalar(x, Q), 6);
      for (int e = -3; e < 6; ++e) {
        Scalar expect = ora.count(e) ? ora.at(e) : Scalar::zero(Q);
        CHECK(c.coeff(e).base_value() == expect);
      }
    }
    // at infinity in s = 1/t: f = (3s^3 + s + 2)/(s - s^2)
    Series ci = classical_component(a, Point::infinity(P1), 6);
    auto ora = laurent_oracle(scalar_poly({2, 1, 0, 3}, Q), scalar_poly({0, 1, -1}, Q), Scalar::zero(Q), 6);
    for (int e = -3; e < 6; ++e) CHECK(ci.coeff(e).base_value() == (ora.count(e) ? ora.at(e) : Scalar::zero(Q)));
  }
}
