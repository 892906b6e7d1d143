#include <doctest.h>

#include <algorithm>

#include "adelic/expand.hpp"
#include "adelic/parse.hpp"
#include "adelic/scheme.hpp"

using namespace adelic;

namespace {

const BaseField Q = BaseField::rationals();

ScalarSeries S(std::vector<long> c, int start = 0, int prec = ScalarSeries::kExact) {
  std::vector<Scalar> v;
  for (long x : c) v.emplace_back(x, Q);
  return ScalarSeries(start, v, prec, Scalar::zero(Q), "t");
}

// binomial coefficient over Z
long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Scalar series_value(const Series& s, int e) { return s.coeff(e).base_value(); }

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("arithmetic") {
    ScalarSeries g = S({1, -1}).inverse(4);
    CHECK(g.precision() == 4);
    for (int i = 0; i < 4; ++i) CHECK(g.coeff(i) == Scalar::one(Q));
    CHECK_THROWS_AS(g.coeff(4), Error);
    ScalarSeries t = S({1}, 1);
    CHECK(t.inverse() == S({1}, -1));
    CHECK(S({1, 1}) * S({1, -1}) == S({1, 0, -1}));
    CHECK((S({1, 2, 3}) + S({0, 0, 0, 4}, 0, 3)).precision() == 3);
    CHECK_THROWS_AS(S({0, 1}, 0, 2).truncate(1).inverse(), Error);
  }

  TEST_CASE("expansion on the line") {
    Scheme P1 = Scheme::parse("P1/Q");
    const Vars& t = P1.patch_vars(0);
    Point zero = Point::parse(P1, "pt(t=0)"), inf = Point::parse(P1, "pt(inf)");
    Series a = expand_at_place(P1, parse_ratfunc("1/t", t, Q), zero, 4);
    CHECK(a.valuation() == -1);
    CHECK(series_value(a, -1) == Scalar::one(Q));
    Series b = expand_at_place(P1, parse_ratfunc("1/(1-t)", t, Q), zero, 3);
    CHECK(b.precision() >= 3);
    for (int i = 0; i < 3; ++i) CHECK(series_value(b, i) == Scalar::one(Q));
    Series c = expand_at_place(P1, parse_ratfunc("t", t, Q), inf, 4);
    CHECK(c.valuation() == -1);
    CHECK(series_value(c, -1) == Scalar::one(Q));
    CHECK_THROWS_AS(expand_at_place(Scheme::parse("A1/Q"), parse_ratfunc("t", t, Q), Point::infinity(P1), 3), Error);
  }

  TEST_CASE("expansion at a non-rational point") {
    Scheme A1 = Scheme::parse("A1/Q");
    Point i = Point::parse(A1, "pt(t^2+1=0)");
    Series s = expand_local(parse_ratfunc("1/(t^2+1)", A1.patch_vars(0), Q), i, 3);
    CHECK(s.valuation() == -1);
    // 1/(t^2+1) = 1/((t-i)(t+i)); leading coefficient 1/(2i) = -i/2
    FieldElem lead = s.coeff(-1);
    CHECK(lead * lead == FieldElem(lead.field(), Scalar(-1L, Q) / Scalar(4L, Q)));
  }

  TEST_CASE("iterated expansion") {
    Scheme A2 = Scheme::parse("A2/Q");
    const Vars& xy = A2.patch_vars(0);
    Point C = Point::parse(A2, "curve(y)"), o = Point::parse(A2, "pt(x=0,y=0)");
    PlaneFrame F = make_frame(C, o, 6, 6);

    IterSeries a = iter_expand(F, parse_ratfunc("1/(x*y)", xy, Q));
    CHECK(coefficient(a, -1, -1) == Scalar::one(Q));
    CHECK(a.valuation() == -1);

    // 1/(u+v) = sum (-1)^i u^i v^{-i-1}
    IterSeries b = iter_expand(F, parse_ratfunc("1/(x+y)", xy, Q));
    for (int i = 0; i < 5; ++i)
      for (int j = -6; j < b.coeff(i).precision(); ++j) {
        Scalar expect(j == -i - 1 ? (i % 2 ? -1L : 1L) : 0L, Q);
        CHECK(coefficient(b, i, j) == expect);
      }
    CHECK(coefficient(b, -1, -1).is_zero());

    // 1/(u v (1-u-v)) = sum_k (u+v)^k / (uv); coefficient of u^a v^b is binom(a+b+2, a+1)
    IterSeries c = iter_expand(F, parse_ratfunc("1/((x)*(y)*(1-x-y))", xy, Q));
    for (int i = -1; i < 3; ++i)
      for (int j = -1; j < std::min(3, c.coeff(i).precision()); ++j) CHECK(coefficient(c, i, j) == Scalar(binom(i + j + 2, i + 1), Q));
  }

  TEST_CASE("coefficient extraction") {
    ScalarSeries s = S({1, 2, 3}, -1);
    CHECK(s.coeff(-1) == Scalar::one(Q));
    CHECK(s.coeff(-5).is_zero());
  }
}
