#include <doctest.h>

#include "adelic/completion.hpp"
#include "adelic/parse.hpp"

using namespace adelic;

namespace {

const BaseField Q = BaseField::rationals();

// brute-force power-series inverse on a dense coefficient vector
std::vector<Scalar> geometric_inverse(const std::vector<Scalar>& a, int n) {
  std::vector<Scalar> b(static_cast<std::size_t>(n), Scalar::zero(Q));
  b[0] = a[0].inverse();
  for (int m = 1; m < n; ++m) {
    Scalar acc = Scalar::zero(Q);
    for (int k = 1; k <= m && k < static_cast<int>(a.size()); ++k) acc = acc + a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(m - k)];
    b[static_cast<std::size_t>(m)] = -(acc / a[0]);
  }
  return b;
}

}  // namespace

TEST_SUITE("completions") {
  TEST_CASE("line chains") {
    Scheme A1 = Scheme::parse("A1/Q");
    const Vars& t = A1.patch_vars(0);
    Chain xi({Point::generic(A1), Point::parse(A1, "pt(t=0)")});
    CompletionElement e = complete(parse_ratfunc("1/t", t, Q), xi, 5);
    CHECK(e.series().valuation() == -1);
    CHECK(e.series().coeff(-1).base_value() == Scalar::one(Q));
    CHECK(local_coordinates(xi, 5).str().find("t") != std::string::npos);

    // 1/(2 - 3t + t^2) against a dense inverse
    CompletionElement g = complete(parse_ratfunc("1/((t-1)*(t-2))", t, Q), xi, 6);
    auto ora = geometric_inverse({Scalar(2L, Q), Scalar(-3L, Q), Scalar(1L, Q)}, 6);
    for (int i = 0; i < 6; ++i) CHECK(g.series().coeff(i).base_value() == ora[static_cast<std::size_t>(i)]);
  }

  TEST_CASE("plane flags") {
    Scheme A2 = Scheme::parse("A2/Q");
    const Vars& xy = A2.patch_vars(0);
    Point eta = Point::generic(A2), C = Point::parse(A2, "curve(y)"), o = Point::parse(A2, "pt(x=0,y=0)");
    Chain flag({eta, C, o});
    CompletionElement a = complete(parse_ratfunc("1/(x*y)", xy, Q), flag, 6);
    CHECK(coefficient(a.iterated(), -1, -1) == Scalar::one(Q));

    CompletionElement b = complete(parse_ratfunc("1/(x+y)", xy, Q), flag, 6);
    for (int i = -2; i < 0; ++i) CHECK(b.iterated().coeff(i).is_zero());
    for (int i = 0; i < 4; ++i) CHECK(coefficient(b.iterated(), i, -i - 1) == Scalar(i % 2 ? -1L : 1L, Q));

    CompletionElement x = complete(parse_ratfunc("x", xy, Q), flag, 6);
    CHECK(coefficient(x.iterated(), 0, 1) == Scalar::one(Q));
    CHECK(coefficient(x.iterated(), 1, 0).is_zero());
  }

  TEST_CASE("ring homomorphism") {
    Scheme A2 = Scheme::parse("A2/Q");
    const Vars& xy = A2.patch_vars(0);
    Chain flag({Point::generic(A2), Point::parse(A2, "curve(x+y-1)"), Point::parse(A2, "pt(x=1,y=0)")});
    RatFunc f = parse_ratfunc("(x^2+y)/((x+y-1)*(x-1))", xy, Q), g = parse_ratfunc("(y-3)/(y)", xy, Q);
    CHECK((complete(f, flag, 6) * complete(g, flag, 6)).agrees_with(complete(f * g, flag, 6)));
  }

  TEST_CASE("cofaces") {
    Scheme A2 = Scheme::parse("A2/Q");
    const Vars& xy = A2.patch_vars(0);
    Point eta = Point::generic(A2), C = Point::parse(A2, "curve(y)"), o = Point::parse(A2, "pt(x=0,y=0)");
    Chain flag({eta, C, o});

    CompletionElement at_o = complete(parse_ratfunc("x", xy, Q), Chain({o}), 6);
    CHECK(coface_minus(at_o, Chain({o})).agrees_with(at_o));


    CompletionElement three = complete(RatFunc::constant(Scalar(3L, Q), xy, Q), Chain({o}), 6);
    CHECK(coefficient(coface_plus(three, flag).iterated(), 0, 0) == Scalar(3L, Q));

    CHECK(coefficient(coface_plus(at_o, flag).iterated(), 0, 1) == Scalar::one(Q));

    RatFunc h = parse_ratfunc("(1+x*y)/(1-x-2*y)", xy, Q);
    CHECK(coface_plus(complete(h, Chain({o}), 6), flag).agrees_with(complete(h, flag, 6)));
    CHECK_THROWS_AS(coface_plus(complete(h, Chain({C, o}), 6), flag), Error);
  }

  TEST_CASE("values outside the completion") {
    Scheme A2 = Scheme::parse("A2/Q");
    Point o = Point::parse(A2, "pt(x=0,y=0)");
    CHECK_THROWS_AS(complete(parse_ratfunc("1/x", A2.patch_vars(0), Q), Chain({o}), 4), Error);
  }
}
