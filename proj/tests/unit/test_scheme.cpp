#include <doctest.h>

#include <algorithm>

#include "adelic/parse.hpp"
#include "adelic/scheme.hpp"

using namespace adelic;

namespace {

const BaseField Q = BaseField::rationals();

bool contains(const std::vector<Point>& v, const Point& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

}  // namespace

TEST_SUITE("scheme-model") {
  TEST_CASE("literals") {
    CHECK(Scheme::parse("P1/Q").is_projective());
    CHECK(Scheme::parse("A2/F5").dim() == 2);
    CHECK_THROWS_AS(Scheme::parse("P3/Q"), Error);
    CHECK_THROWS_AS(Scheme::parse("A1/F4"), Error);
    Scheme A2 = Scheme::parse("A2/Q");
    CHECK(Point::parse(A2, "generic").is_generic());
    CHECK(Point::parse(A2, "curve(y^2-x^3)").is_curve());
    CHECK_THROWS_AS(Point::parse(A2, "curve(x*y)"), Error);
    CHECK_THROWS_AS(Point::parse(Scheme::parse("A1/Q"), "pt(inf)"), Error);
  }

  TEST_CASE("specialization") {
    Scheme A2 = Scheme::parse("A2/Q");
    Point eta = Point::generic(A2), y0 = Point::parse(A2, "curve(y)"), x0 = Point::parse(A2, "curve(x)");
    Point o = Point::parse(A2, "pt(x=0,y=0)"), p = Point::parse(A2, "pt(x=1,y=0)");
    CHECK(specializes(eta, y0));
    CHECK(specializes(x0, o));
    CHECK_FALSE(specializes(x0, p));
    CHECK(specializes(y0, p));
  }

  TEST_CASE("chains") {
    Scheme A2 = Scheme::parse("A2/Q"), A1 = Scheme::parse("A1/Q");
    Point eta = Point::generic(A2), C = Point::parse(A2, "curve(y)"), o = Point::parse(A2, "pt(x=0,y=0)");
    CHECK(is_saturated(Chain({eta, C, o})));
    CHECK_FALSE(is_saturated(Chain({eta, o})));
    CHECK(is_saturated(Chain({Point::generic(A1), Point::parse(A1, "pt(t=0)")})));
    CHECK_FALSE(is_reduced(Chain({o, o})));
    CHECK(is_reduced(Chain({eta, o})));
    CHECK_FALSE(is_reduced(Chain({eta, C, C})));
    CHECK(face(Chain({eta, C, o}), 1) == Chain({eta, o}));
    CHECK(face(Chain({eta, o}), 0) == Chain({o}));
    CHECK(face(Chain({eta, o}), 1) == Chain({eta}));
    CHECK(concat(Chain({eta}), Chain({o})) == Chain({eta, o}));
    CHECK(concat(Chain({eta, C}), Chain({o})) == Chain({eta, C, o}));
    CHECK_THROWS_AS(concat(Chain({o}), Chain({eta})), Error);
    CHECK_THROWS_AS(Chain({o, C}), Error);
  }

  TEST_CASE("pole supports") {
    Scheme P1 = Scheme::parse("P1/Q");
    auto s = pole_support(P1, parse_form("dt/t", P1.patch_vars(0), Q));
    CHECK(s.size() == 2);
    CHECK(contains(s, Point::parse(P1, "pt(t=0)")));
    CHECK(contains(s, Point::infinity(P1)));

    Scheme A2 = Scheme::parse("A2/Q");
    auto s2 = pole_support(A2, parse_form("dx^dy/(x*y)", A2.patch_vars(0), Q));
    CHECK(s2.size() == 3);
    CHECK(contains(s2, Point::parse(A2, "curve(x)")));
    CHECK(contains(s2, Point::parse(A2, "curve(y)")));
    CHECK(contains(s2, Point::parse(A2, "pt(x=0,y=0)")));

    Scheme A1 = Scheme::parse("A1/Q");
    CHECK(pole_support(A1, parse_form("t dt", A1.patch_vars(0), Q)).empty());
  }

  TEST_CASE("the plane at infinity") {
    Scheme P2 = Scheme::parse("P2/F5");
    Point L = Point::parse(P2, "curve(inf)");
    // dx^dy has a triple pole along the line at infinity
    auto s = pole_support(P2, parse_form("dx^dy", P2.patch_vars(0), P2.base()));
    CHECK(contains(s, L));
  }
}
