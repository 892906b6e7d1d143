#include <doctest.h>

#include "adelic/act.hpp"
#include "adelic/parse.hpp"
#include "adelic/trace.hpp"

using namespace adelic;

namespace {

const BaseField Q = BaseField::rationals();
const Vars S{"s1", "s2"};

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Res of P ds1^ds2 / (s1^i s2^j (1 - s1 - s2)): expand 1/(1-s1-s2) as
// sum_k (s1+s2)^k and read off the coefficient of s1^{i-1} s2^{j-1} in P times it.
Scalar geometric_residue(const Poly& p, int i, int j) {
  Scalar acc = Scalar::zero(Q);
  for (int a = 0; a <= p.degree_in(0); ++a)
    for (int b = 0; b <= p.degree_in(1); ++b) {
      const int ea = i - 1 - a, eb = j - 1 - b;
      if (ea < 0 || eb < 0) continue;
      acc = acc + p.coeff({a, b}) * Scalar(binom(ea + eb, ea), Q);
    }
  return acc;
}

RatFunc one(const Scheme& X) { return RatFunc::constant(Scalar::one(X.base()), X.patch_vars(0), X.base()); }

ResidueElement generic(const Scheme& X, const std::string& w) {
  return ResidueElement::generic(X, parse_form(w, X.patch_vars(0), X.base()));
}

}  // namespace

TEST_SUITE("residues") {
  TEST_CASE("residue functional on iterated series") {
    IterSeries beta = IterSeries::monomial(ScalarSeries::monomial(Scalar::one(Q), -1, "v"), -1, "u");
    IterSeries a = iter_constant(Scalar::one(Q), 4, 4);
    CHECK(residue_functional(beta, a) == Scalar::one(Q));
    IterSeries reg = iter_constant(Scalar(5L, Q), 4, 4);
    CHECK(residue_functional(reg, a).is_zero());
  }

  TEST_CASE("residue formula in two variables") {
    CHECK(laurent_residue(parse_form("1/(s1*s2) ds1^ds2", S, Q), RatFunc::constant(Scalar::one(Q), S, Q)) == Scalar::one(Q));
    RatFunc a1 = RatFunc::constant(Scalar::one(Q), S, Q);
    CHECK(laurent_residue(parse_form("1/((s1)*(s2)*(1-s1-s2)) ds1^ds2", S, Q), a1) == Scalar::one(Q));
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        Poly p = parse_poly("2 + s1 - 3*s2 + s1*s2^2", S, Q);
        std::string den = "(s1)^" + std::to_string(i) + "*(s2)^" + std::to_string(j) + "*(1-s1-s2)";
        Form beta = parse_form("1/(" + den + ") ds1^ds2", S, Q);
        CHECK(laurent_residue(beta, RatFunc(p), 32) == geometric_residue(p, i, j));
      }
    CHECK(laurent_residue(parse_form("s1 ds1^ds2", S, Q), a1).is_zero());
  }

  TEST_CASE("residues along chains on the line") {
    Scheme P1 = Scheme::parse("P1/Q");
    ResidueElement phi = generic(P1, "dt/t");
    Point zero = Point::parse(P1, "pt(t=0)"), inf = Point::infinity(P1);
    ResidueElement at0 = delta_chain(phi, Chain({Point::generic(P1), zero}));
    CHECK(at0.annihilator() == 1);
    CHECK(at0.apply(one(P1)) == Scalar::one(Q));
    CHECK(at0.apply(parse_ratfunc("3+t", P1.patch_vars(0), Q)) == Scalar(3L, Q));
    ResidueElement atinf = delta_chain(phi, Chain({Point::generic(P1), inf}));
    CHECK(atinf.apply(RatFunc::constant(Scalar::one(Q), P1.patch_vars(1), Q)) == Scalar(-1L, Q));
  }

  TEST_CASE("coboundary") {
    Scheme P1 = Scheme::parse("P1/Q");
    ResidueComplexElement d = coboundary_delta(ResidueComplexElement(generic(P1, "dt/t")));
    CHECK(d.terms().size() == 2);
    CHECK(residue_sum(d).is_zero());
    Scheme A1 = Scheme::parse("A1/Q");
    CHECK(coboundary_delta(ResidueComplexElement(generic(A1, "t dt"))).is_zero());

    Scheme A2 = Scheme::parse("A2/Q");
    ResidueComplexElement w(generic(A2, "1/(x*y) dx^dy"));
    ResidueComplexElement d1 = coboundary_delta(w);
    CHECK(d1.terms().size() == 2);
    CHECK(coboundary_delta(d1).is_zero());
  }

  TEST_CASE("composed residues through the origin cancel") {
    Scheme A2 = Scheme::parse("A2/Q");
    ResidueElement w = generic(A2, "1/((x)*(y)*(x+y)) dx^dy");
    Point eta = Point::generic(A2), o = Point::parse(A2, "pt(x=0,y=0)");
    ResidueElement sum = ResidueElement::zero(o);
    int nonzero = 0;
    for (const char* c : {"curve(x)", "curve(y)", "curve(x+y)"}) {
      ResidueElement r = delta_chain(w, Chain({eta, Point::parse(A2, c), o}));
      if (!r.is_zero()) ++nonzero;
      sum = sum + r;
    }
    CHECK(nonzero >= 2);
    CHECK(sum.is_zero());
  }

  TEST_CASE("action of adeles") {
    Scheme P1 = Scheme::parse("P1/Q");
    Point eta = Point::generic(P1), zero = Point::parse(P1, "pt(t=0)"), one_pt = Point::parse(P1, "pt(t=1)");
    ResidueComplexElement phi(generic(P1, "dt/t"));
    Adele ind = Adele::explicit_values(P1, 1, {{Chain({eta, zero}), one(P1)}});
    ResidueComplexElement r = act(phi, ind);
    CHECK(r.terms().size() == 1);
    CHECK(r.component(zero).apply(parse_ratfunc("7+t", P1.patch_vars(0), Q)) == Scalar(7L, Q));

    Adele d1 = Adele::coface(1, Adele::one(P1));
    CHECK(act(phi, d1) == coboundary_delta(phi));

    ResidueComplexElement ev(ResidueElement::closed(one_pt, {{{0, 0}, FieldElem(one_pt.residue_field(), Scalar::one(Q))}}));
    CHECK(act(ev, d1) == -coboundary_delta(ev));
    CHECK(act(ev, ind).is_zero());
  }

  TEST_CASE("regular forms") {
    Scheme A1 = Scheme::parse("A1/Q");
    Form dt = parse_form("dt", A1.patch_vars(0), Q);
    Adele unit = Adele::explicit_values(A1, 0, {{Chain({Point::generic(A1)}), one(A1)}});
    CHECK(regular_forms_map(dt, unit) == ResidueComplexElement(ResidueElement::generic(A1, dt)));
    CHECK(regular_forms_map(dt, Adele::coface(1, Adele::one(A1))).is_zero());
  }

  TEST_CASE("traces along finite maps") {
    Scheme P1 = Scheme::parse("P1/Q");
    P1Map sq = P1Map::power(P1, 2);
    ResidueComplexElement phi(generic(P1, "dt/t"));
    CHECK(trace_pushforward(sq, phi) == phi);

    Point one_pt = Point::parse(P1, "pt(t=1)");
    ResidueElement ev = ResidueElement::closed(one_pt, {{{0, 0}, FieldElem(one_pt.residue_field(), Scalar::one(Q))}});
    ResidueElement down = trace_component(sq, ev);
    CHECK(down.point() == one_pt);
    for (const char* a : {"1", "t", "3*t^2-1", "1/(t+2)"}) {
      RatFunc f = parse_ratfunc(a, P1.patch_vars(0), Q);
      CHECK(down.apply(f) == ev.apply(sq.pullback(f)));
    }
  }
}
