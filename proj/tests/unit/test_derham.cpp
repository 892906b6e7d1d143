#include <doctest.h>

#include "adelic/parse.hpp"
#include "adelic/random.hpp"

using namespace adelic;

namespace {

const BaseField Q = BaseField::rationals();

Form F(const Scheme& X, const std::string& s) { return parse_form(s, X.patch_vars(0), X.base()); }
RatFunc R(const Scheme& X, const std::string& s) { return parse_ratfunc(s, X.patch_vars(0), X.base()); }

template <class T>
T sign(int s, const T& x) {
  return s % 2 ? -x : x;
}

std::vector<Point> candidates(const InstanceGenerator& gen) { return gen.points(); }

}  // namespace

TEST_SUITE("derham") {
  TEST_CASE("differentials on adele forms") {
    Scheme P1 = Scheme::parse("P1/Q");
    Point eta = Point::generic(P1), zero = Point::parse(P1, "pt(t=0)");
    Adele t0 = Adele::explicit_values(P1, 0, {{Chain({eta}), R(P1, "t")}});
    AdeleForm a = AdeleForm::from_adele(t0);
    CHECK(d_prime(a).evaluate(1, Chain({eta})) == F(P1, "dt"));

    Scheme A1 = Scheme::parse("A1/Q");
    Point e1 = Point::generic(A1), z1 = Point::parse(A1, "pt(t=0)");
    Adele b = Adele::explicit_values(A1, 0, {{Chain({z1}), R(A1, "t+2")}});
    AdeleForm ab = AdeleForm::term(F(A1, "t dt"), b);
    AdeleForm dd = d_double_prime(ab);
    CHECK(dd.bidegrees() == std::vector<AdeleForm::Bidegree>{{1, 1}});
    CHECK(dd.evaluate(1, Chain({e1, z1})) == -(R(A1, "t+2") * F(A1, "t dt")));
    (void)zero;
  }

  TEST_CASE("products of adele forms") {
    Scheme A1 = Scheme::parse("A1/Q");
    Point eta = Point::generic(A1), z = Point::parse(A1, "pt(t=0)");
    AdeleForm unit = AdeleForm::from_adele(Adele::one(A1));
    AdeleForm dt = AdeleForm::from_form(A1, F(A1, "dt"));
    CHECK(equal_on(dt * unit, dt, {eta, z}));
    CHECK(equal_on(unit * dt, dt, {eta, z}));
    // q = 1 and p' = 1
    AdeleForm a = AdeleForm::from_adele(Adele::explicit_values(A1, 1, {{Chain({eta, z}), R(A1, "1/t")}}));
    AdeleForm prod = a * dt;
    CHECK(prod.evaluate(1, Chain({eta, z})) == -(R(A1, "1/t") * F(A1, "dt")));
  }

  TEST_CASE("A is a DGA") {
    for (const char* s : {"P1/Q", "A2/F5"}) {
      Scheme X = Scheme::parse(s);
      for (int i = 0; i < 6; ++i) {
        InstanceGenerator gen(X, derive_seed(7, "dga", static_cast<std::uint64_t>(i)));
        const int n = X.dim();
        const int p = gen.uniform(0, n), q = gen.uniform(0, n);
        AdeleForm a = gen.adele_form(p, q), b = gen.adele_form(gen.uniform(0, n), gen.uniform(0, n));
        AdeleForm zero(X);
        CHECK(equal_on(d_total(d_total(a)), zero, candidates(gen)));
        CHECK(equal_on(d_prime(d_double_prime(a)) + d_double_prime(d_prime(a)), zero, candidates(gen)));
        CHECK(equal_on(d_total(a * b), d_total(a) * b + sign(p + q, a * d_total(b)), candidates(gen)));
      }
    }
  }

  TEST_CASE("dual d is the transpose of d") {
    Scheme A1 = Scheme::parse("A1/Q");
    Point z = Point::parse(A1, "pt(t=0)");
    FieldElem one(z.residue_field(), Scalar::one(Q));
    DualForm phi = from_principal_part(-1, z, {one});  // phi(beta)(a) = Res(a t^-1 beta)
    DualForm d = dual_d(phi);
    for (const char* a : {"1", "t", "2+t^2", "1/(1-t)"}) {
      RatFunc f = R(A1, a);
      // Dual(d) phi (1)(a) = phi(d a) = Res(a' / t) = a'(0)
      Scalar lhs = d.apply(0, z, F(A1, "1")).apply(f);
      Scalar rhs = phi.apply(-1, z, exterior_d(Form::function(f))).apply(RatFunc::constant(Scalar::one(Q), A1.patch_vars(0), Q));
      CHECK(lhs == rhs);
    }
    // D' = (-1)^{p+q+1} Dual(d) with p = -1, q = 0; the polar form is t^-2 dt
    auto polar = principal_part(d_prime(phi), 0, z);
    REQUIRE(polar.size() >= 2);
    CHECK(polar[0].is_zero());
    CHECK(polar[1] == one);
  }

  TEST_CASE("differentials on dual forms") {
    Scheme P1 = Scheme::parse("P1/Q");
    ResidueComplexElement w(ResidueElement::generic(P1, F(P1, "(t+1)/(t*(t-1)) dt")));
    CHECK(d_double_prime(DualForm::from_residue(P1, w)) == DualForm::from_residue(P1, coboundary_delta(w)));
    for (int i = 0; i < 6; ++i) {
      InstanceGenerator gen(P1, derive_seed(3, "dual", static_cast<std::uint64_t>(i)));
      DualForm phi = gen.dual_form(gen.uniform(-1, 0), gen.uniform(-1, 0));
      CHECK(d_prime(d_prime(phi)).is_zero());
      CHECK(d_double_prime(d_double_prime(phi)).is_zero());
      CHECK((d_prime(d_double_prime(phi)) + d_double_prime(d_prime(phi))).is_zero());
    }
  }

  TEST_CASE("D' Leibniz against polynomial functions") {
    Scheme A1 = Scheme::parse("A1/Q");
    for (int i = 0; i < 10; ++i) {
      InstanceGenerator gen(A1, derive_seed(9, "dprime", static_cast<std::uint64_t>(i)));
      const int p = gen.uniform(-1, 0), q = gen.uniform(-1, 0);
      DualForm phi = gen.dual_form(p, q);
      AdeleForm alpha = AdeleForm::from_adele(Adele::global(A1, RatFunc(gen.polynomial(3))));
      CHECK(d_prime(act_forms(phi, alpha)) == act_forms(d_prime(phi), alpha) + sign(p + q, act_forms(phi, d_prime(alpha))));
    }
  }

  TEST_CASE("F is a DG module over A") {
    Scheme P1 = Scheme::parse("P1/Q");
    DualForm g = DualForm::generic_form(P1, F(P1, "1/(t*(t-2))"));
    CHECK(act_forms(g, AdeleForm::from_adele(Adele::one(P1))) == g);
    for (int i = 0; i < 10; ++i) {
      InstanceGenerator gen(P1, derive_seed(5, "dg", static_cast<std::uint64_t>(i)));
      const int p = gen.uniform(-1, 0), q = gen.uniform(-1, 0);
      DualForm phi = gen.dual_form(p, q);
      AdeleForm a = gen.adele_form(0, gen.uniform(0, 1));
      CHECK(d_double_prime(act_forms(phi, a)) ==
            act_forms(d_double_prime(phi), a) + sign(p + q, act_forms(phi, d_double_prime(a))));
    }
  }
}
