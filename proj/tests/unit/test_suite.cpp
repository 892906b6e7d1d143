#include <doctest.h>

#include <algorithm>

#include "adelic/random.hpp"
#include "adelic/suite.hpp"

using namespace adelic;

TEST_SUITE("cli") {
  TEST_CASE("config text") {
    SuiteConfig c = SuiteConfig::parse(
        "# comment\n"
        "scheme = P1/F7\n"
        "seed = 42   # trailing\n"
        "trials = 3\n"
        "order-cap = 16\n"
        "suite = leibniz, delta-squared\n"
        "suite = cohomology\n");
    CHECK(c.scheme == "P1/F7");
    CHECK(c.seed == 42);
    CHECK(c.trials == 3);
    CHECK(c.order_cap == 16);
    CHECK(c.suites == std::vector<std::string>{"leibniz", "delta-squared", "cohomology"});
    CHECK_NOTHROW(c.validate());
    CHECK_THROWS_AS(SuiteConfig::parse("trials 3"), Error);
    CHECK_THROWS_AS(SuiteConfig::parse("colour = red"), Error);
    CHECK_THROWS_AS(SuiteConfig::parse("seed = many"), Error);
  }

  TEST_CASE("config invariants") {
    SuiteConfig c;
    c.trials = 0;
    CHECK_THROWS_AS(c.validate(), Error);
    c.trials = 1;
    c.order_cap = 3;
    CHECK_THROWS_AS(c.validate(), Error);
    c.order_cap = 8;
    c.suites = {"no-such-identity"};
    CHECK_THROWS_AS(c.validate(), Error);
    c.suites = {"parshin-2d"};
    CHECK_THROWS_AS(c.validate(), Error);
    c.scheme = "A2/Q";
    CHECK_NOTHROW(c.validate());
  }

  TEST_CASE("identity catalog") {
    const auto& names = suite_names();
    CHECK(std::is_sorted(names.begin(), names.end()));
    Scheme P1 = Scheme::parse("P1/Q"), A2 = Scheme::parse("A2/Q");
    CHECK(suite_applies("trace-linearity", P1));
    CHECK_FALSE(suite_applies("trace-linearity", A2));
    CHECK(suite_applies("associativity", A2));
    CHECK_THROWS_AS(run_identity("associativity", P1, 1, 1), Error);
  }

  TEST_CASE("seeds") {
    CHECK(derive_seed(1, "leibniz", 0) == derive_seed(1, "leibniz", 0));
    CHECK(derive_seed(1, "leibniz", 0) != derive_seed(1, "leibniz", 1));
    CHECK(derive_seed(1, "leibniz", 0) != derive_seed(2, "leibniz", 0));
    CHECK(derive_seed(1, "leibniz", 0) != derive_seed(1, "dg-module", 0));
  }

  TEST_CASE("reports are reproducible") {
    SuiteConfig c;
    c.scheme = "P1/F7";
    c.seed = 11;
    c.trials = 4;
    c.suites = {"leibniz", "dg-module", "cohomology"};
    Report a = run_suite(c), b = run_suite(c);
    REQUIRE(a.identities.size() == 3);
    CHECK(a.identities[0].name == "cohomology");
    CHECK(a.ok());
    for (std::size_t i = 0; i < a.identities.size(); ++i) {
      CHECK(a.identities[i].name == b.identities[i].name);
      CHECK(a.identities[i].instances == b.identities[i].instances);
      CHECK(a.identities[i].failures.size() == b.identities[i].failures.size());
    }
    // instance streams agree
    InstanceGenerator g1(Scheme::parse("P1/F7"), derive_seed(11, "leibniz", 2));
    InstanceGenerator g2(Scheme::parse("P1/F7"), derive_seed(11, "leibniz", 2));
    CHECK(g1.residue_element(-1).str() == g2.residue_element(-1).str());
    CHECK(g1.adele(1).str() == g2.adele(1).str());
  }
}
