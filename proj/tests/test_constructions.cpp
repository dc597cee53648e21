// Scheme families: deriving basis polynomials from differences and the
// named constructions.

#include <catch2/catch_amalgamated.hpp>

#include <monovcs/constructions.hpp>

#include "support.hpp"

using namespace monovcs;

namespace {

Poly P(const MonoidPtr& m, const std::string& s) { return parse_poly(m, s); }

}  // namespace

TEST_CASE("security exponent") {
  CHECK(security_exponent(2, 2) == 1);
  CHECK(security_exponent(2, 5) == 4);
  CHECK(security_exponent(4, 5) == 2);
  CHECK(security_exponent(5, 5) == 1);
  CHECK_THROWS_AS(security_exponent(1, 5), ConstructionError);
  CHECK_THROWS_AS(security_exponent(3, 2), ConstructionError);
}

TEST_CASE("derive_basis_from_differences") {
  MonoidPtr m = builtin_monoid("cmy-independent");

  SECTION("outputs are nonnegative and differ by the inputs") {
    std::vector<Poly> gs = {P(m, "(m - c)(a - z)"), P(m, "(m - y)(a - z)")};
    std::vector<Poly> fs = derive_basis_from_differences(gs, 2, 2);
    REQUIRE(fs.size() == 3);
    for (const Poly& f : fs) {
      CHECK_FALSE(f.has_negative_coefficient());
      CHECK(f.is_homogeneous());
      CHECK(f.degree() == 2);
    }
    CHECK(fs[0] - fs[1] == gs[0]);
    CHECK(fs[0] - fs[2] == gs[1]);
    CHECK(fs[0] == P(m, "ma + cz + yz"));
    CHECK(fs[1] == P(m, "ca + mz + yz"));
    CHECK(fs[2] == P(m, "ya + mz + cz"));
    // all share the first derivative
    CHECK(delta(fs[0]) == delta(fs[1]));
    CHECK(delta(fs[0]) == delta(fs[2]));
  }

  SECTION("rejects differences that fail the security condition") {
    // delta(ma - cz) = m + a - c - z != 0
    CHECK_THROWS_MATCHES(
        derive_basis_from_differences({P(m, "ma - cz")}, 2, 2), ConstructionError,
        Catch::Matchers::MessageMatches(
            Catch::Matchers::ContainsSubstring("security condition")));
    CHECK_THROWS_AS(derive_basis_from_differences({P(m, "m - c")}, 2, 2),
                    ConstructionError);  // wrong degree
    CHECK_THROWS_AS(derive_basis_from_differences({}, 2, 2), ConstructionError);
  }
}

TEST_CASE("family names round trip") {
  std::vector<std::string> names = family_names();
  CHECK(names.size() == 7);
  for (const std::string& n : names) CHECK(to_string(parse_family(n)) == n);
  CHECK_THROWS_AS(parse_family("diagonal"), ConstructionError);
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(family_definition({Family::NN, 1}), ConstructionError);
  CHECK_THROWS_AS(family_definition({Family::N1N, 2}), ConstructionError);
  CHECK_THROWS_AS(family_definition({Family::ThreeN, 2}), ConstructionError);
  CHECK_THROWS_AS(family_definition({Family::Example22Independent, 3}),
                  ConstructionError);
  CHECK_THROWS_AS(family_definition({Family::Example22Monoid, 3}), ConstructionError);
}

TEST_CASE("difference polynomials satisfy delta^(n-t+1) = 0 sharply") {
  for (const std::string& name : family_names()) {
    Family f = parse_family(name);
    int n_lo = (f == Family::N1N || f == Family::ThreeN) ? 3 : 2;
    int n_hi = (f == Family::Example22Independent || f == Family::Example22Monoid)
                   ? 2
                   : 5;
    for (int n = n_lo; n <= n_hi; ++n) {
      FamilyDefinition def = family_definition({f, n});
      int e = security_exponent(def.t, def.n);
      for (const Poly& g : def.gs) {
        INFO(def.name << ": g = " << to_string(g));
        REQUIRE(delta_pow(g, e).is_zero());
        REQUIRE_FALSE(delta_pow(g, e - 1).is_zero());
      }
    }
  }
}

TEST_CASE("the (n, n) proposition instances") {
  SECTION("n = 2 reduces the lattice scheme to expansion 4") {
    Scheme s = build({Family::PropNN, 2});
    MonoidPtr m = s.monoid();
    CHECK(s.pixel_expansion() == 4);
    CHECK(s.threshold() == 2);
    REQUIRE(s.polys().has_value());
    CHECK((*s.polys())[0] == P(m, "mc + az"));
    CHECK((*s.polys())[1] == P(m, "ca + mz"));
    CHECK((*s.polys())[2] == P(m, "ma + cz"));
    CHECK(columns_equal(s.matrix_for(m->require("B")),
                        monovcs::test::mat(m, {{"M", "C", "1", "0"},
                                               {"C", "M", "0", "1"}})));
    CHECK(columns_equal(s.matrix_for(m->require("C")),
                        monovcs::test::mat(m, {{"C", "1", "M", "0"},
                                               {"1", "C", "0", "M"}})));
    CHECK(columns_equal(s.matrix_for(m->require("M")),
                        monovcs::test::mat(m, {{"M", "1", "C", "0"},
                                               {"1", "M", "0", "C"}})));
  }

  SECTION("n = 3 matches the worked polynomials") {
    Scheme s = build({Family::PropNN, 3});
    MonoidPtr m = s.monoid();
    REQUIRE(s.polys().has_value());
    CHECK((*s.polys())[0] == P(m, "mca + a^2z + caz + mz^2 + maz + cz^2"));
    CHECK((*s.polys())[1] == P(m, "ca^2 + 2maz + mcz + az^2 + cz^2"));
    CHECK((*s.polys())[2] == P(m, "ma^2 + 2caz + mcz + az^2 + mz^2"));
  }
}

TEST_CASE("the (n-1, n) instance at n = 3 uses the worked polynomial") {
  Scheme s = build({Family::N1N, 3});
  MonoidPtr m = s.monoid();
  CHECK(s.threshold() == 2);
  CHECK(s.pixel_expansion() == 18);
  REQUIRE(s.polys().has_value());
  CHECK((*s.polys())[0] == P(m, "ma^2 + caz + yaz"));
  CHECK((*s.polys())[1] == P(m, "ca^2 + maz + yaz"));
  CHECK((*s.polys())[2] == P(m, "ya^2 + maz + caz"));
}

TEST_CASE("the (2, 2) four-color schemes") {
  SECTION("independent colors need expansion 8") {
    Scheme s = build({Family::Example22Independent, 2});
    MonoidPtr m = s.monoid();
    CHECK(s.pixel_expansion() == 8);
    CHECK(s.colors().size() == 4);
    REQUIRE(s.polys().has_value());
    CHECK((*s.polys())[0] == P(m, "ma + cz + bz + az"));
    CHECK((*s.polys())[1] == P(m, "ca + mz + bz + az"));
    CHECK((*s.polys())[2] == P(m, "ba + mz + cz + az"));
    CHECK((*s.polys())[3] == P(m, "a^2 + mz + cz + bz"));
  }

  SECTION("the lattice relation M*C = B brings it down to 6") {
    Scheme s = build({Family::Example22Monoid, 2});
    MonoidPtr m = s.monoid();
    CHECK(s.pixel_expansion() == 6);
    REQUIRE(s.polys().has_value());
    CHECK((*s.polys())[0] == P(m, "mc + 2az"));
    CHECK((*s.polys())[1] == P(m, "ca + mz + az"));
    CHECK((*s.polys())[2] == P(m, "ma + cz + az"));
    CHECK((*s.polys())[3] == P(m, "a^2 + mz + cz"));
  }
}

TEST_CASE("all families build verified schemes for small n") {
  struct Case {
    Family family;
    int n;
    int q;
  };
  // q = coefficient sum of the reference polynomial times n!, then divided
  // by the common column gcd for the reduced family
  for (Case c : std::initializer_list<Case>{{Family::NN, 2, 6},
                                            {Family::NN, 3, 36},
                                            {Family::N1N, 3, 18},
                                            {Family::N1N, 4, 144},
                                            {Family::TwoN, 2, 6},
                                            {Family::TwoN, 3, 9},
                                            {Family::TwoN, 4, 12},
                                            {Family::ThreeN, 3, 36},
                                            {Family::ThreeN, 4, 216},
                                            {Family::PropNN, 2, 4},
                                            {Family::PropNN, 3, 36}}) {
    Scheme s = build({c.family, c.n});
    INFO(s.name());
    CHECK(s.pixel_expansion() == c.q);
    CHECK(verify(s).passed());
    if (c.family == Family::TwoN) {
      CHECK(s.threshold() == 2);
      CHECK(s.strategy() == ExpansionStrategy::GcdReduced);
    }
  }
}
