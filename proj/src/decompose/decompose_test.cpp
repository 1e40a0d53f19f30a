#include "doctest.h"
#include "gen.hpp"
#include "liftscope/decompose.hpp"
#include "liftscope/errors.hpp"
#include "liftscope/fibers.hpp"
#include "liftscope/parse.hpp"

using namespace liftscope;
using liftscope::testing::Gen;

namespace {
UniPoly P(const char* s) { return parse_poly(s, "x").poly; }
}  // namespace

TEST_CASE("decompositions examples") {
  CHECK(decompositions(P("x^4"), P("x^4")) == std::vector<UniPoly>{P("-x"), P("x")});
  CHECK(decompositions(P("x"), P("x^2")).empty());
  CHECK(decompositions(P("x^4+2*x^2+1"), P("x^2")) == std::vector<UniPoly>{P("-x^2-1"), P("x^2+1")});
  CHECK(decompositions(P("x^3"), P("x^2")).empty());
  // Odd outer degree: one real root of the leading coefficient equation.
  CHECK(decompositions(P("-8*x^3"), P("x^3")) == std::vector<UniPoly>{P("-2*x")});
  // No rational leading coefficient.
  CHECK(decompositions(P("2*x^2"), P("x^2")).empty());
  // Linear outer polynomial: h is forced.
  CHECK(decompositions(P("x^3+1"), P("2*x-1")) == std::vector<UniPoly>{P("1/2*x^3+1")});
}

TEST_CASE("is_poly_in") {
  CHECK(is_poly_in(P("x^4+1"), P("x^2")) == P("x^2+1"));
  CHECK_FALSE(is_poly_in(P("x^3"), P("x^2")).has_value());
  CHECK_FALSE(is_poly_in(P("2*x^2-1"), P("4*x^3-3*x")).has_value());
  CHECK(is_poly_in(P("7"), P("x^2")) == P("7"));
  CHECK_FALSE(is_poly_in(P("x^4+x"), P("x^2")).has_value());
}

TEST_CASE("strip_graphs") {
  auto stubs = [](const char* f, const char* g) {
    UniPoly fp = P(f), gp = P(g);
    return strip_graphs(factor_separated(fp, gp), decompositions(fp, gp));
  };
  auto a = stubs("x^4", "x^4");
  REQUIRE(a.size() == 1);
  CHECK(a[0] == parse_bipoly("x^2+y^2"));
  auto b = stubs("x", "x^2");
  REQUIRE(b.size() == 1);
  CHECK(b[0] == parse_bipoly("y^2-x"));
  CHECK(stubs("(x^2+1)^2", "x^2").empty());

  BiFactorization fact = factor_separated(P("x^4"), P("x^4"));
  CHECK_THROWS_AS(strip_graphs(fact, {P("x")}), InconsistencyError);
}

TEST_CASE("property: decompositions are complete and exact") {
  Gen gen(31);
  for (int it = 0; it < 60; ++it) {
    UniPoly g = gen.poly(int(gen.integer(1, 6)), 6, 3);
    UniPoly h = gen.poly(int(gen.integer(1, 5)), 6, 3);
    UniPoly f = compose(g, h);
    auto hs = decompositions(f, g);
    CHECK(std::find(hs.begin(), hs.end(), h) != hs.end());
    CHECK(hs.size() <= 2);
    for (const auto& h2 : hs) CHECK(compose(g, h2) == f);
  }
}

TEST_CASE("property: is_poly_in recovers the outer polynomial") {
  Gen gen(32);
  for (int it = 0; it < 60; ++it) {
    UniPoly p = gen.poly(int(gen.integer(0, 4)), 6, 3);
    UniPoly a = gen.poly(int(gen.integer(1, 3)), 6, 3);
    CHECK(is_poly_in(compose(p, a), a) == p);
  }
}

TEST_CASE("property: graph factors correspond to decompositions") {
  Gen gen(33);
  for (int it = 0; it < 30; ++it) {
    UniPoly g = gen.poly(int(gen.integer(1, 3)), 4);
    UniPoly f = gen.coin() ? compose(g, gen.poly(int(gen.integer(1, 2)), 4)) : gen.poly(int(gen.integer(1, 4)), 4);
    BiFactorization fact = factor_separated(f, g);
    CHECK(fact.graph_factors.size() == decompositions(f, g).size());
  }
}
