#include "doctest.h"
#include "liftscope/parse.hpp"
#include "liftscope/pipeline.hpp"

using namespace liftscope;

namespace {
UniPoly P(const char* s) { return parse_poly(s, "x").poly; }
UniPoly T(const char* s) { return parse_poly(s, "t").poly; }
}  // namespace

TEST_CASE("power family") {
  for (int d = 2; d <= 5; ++d) {
    UniPoly g = UniPoly::monomial(1, d);
    LiftReport r = analyze(P("x"), g);
    CAPTURE(d);
    REQUIRE(r.components.size() == 1);
    const ComponentRecord& c = r.components[0];
    CHECK(c.cls == ComponentClass::OneInfinity);
    CHECK(c.dX == d);
    CHECK(c.active());
    CHECK(c.activity->witness == 0);
    CHECK(r.theta == Rational(1, d));
    CHECK(r.growth == GrowthKind::Power);
  }
}

TEST_CASE("power family parametrized over the Y-line") {
  LiftReport r = analyze(P("x"), P("x^3"));
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].A() == T("t^3"));
  CHECK(r.components[0].B() == T("t"));
  CHECK(r.components[0].provenance == Provenance::Builtin);
}

TEST_CASE("unclassified components give an upper bound only") {
  LiftReport r = analyze(P("x^3+x"), P("x^3"));
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].cls == ComponentClass::Unclassified);
  CHECK(r.growth == GrowthKind::Unknown);
  CHECK(predicted_growth(r) == "unknown; upper bound O(B^{1/2})");
}

TEST_CASE("cusp") {
  LiftReport r = analyze(P("x^3"), P("x^2"));
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].source->B() == T("t^3"));
  CHECK(r.theta == Rational(1, 2));
  CHECK(predicted_growth(r) == "≍ B^{1/2}");
}

TEST_CASE("local obstruction") {
  LiftReport r = analyze(P("x"), P("x^2+1/2"));
  REQUIRE(r.components.size() == 1);
  const ComponentRecord& c = r.components[0];
  CHECK(c.cls == ComponentClass::OneInfinity);
  CHECK(c.dX == 2);
  CHECK_FALSE(c.active());
  CHECK(c.activity->certificate.size() == 1);
  CHECK(c.activity->certificate[0].modulus == 2);
  CHECK_FALSE(r.theta.has_value());
  CHECK(r.growth == GrowthKind::Bounded);
  CHECK(predicted_growth(r) == "O(1)");
}

TEST_CASE("graph removal and geometric reducibility") {
  LiftReport r = analyze(P("x^4"), P("x^4"));
  CHECK(r.H == std::vector<UniPoly>{P("-x"), P("x")});
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].F == parse_bipoly("x^2+y^2"));
  CHECK(r.components[0].abs_factors == 2);
  CHECK(r.components[0].cls == ComponentClass::SiegelFinite);
  CHECK(predicted_growth(r) == "O(1)");
}

TEST_CASE("Chebyshev certificate") {
  UniPoly t2 = P("2*x^2-1"), t3 = P("4*x^3-3*x");
  LiftReport r = analyze(t2, t3, {{T("4*t^3-3*t"), T("2*t^2-1")}});
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].cls == ComponentClass::OneInfinity);
  CHECK(r.components[0].dX == 3);
  CHECK(r.components[0].provenance == Provenance::Certificate);
  CHECK(r.theta == Rational(1, 3));
  CHECK(predicted_growth(r) == "≍ B^{1/3}");

  LiftReport bad = analyze(t2, t3, {{T("t"), T("t")}});
  CHECK(bad.components[0].cls == ComponentClass::Unclassified);
  CHECK_FALSE(bad.notes.empty());
}

TEST_CASE("Pell conic") {
  LiftReport r = analyze(P("x^2"), P("5*x^2+1"));
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].cls == ComponentClass::TwoInfinity);
  CHECK(r.growth == GrowthKind::Polylog);
  CHECK(predicted_growth(r) == "polylogarithmic, exponent not computed");
}

TEST_CASE("all graphs") {
  LiftReport r = analyze(P("(x^2+1)^2"), P("x^2"));
  CHECK(r.components.empty());
  CHECK(r.growth == GrowthKind::Bounded);
}

TEST_CASE("certificates never override an existing class") {
  // The quadratic source already classifies y^2 - x; a certificate for the
  // same curve is noted and ignored.
  LiftReport r = analyze(P("x"), P("x^2"), {{T("t^2"), T("-t")}});
  CHECK(r.components[0].provenance == Provenance::Builtin);
  CHECK(r.components[0].cls == ComponentClass::OneInfinity);
}
