#include "doctest.h"
#include "gen.hpp"
#include "liftscope/factor.hpp"
#include "liftscope/fibers.hpp"
#include "liftscope/parse.hpp"
#include "liftscope/sources.hpp"

using namespace liftscope;
using liftscope::testing::Gen;

namespace {
UniPoly P(const char* s) { return parse_poly(s, "x").poly; }
}  // namespace

TEST_CASE("source-even center") {
  auto a = source_even_center(P("x^2"));
  REQUIRE(a.has_value());
  CHECK(a->c == 0);
  CHECK(a->G == P("x"));
  CHECK_FALSE(source_even_center(P("x^3")).has_value());
  auto b = source_even_center(P("x^2-4*x+7"));
  REQUIRE(b.has_value());
  CHECK(b->c == 2);
  CHECK(b->G == P("x+3"));
  CHECK_FALSE(source_even_center(P("x^4+x")).has_value());
}

TEST_CASE("construct quadratic sources") {
  ConstructedSource a = construct_quadratic_source(P("x"), 0, 1, 0, P("1"));
  CHECK(a.f == P("x"));
  CHECK(a.g == P("x^2"));
  CHECK(a.source.A() == P("x^2"));
  CHECK(a.source.B() == P("x"));

  ConstructedSource b = construct_quadratic_source(P("x"), 0, 1, 0, P("x"));
  CHECK(b.f == P("x^3"));
  CHECK(b.source.B() == P("x^3"));

  ConstructedSource c = construct_quadratic_source(P("x+1/2"), 0, 1, Rational(1, 2), P("1"));
  CHECK(c.f == P("x"));
  CHECK(c.g == P("x^2+1/2"));
  CHECK(c.source.A() == P("x^2+1/2"));
  CHECK(c.source.B() == P("x"));

  CHECK_THROWS(construct_quadratic_source(P("x"), 0, 0, 0, P("1")));
  CHECK_THROWS(construct_quadratic_source(P("x"), 0, 1, 0, UniPoly()));
}

TEST_CASE("detect quadratic sources") {
  auto a = detect_quadratic_sources(P("x"), P("x^2"));
  REQUIRE(a.size() == 1);
  CHECK(a[0].A() == P("x^2"));
  CHECK(a[0].B() == P("x"));

  auto b = detect_quadratic_sources(P("x^3"), P("x^2"));
  REQUIRE(b.size() == 1);
  CHECK(b[0].alpha == 1);
  CHECK(b[0].beta == 0);
  CHECK(b[0].E == P("x"));
  CHECK(b[0].B() == P("x^3"));

  CHECK(detect_quadratic_sources(P("x^2"), P("x^2")).empty());
  CHECK(detect_quadratic_sources(P("x^5-x"), P("x^3")).empty());

  auto c = detect_quadratic_sources(P("x"), P("x^2+1/2"));
  REQUIRE(c.size() == 1);
  CHECK(c[0].A() == P("x^2+1/2"));
}

TEST_CASE("certificates") {
  UniPoly t2 = P("2*x^2-1"), t3 = P("4*x^3-3*x");
  CertificateCheck a = verify_certificate(t2, t3, {t3, t2});
  CHECK(a.accepted);
  CHECK(a.dX == 3);
  CertificateCheck b = verify_certificate(P("x"), P("x^2"), {P("x^2"), P("x")});
  CHECK(b.accepted);
  CHECK(b.dX == 2);
  CertificateCheck c = verify_certificate(P("x^4"), P("x^4"), {P("x"), P("x")});
  CHECK_FALSE(c.accepted);
  CHECK(c.reason.find("graph") != std::string::npos);
  // Not birational: t -> (t^4, t^2) covers x = y^2 twice.
  CertificateCheck d = verify_certificate(P("x"), P("x^2"), {P("x^4"), P("x^2")});
  CHECK_FALSE(d.accepted);
  CHECK(d.reason.find("birational") != std::string::npos);
  CertificateCheck e = verify_certificate(P("x"), P("x^2"), {P("x^2"), P("x+1")});
  CHECK_FALSE(e.accepted);
}

TEST_CASE("implicitization") {
  CHECK(implicitize(P("x^2"), P("x^3")) == parse_bipoly("y^2-x^3"));
  CHECK(implicitize(P("x^2"), P("x")) == parse_bipoly("y^2-x"));
  CHECK(associates(implicitize(P("4*x^3-3*x"), P("2*x^2-1")), parse_bipoly("2*x^2-1-(4*y^3-3*y)")));
}

TEST_CASE("poly_sqrt") {
  CHECK(poly_sqrt(P("x^2+2*x+1")) == P("x+1"));
  CHECK(poly_sqrt(P("4*x^4-4*x^2+1")) == P("2*x^2-1"));
  CHECK_FALSE(poly_sqrt(P("x^2+1")).has_value());
  CHECK_FALSE(poly_sqrt(P("2*x^2")).has_value());
}

TEST_CASE("property: detection recovers constructed sources") {
  Gen gen(51);
  for (int it = 0; it < 40; ++it) {
    UniPoly G = gen.poly(int(gen.integer(1, 3)), 4, 2);
    Rational c = gen.rational(4, 2), alpha = gen.nonzero_rational(4, 2), beta = gen.rational(4, 2);
    UniPoly E = gen.poly(int(gen.integer(0, 2)), 4, 2);
    ConstructedSource cs = construct_quadratic_source(G, c, alpha, beta, E);
    BiPoly target = implicitize(cs.source.A(), cs.source.B());
    bool found = false;
    for (const QuadraticSource& s : detect_quadratic_sources(cs.f, cs.g)) {
      CHECK(compose(cs.f, s.A()) == compose(cs.g, s.B()));
      BiPoly q;
      if (try_divide(implicitize(s.A(), s.B()), target, q) && q.deg_y() == 0 && q.deg_x() == 0) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("property: source-even center moves with translation") {
  Gen gen(52);
  for (int it = 0; it < 40; ++it) {
    UniPoly G = gen.poly(int(gen.integer(1, 3)), 5, 2);
    Rational c = gen.rational(5, 3), u = gen.rational(5, 3);
    UniPoly g = compose(G, UniPoly{c * c, -2 * c, 1});
    auto a = source_even_center(g);
    auto b = source_even_center(taylor_shift(g, u));
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(b->c == a->c - u);
  }
}

TEST_CASE("property: odd-degree g has no quadratic sources") {
  Gen gen(53);
  for (int it = 0; it < 40; ++it) {
    UniPoly g = gen.poly(2 * int(gen.integer(0, 2)) + 1, 5, 2);
    UniPoly f = gen.poly(int(gen.integer(1, 6)), 5, 2);
    CHECK(detect_quadratic_sources(f, g).empty());
  }
}
