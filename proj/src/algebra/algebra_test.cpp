#include "doctest.h"
#include "gen.hpp"
#include "liftscope/bipoly.hpp"
#include "liftscope/numeric.hpp"
#include "liftscope/parse.hpp"

using namespace liftscope;
using liftscope::testing::Gen;

namespace {

UniPoly P(const char* s) { return parse_poly(s, "x").poly; }
BiPoly B(const char* s) { return parse_bipoly(s); }

// Sylvester determinant by plain Gaussian elimination over Q.
Rational sylvester_resultant(const UniPoly& a, const UniPoly& b) {
  int m = a.deg(), n = b.deg();
  int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Rational>> s(std::size_t(size), std::vector<Rational>(std::size_t(size), 0));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) s[r][std::size_t(r + m - k)] = a.coeff(k);
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) s[std::size_t(n + r)][std::size_t(r + n - k)] = b.coeff(k);
  }
  Rational det = 1;
  for (int c = 0; c < size; ++c) {
    int piv = c;
    while (piv < size && s[piv][c] == 0) ++piv;
    if (piv == size) return 0;
    if (piv != c) {
      std::swap(s[piv], s[c]);
      det = -det;
    }
    det *= s[c][c];
    for (int r = c + 1; r < size; ++r) {
      Rational f = s[r][c] / s[c][c];
      for (int k = c; k < size; ++k) s[r][k] -= f * s[c][k];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("rational canonical form and roots") {
  Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(to_string(r) == "-3/2");
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK(exact_root(Rational(8, 27), 3) == Rational(2, 3));
  CHECK(exact_root(Rational(-8), 3) == Rational(-2));
  CHECK_FALSE(exact_root(Rational(-4), 2).has_value());
  CHECK_FALSE(exact_root(Rational(2), 2).has_value());
  CHECK(valuation(Rational(3, 8), Integer(2)) == -3);
  CHECK(valuation(Integer(48), Integer(2)) == 4u);
}

TEST_CASE("integer factorization") {
  IntegerFactorization f = factor_integer(Integer(360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<Integer, unsigned>(2, 3));
  CHECK(f[2] == std::pair<Integer, unsigned>(5, 1));
  Integer big = Integer("1000000007") * Integer("998244353");
  CHECK(prime_divisors(big) == std::vector<Integer>{Integer("998244353"), Integer("1000000007")});
  CHECK(divisors(Integer(12)) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("degree of zero is minus infinity") {
  UniPoly z;
  CHECK(z.degree().is_minus_infinity());
  CHECK((z * P("x^2")).degree().is_minus_infinity());
  CHECK(P("x^3").degree() + z.degree() == Degree::minus_infinity());
  CHECK(P("x^3").degree() > z.degree());
}

TEST_CASE("univariate gcd") {
  CHECK(gcd(P("x^2-1"), P("x-1")) == P("x-1"));
  CHECK(gcd(P("x^2+1"), P("x-1")) == P("1"));
  CHECK(gcd(P("3*x^2+6"), UniPoly()) == P("x^2+2"));
}

TEST_CASE("composition and Taylor shift") {
  CHECK(compose(P("x^2"), P("x^2+1")) == P("x^4+2*x^2+1"));
  UniPoly g = P("x^3-2*x+5");
  CHECK(compose(g, P("x")) == g);
  UniPoly t2 = P("2*x^2-1"), t3 = P("4*x^3-3*x");
  CHECK(compose(t2, t3) == compose(t3, t2));
  CHECK(taylor_shift(P("x^2"), 0) == P("x^2"));
  CHECK(taylor_shift(P("x^2-4*x+7"), 2) == P("x^2+3"));
  CHECK(P("x^3").derivative() == P("3*x^2"));
}

TEST_CASE("squarefree decomposition") {
  UniPoly p = P("2*(x-1)^3*(x+2)^2*(x^2+1)");
  std::vector<UniPoly> parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == P("x^2+1"));
  CHECK(parts[1] == P("x+2"));
  CHECK(parts[2] == P("x-1"));
}

TEST_CASE("bivariate resultants") {
  // Sign convention: Res(a, b) = lc(a)^deg(b) * prod b(roots of a), which is
  // the Sylvester determinant with a's rows on top.
  CHECK(resultant_y(B("x-y"), B("x+y")) == P("-2*x"));
  CHECK(resultant_y(B("x-y"), B("x^2+y^2")) == P("2*x^2"));
  CHECK(resultant_y(B("y-x^2-3"), B("y-x^2-3")).is_zero());
  CHECK(resultant_y(B("y-x^2-1"), B("y+x^2+1")) == P("2*x^2+2"));
  CHECK(resultant_y(B("y+x^2+1"), B("y-x^2-1")) == P("-2*x^2-2"));
}

TEST_CASE("bivariate squarefree part") {
  CHECK(squarefree_part(B("(x-y)^2")) == canonical(B("x-y")));
  CHECK(squarefree_part(B("x^4-y^4")) == B("x^4-y^4"));
  CHECK(associates(squarefree_part(B("(x-y^2)^3")), B("x-y^2")));
}

TEST_CASE("bivariate gcd and exact division") {
  BiPoly a = B("(x-y)*(x^2+y^2+1)");
  BiPoly b = B("(x-y)*(x+y)");
  CHECK(associates(gcd(a, b), B("x-y")));
  BiPoly q;
  CHECK(try_divide(a, B("x-y"), q));
  CHECK(q == B("x^2+y^2+1"));
  CHECK_FALSE(try_divide(a, B("x+y"), q));
}

TEST_CASE("discriminant in Y") {
  // disc(y^2 - x) = 4x
  CHECK(discriminant_y(B("y^2-x")) == P("4*x"));
  // disc(a y^2 + b y + c) = b^2 - 4ac
  CHECK(discriminant_y(B("3*y^2+x*y+1")) == P("x^2-12"));
}

TEST_CASE("property: ring axioms") {
  Gen gen(11);
  for (int it = 0; it < 60; ++it) {
    UniPoly p = gen.poly(int(gen.integer(0, 5)), 9, 3);
    UniPoly q = gen.poly(int(gen.integer(0, 5)), 9, 3);
    UniPoly r = gen.poly(int(gen.integer(0, 5)), 9, 3);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * (q * r) == (p * q) * r);
    CHECK((p - p).is_zero());
    auto [quo, rem] = divmod(p, q);
    CHECK(quo * q + rem == p);
    CHECK(rem.degree() < q.degree());
    BiPoly a = gen.bipoly(2, 2), b = gen.bipoly(1, 3), c = gen.bipoly(2, 1);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b).deg_y() == a.deg_y() + b.deg_y());
  }
}

TEST_CASE("property: resultant commutes with specialization") {
  Gen gen(12);
  int checked = 0;
  for (int it = 0; it < 60; ++it) {
    BiPoly p = gen.bipoly(int(gen.integer(0, 2)), int(gen.integer(1, 3)));
    BiPoly q = gen.bipoly(int(gen.integer(0, 2)), int(gen.integer(1, 3)));
    UniPoly res = resultant_y(p, q);
    for (int k = 0; k < 3; ++k) {
      Rational x = gen.rational(7, 3);
      UniPoly ps = p.eval_x(x), qs = q.eval_x(x);
      if (ps.degree() != p.degree_y() || qs.degree() != q.degree_y()) continue;
      CHECK(res.eval(x) == sylvester_resultant(ps, qs));
      CHECK(resultant(ps, qs) == sylvester_resultant(ps, qs));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("property: squarefree part is squarefree") {
  Gen gen(13);
  for (int it = 0; it < 40; ++it) {
    BiPoly a = gen.bipoly(1, 1), b = gen.bipoly(1, 2);
    if (a.deg_y() < 1 || b.deg_y() < 1) continue;
    BiPoly p = a * a * b;
    BiPoly s = squarefree_part(p);
    if (s.deg_y() > 0) CHECK(gcd(s, s.derivative_y()).deg_y() == 0);
    CHECK(divides(s, p));
  }
}

TEST_CASE("property: composition evaluates pointwise") {
  Gen gen(14);
  for (int it = 0; it < 80; ++it) {
    UniPoly g = gen.poly(int(gen.integer(0, 5)), 9, 2);
    UniPoly h = gen.poly(int(gen.integer(0, 4)), 9, 2);
    Rational x = gen.rational(11, 5);
    CHECK(compose(g, h).eval(x) == g.eval(h.eval(x)));
    Rational t0 = gen.rational(5, 3);
    CHECK(taylor_shift(g, t0).eval(x) == g.eval(t0 + x));
  }
}
