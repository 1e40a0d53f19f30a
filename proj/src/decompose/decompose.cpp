#include "liftscope/decompose.hpp"

#include <algorithm>

#include "liftscope/errors.hpp"
#include "liftscope/numeric.hpp"

namespace liftscope {

namespace {

// With the leading coefficient of h fixed, every lower coefficient of h enters
// the coefficient of x^(de-k) in g(h) linearly with the same nonzero
// multiplier, so h is forced one coefficient at a time.
UniPoly solve_from_top(const UniPoly& f, const UniPoly& g, int d, const Rational& lead) {
  int e = g.deg();
  std::vector<Rational> h(std::size_t(d) + 1, 0);
  h[std::size_t(d)] = lead;
  Rational mult = Rational(e) * g.lc() * pow(lead, unsigned(e - 1));
  for (int k = 1; k <= d; ++k) {
    UniPoly partial{std::vector<Rational>(h)};
    Rational have = compose(g, partial).coeff(d * e - k);
    h[std::size_t(d - k)] = (f.coeff(d * e - k) - have) / mult;
  }
  return UniPoly(std::move(h));
}

}  // namespace

std::vector<UniPoly> decompositions(const UniPoly& f, const UniPoly& g) {
  if (f.degree() < 1 || g.degree() < 1) throw InputError("decompositions: f and g must be nonconstant");
  int e = g.deg();
  if (f.deg() % e != 0) return {};
  int d = f.deg() / e;
  std::vector<Rational> leads;
  if (auto r = exact_root(f.lc() / g.lc(), unsigned(e))) {
    leads.push_back(*r);
    if (e % 2 == 0) leads.push_back(-*r);
  }
  std::vector<UniPoly> out;
  for (const Rational& lead : leads) {
    UniPoly h = solve_from_top(f, g, d, lead);
    if (compose(g, h) == f) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const UniPoly& a, const UniPoly& b) { return canonical_less(a, b); });
  if (out.size() > 2) throw InconsistencyError("decompositions: more than two right factors");
  return out;
}

std::optional<UniPoly> is_poly_in(const UniPoly& b, const UniPoly& a) {
  if (a.degree() < 1) throw InputError("is_poly_in: A must be nonconstant");
  if (b.is_zero()) return UniPoly();
  int m = a.deg();
  if (b.deg() % m != 0) return std::nullopt;
  std::vector<Rational> p(std::size_t(b.deg() / m) + 1, 0);
  UniPoly rest = b;
  while (!rest.is_zero() && rest.deg() > 0) {
    if (rest.deg() % m != 0) return std::nullopt;
    int k = rest.deg() / m;
    Rational c = rest.lc() / pow(a.lc(), unsigned(k));
    p[std::size_t(k)] = c;
    rest -= a.pow(unsigned(k)) * c;
  }
  p[0] = rest.coeff(0);
  UniPoly out(std::move(p));
  if (compose(out, a) != b) throw InconsistencyError("is_poly_in: elimination did not recompose");
  return out;
}

std::vector<BiPoly> strip_graphs(const BiFactorization& fact, const std::vector<UniPoly>& h) {
  std::vector<UniPoly> have = fact.graph_factors, want = h;
  auto less = [](const UniPoly& a, const UniPoly& b) { return canonical_less(a, b); };
  std::sort(have.begin(), have.end(), less);
  std::sort(want.begin(), want.end(), less);
  if (have != want) {
    throw InconsistencyError("strip_graphs: degree-one factors (" + std::to_string(have.size()) +
                             ") do not match the decomposition set (" + std::to_string(want.size()) + ")");
  }
  return fact.nongraph_factors;
}

}  // namespace liftscope
