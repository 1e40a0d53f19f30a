#include "liftscope/fibers.hpp"

#include <algorithm>
#include <set>

#include "liftscope/errors.hpp"

namespace liftscope {

namespace {

UniPoly strip_constant(const UniPoly& p) {
  UniPoly q = primitive_part(p);
  return q.lc() < 0 ? -q : q;
}

}  // namespace

bool CollisionSet::contains(const Rational& x) const { return std::binary_search(ZR.begin(), ZR.end(), x); }

CollisionSet collision_set(const BiFactorization& fact, bool include_discriminants) {
  std::vector<BiPoly> all = fact.all_factors();
  CollisionSet out;
  out.include_discriminants = include_discriminants;
  UniPoly r(Rational(1));
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      UniPoly res = resultant_y(all[a], all[b]);
      if (res.is_zero()) throw InconsistencyError("collision_set: distinct factors have a zero resultant");
      r *= strip_constant(res);
    }
  }
  if (include_discriminants) {
    for (const BiPoly& f : fact.nongraph_factors) {
      UniPoly disc = discriminant_y(f);
      if (disc.is_zero()) throw InconsistencyError("collision_set: zero discriminant of an irreducible factor");
      r *= strip_constant(disc);
    }
  }
  out.R = strip_constant(r);
  if (out.R.deg() > 0) out.ZR = distinct_rational_roots(out.R);
  return out;
}

std::size_t fiber_count(const UniPoly& f, const UniPoly& g, const Rational& x) {
  if (g.degree() < 1) throw InputError("fiber_count: g must be nonconstant");
  return distinct_rational_roots(g - UniPoly(f.eval(x))).size();
}

FiberCheck fiber_formula_check(const UniPoly& f, const UniPoly& g, const BiFactorization& fact,
                               const CollisionSet& collision, const Rational& x) {
  if (collision.contains(x)) throw InputError("fiber_formula_check: x = " + to_string(x) + " lies in Z_R");
  FiberCheck out;
  out.lhs = fiber_count(f, g, x);
  out.s = fact.graph_factors.size();
  out.rhs = out.s;
  for (const BiPoly& F : fact.nongraph_factors) {
    std::size_t n = distinct_rational_roots(F.eval_x(x)).size();
    out.per_factor.push_back(n);
    out.rhs += n;
  }
  if (out.lhs != out.rhs) {
    throw InconsistencyError("fiber identity fails at x = " + to_string(x) + ": " + std::to_string(out.lhs) +
                             " != " + std::to_string(out.rhs));
  }
  return out;
}

FiberCheck fiber_formula_check(const UniPoly& f, const UniPoly& g, const BiFactorization& fact, const Rational& x) {
  return fiber_formula_check(f, g, fact, collision_set(fact), x);
}

std::vector<Integer> bad_primes(const UniPoly& f, const UniPoly& g) {
  std::set<Integer> primes;
  auto add = [&](const Integer& n) {
    for (const Integer& p : prime_divisors(n)) primes.insert(p);
  };
  for (const UniPoly* p : {&f, &g}) {
    for (const Rational& c : p->coeffs()) add(c.get_den());
  }
  add(g.lc().get_num());
  return {primes.begin(), primes.end()};
}

BiFactorization factor_separated(const UniPoly& f, const UniPoly& g) {
  if (f.degree() < 1 || g.degree() < 1) throw InputError("f and g must be nonconstant");
  return factor_bi(squarefree_part(BiPoly::separated(f, g)));
}

}  // namespace liftscope
