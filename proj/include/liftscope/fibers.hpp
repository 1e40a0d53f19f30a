#pragma once

// Exceptional inputs and fiber counting for f(X) = g(Y).

#include <cstddef>
#include <vector>

#include "liftscope/factor.hpp"
#include "liftscope/numeric.hpp"

namespace liftscope {

struct CollisionSet {
  /// Product of pairwise Y-resultants of all factors, constant factors
  /// removed; integer-primitive with positive leading coefficient. 1 when
  /// there is at most one factor.
  UniPoly R;
  /// Rational roots of R, ascending.
  std::vector<Rational> ZR;
  bool include_discriminants = false;

  bool contains(const Rational& x) const;
};

CollisionSet collision_set(const BiFactorization& fact, bool include_discriminants = false);

/// Number of distinct rational y with g(y) = f(x).
std::size_t fiber_count(const UniPoly& f, const UniPoly& g, const Rational& x);

struct FiberCheck {
  std::size_t lhs = 0;  // fiber_count(f, g, x)
  std::size_t s = 0;    // number of graph factors
  std::vector<std::size_t> per_factor;
  std::size_t rhs = 0;  // s + sum(per_factor)
};

/// Evaluates both sides of the fiber-count identity at x. Throws InputError
/// when x lies in Z_R and InconsistencyError when the sides differ.
FiberCheck fiber_formula_check(const UniPoly& f, const UniPoly& g, const BiFactorization& fact,
                               const CollisionSet& collision, const Rational& x);
FiberCheck fiber_formula_check(const UniPoly& f, const UniPoly& g, const BiFactorization& fact, const Rational& x);

/// Primes dividing a coefficient denominator of f or g, or the numerator of
/// lc(g). Ascending.
std::vector<Integer> bad_primes(const UniPoly& f, const UniPoly& g);

/// Irreducible factorization of the squarefree part of f(X) - g(Y).
BiFactorization factor_separated(const UniPoly& f, const UniPoly& g);

}  // namespace liftscope
