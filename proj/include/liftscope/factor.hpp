#pragma once

// Exact factorization over Q: univariate, rational roots, bivariate
// polynomials with constant leading Y-coefficient, and the number of
// absolutely irreducible factors.

#include <utility>
#include <vector>

#include "liftscope/bipoly.hpp"
#include "liftscope/unipoly.hpp"

namespace liftscope {

struct UniFactorization {
  Rational unit;
  /// Irreducible, integer-primitive, positive leading coefficient; sorted by
  /// canonical order.
  std::vector<std::pair<UniPoly, unsigned>> factors;

  UniPoly expand() const;
};

/// Complete irreducible factorization over Q. p must be nonzero.
UniFactorization factor_uni(const UniPoly& p);

/// Irreducible factors of a squarefree integer-primitive polynomial.
std::vector<UniPoly> factor_squarefree_primitive(const UniPoly& f);

struct RationalRoot {
  Rational root;
  unsigned multiplicity;
  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// Rational roots with multiplicities, ascending. p must be nonzero.
std::vector<RationalRoot> rational_roots(const UniPoly& p);

/// Distinct rational roots, ascending. Works directly on p without a
/// squarefree decomposition; used on hot paths.
std::vector<Rational> distinct_rational_roots(const UniPoly& p);

struct BiFactorization {
  Rational unit;
  /// Each h stands for the graph factor Y - h(X); canonical order.
  std::vector<UniPoly> graph_factors;
  /// Irreducible factors of Y-degree >= 2, canonical form, canonical order.
  std::vector<BiPoly> nongraph_factors;

  /// unit * prod (Y - h_i) * prod F_j.
  BiPoly expand() const;
  /// Graph factors as bivariate polynomials followed by the non-graph ones.
  std::vector<BiPoly> all_factors() const;
};

/// Irreducible factorization over Q of a squarefree P with constant nonzero
/// leading Y-coefficient and positive Y-degree. Throws InputError for
/// non-squarefree input.
BiFactorization factor_bi(const BiPoly& p);

/// Number of irreducible factors over the algebraic closure of an irreducible
/// F in Q[X,Y].
int absolute_factor_count(const BiPoly& f);

}  // namespace liftscope
