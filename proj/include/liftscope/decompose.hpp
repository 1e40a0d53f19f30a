#pragma once

// Right factors h with f = g(h) for a fixed outer g, and the test for B being
// a polynomial in A.

#include <optional>
#include <vector>

#include "liftscope/bipoly.hpp"
#include "liftscope/factor.hpp"
#include "liftscope/unipoly.hpp"

namespace liftscope {

/// Every h in Q[x] with compose(g, h) == f, canonically ordered. f and g must
/// be nonconstant. At most two entries.
std::vector<UniPoly> decompositions(const UniPoly& f, const UniPoly& g);

/// The unique P with B = P(A), if any. A must be nonconstant.
std::optional<UniPoly> is_poly_in(const UniPoly& b, const UniPoly& a);

/// Checks that the graph factors of fact are exactly the entries of h and
/// returns the non-graph factors. Throws InconsistencyError on a mismatch.
std::vector<BiPoly> strip_graphs(const BiFactorization& fact, const std::vector<UniPoly>& h);

}  // namespace liftscope
