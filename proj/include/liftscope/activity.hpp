#pragma once

// Does A(t) take an integer value at some rational t? Decided by a finite
// set of congruence checks.

#include <optional>
#include <vector>

#include "liftscope/numeric.hpp"
#include "liftscope/unipoly.hpp"

namespace liftscope {

struct DenominatorBound {
  /// Every t = a/b in lowest terms with A(t) integral has b | M.
  Integer M;
  /// A = P / q, P integral, gcd(content(P), q) = 1.
  Integer q;
  UniPoly P;
};

DenominatorBound denominator_bound(const UniPoly& a);

/// One exhausted denominator: no residue r mod modulus with gcd(r, b) = 1
/// satisfies modulus | P_b(r).
struct CongruenceCheck {
  Integer b;
  Integer modulus;
  Integer residues_checked;
};

struct ActivityResult {
  Integer M;
  bool active = false;
  Rational witness;
  Rational lambda;
  /// Filled when inactive.
  std::vector<CongruenceCheck> certificate;
};

ActivityResult activity_witness(const UniPoly& a);

/// Smallest positive integer lambda with A(t0 + lambda*u) integral for all
/// integers u. A(t0) must be an integer.
Rational integer_coset(const UniPoly& a, const Rational& t0);

}  // namespace liftscope
