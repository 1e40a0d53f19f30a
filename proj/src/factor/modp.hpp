#pragma once

// Polynomials over Z/pZ for small odd primes p < 2^31. Internal to the factor
// module.

#include <cstdint>
#include <random>
#include <vector>

#include "liftscope/numeric.hpp"
#include "liftscope/unipoly.hpp"

namespace liftscope::detail {

using u64 = std::uint64_t;

class ModPoly {
 public:
  ModPoly() = default;
  ModPoly(std::vector<u64> c, u64 p);
  static ModPoly constant(u64 c, u64 p) { return ModPoly(std::vector<u64>{c % p}, p); }
  static ModPoly x(u64 p) { return ModPoly(std::vector<u64>{0, 1}, p); }
  /// Reduces an integer-coefficient polynomial (denominators must be units mod p).
  static ModPoly reduce(const UniPoly& f, u64 p);

  u64 prime() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  int deg() const { return int(c_.size()) - 1; }  // -1 for zero, internal use only
  u64 lc() const { return c_.empty() ? 0 : c_.back(); }
  u64 operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<u64>& coeffs() const { return c_; }
  u64 eval(u64 x) const;

  ModPoly monic() const;
  ModPoly derivative() const;

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, u64 s);
  friend bool operator==(const ModPoly& a, const ModPoly& b) = default;

 private:
  void trim();
  std::vector<u64> c_;
  u64 p_ = 0;
};

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly gcd(const ModPoly& a, const ModPoly& b);
/// Inverse of a modulo m (gcd must be 1).
ModPoly inverse_mod(const ModPoly& a, const ModPoly& m);
ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m);

bool is_squarefree(const ModPoly& f);

/// Distinct-degree factorization of a monic squarefree polynomial: pairs of
/// (product of all irreducible factors of degree d, d).
std::vector<std::pair<ModPoly, int>> distinct_degree_factor(const ModPoly& f);

/// Complete factorization of a monic squarefree polynomial into monic
/// irreducibles (Cantor-Zassenhaus, seeded deterministically).
std::vector<ModPoly> factor_squarefree(const ModPoly& f);

/// Number of irreducible factors of a monic squarefree polynomial.
int count_irreducible_factors(const ModPoly& f);

/// Roots in [0, p) of f (f nonzero), each listed once.
std::vector<u64> roots(const ModPoly& f);

}  // namespace liftscope::detail
