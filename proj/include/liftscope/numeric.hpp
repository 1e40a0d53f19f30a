#pragma once

// Exact scalar arithmetic: arbitrary-precision integers and rationals.
//
// Both types are thin aliases over GMP's C++ classes. mpq_class keeps every
// value canonical (lowest terms, positive denominator) after each operation.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace liftscope {

using Integer = mpz_class;
using Rational = mpq_class;

/// Prime-power factorization, primes ascending.
using IntegerFactorization = std::vector<std::pair<Integer, unsigned>>;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact e-th root of a rational, if one exists. For even e the positive root
/// is returned (callers add the negative one themselves).
std::optional<Rational> exact_root(const Rational& r, unsigned e);

/// Exact square root of a nonnegative integer, if it is a perfect square.
std::optional<Integer> exact_sqrt(const Integer& z);

/// p-adic valuation of a nonzero integer. p must be prime.
unsigned valuation(const Integer& z, const Integer& p);

/// p-adic valuation of a nonzero rational (may be negative).
long valuation(const Rational& r, const Integer& p);

/// Full factorization of |n| (n != 0). Trial division followed by Pollard rho
/// on whatever cofactor remains.
IntegerFactorization factor_integer(const Integer& n);

/// Distinct primes dividing |n|, ascending.
std::vector<Integer> prime_divisors(const Integer& n);

/// All positive divisors of |n|, ascending.
std::vector<Integer> divisors(const Integer& n);

Integer pow(const Integer& base, unsigned long e);
Rational pow(const Rational& base, unsigned long e);

/// Least-absolute-value representative of a modulo m (ties go positive).
Integer symmetric_mod(const Integer& a, const Integer& m);

/// Small primes in increasing order, starting at 2.
const std::vector<std::uint32_t>& small_primes();

}  // namespace liftscope
