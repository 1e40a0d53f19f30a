#pragma once

// Direct oracles shared by unit and acceptance tests. They evaluate defining
// conditions and never consult the library's search structures.

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "liftscope/unipoly.hpp"

namespace liftscope::testing {

/// Some t = a/b in lowest terms with |a| <= amax, 1 <= b <= bmax and A(t)
/// integral, scanning b upwards. A(a/b) is integral iff D*b^m divides
/// sum (D*c_i) a^i b^(m-i), D the common denominator; evaluated in 128 bits.
/// Coefficient numerators and denominators must be small.
inline std::optional<std::pair<long, long>> brute_force_integer_value(const UniPoly& a, long amax, long bmax) {
  Integer d = 1;
  for (const Rational& c : a.coeffs()) d = lcm(d, c.get_den());
  int m = a.deg();
  std::vector<__int128> coeff;
  for (const Rational& c : a.coeffs()) coeff.push_back(__int128(Rational(c * Rational(d)).get_num().get_si()));
  for (long b = 1; b <= bmax; ++b) {
    __int128 n = __int128(d.get_si());
    for (int i = 0; i < m; ++i) n *= b;
    std::vector<__int128> w(std::size_t(m) + 1);  // c_i * b^(m-i) mod n
    for (int i = 0; i <= m; ++i) {
      __int128 t = coeff[std::size_t(i)] % n;
      for (int k = 0; k < m - i; ++k) t = t * b % n;
      w[std::size_t(i)] = t;
    }
    for (long av = -amax; av <= amax; ++av) {
      if (std::gcd(av < 0 ? -av : av, b) != 1) continue;
      __int128 acc = 0, apow = 1, am = __int128(av) % n;
      for (int i = 0; i <= m; ++i) {
        acc = (acc + w[std::size_t(i)] * apow) % n;
        apow = apow * am % n;
      }
      if (acc == 0) return std::make_pair(av, b);
    }
  }
  return std::nullopt;
}

}  // namespace liftscope::testing
