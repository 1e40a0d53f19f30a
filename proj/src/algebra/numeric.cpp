#include "liftscope/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace liftscope {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_text(s)) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

namespace {

std::optional<Integer> integer_root(const Integer& z, unsigned e) {
  // z >= 0 here.
  Integer r;
  if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), e) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Integer> exact_sqrt(const Integer& z) {
  if (z < 0) return std::nullopt;
  return integer_root(z, 2);
}

std::optional<Rational> exact_root(const Rational& r, unsigned e) {
  if (e == 0) throw std::invalid_argument("exact_root: zero exponent");
  if (e == 1) return r;
  if (r == 0) return Rational(0);
  bool negative = r < 0;
  if (negative && e % 2 == 0) return std::nullopt;
  Integer num = abs(r.get_num());
  auto rn = integer_root(num, e);
  if (!rn) return std::nullopt;
  auto rd = integer_root(r.get_den(), e);
  if (!rd) return std::nullopt;
  Rational out = make_rational(*rn, *rd);
  return negative ? Rational(-out) : out;
}

unsigned valuation(const Integer& z, const Integer& p) {
  if (z == 0) throw std::invalid_argument("valuation of zero");
  Integer t = abs(z);
  unsigned v = 0;
  while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    t /= p;
    ++v;
  }
  return v;
}

long valuation(const Rational& r, const Integer& p) {
  return static_cast<long>(valuation(r.get_num(), p)) - static_cast<long>(valuation(r.get_den(), p));
}

Integer pow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Rational pow(const Rational& base, unsigned long e) {
  return make_rational(pow(base.get_num(), e), pow(base.get_den(), e));
}

Integer symmetric_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t kLimit = 1u << 16;
    std::vector<bool> composite(kLimit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j < kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

namespace {

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    constexpr unsigned long kBatch = 64;
    auto step = [&](Integer& v) { v = (v * v + c) % n; };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(kBatch, r - k); ++i) {
          step(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += kBatch;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    primes.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

IntegerFactorization factor_integer(const Integer& n) {
  if (n == 0) throw std::invalid_argument("factor_integer(0)");
  Integer m = abs(n);
  std::vector<Integer> primes;
  for (std::uint32_t p : small_primes()) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      primes.emplace_back(p);
      m /= p;
    }
    if (p > 5000) break;
  }
  factor_into(m, primes);
  std::sort(primes.begin(), primes.end());
  IntegerFactorization out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1u);
    }
  }
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (const auto& [p, e] : factor_integer(n)) out.push_back(p);
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factor_integer(n)) {
    std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace liftscope
