#include "liftscope/activity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "liftscope/errors.hpp"

namespace liftscope {

namespace {

constexpr unsigned long kDirectScanLimit = 1ul << 22;

// Integer coefficients of P_b(T) = b^m P(T/b).
std::vector<Integer> homogenized(const UniPoly& p, const Integer& b) {
  int m = p.deg();
  std::vector<Integer> c(std::size_t(m) + 1);
  Integer bp = 1;
  for (int i = m; i >= 0; --i) {
    c[std::size_t(i)] = p.coeff(i).get_num() * bp;
    bp *= b;
  }
  return c;
}

Integer eval_mod(const std::vector<Integer>& c, const Integer& a, const Integer& n) {
  Integer acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * a + c[k];
    acc %= n;
  }
  if (acc < 0) acc += n;
  return acc;
}

// Residues r mod p^k with p^k | P_b(r), and p not dividing r when unit is set,
// found digit by digit.
std::vector<Integer> roots_mod_prime_power(const std::vector<Integer>& c, const Integer& p, unsigned k, bool unit) {
  if (p > kDirectScanLimit) throw InputError("activity: prime " + p.get_str() + " too large for residue search");
  std::vector<Integer> cur{0};
  Integer pj = 1;
  for (unsigned j = 1; j <= k; ++j) {
    Integer next_mod = pj * p;
    std::vector<Integer> next;
    for (const Integer& r : cur) {
      for (Integer d = 0; d < p; ++d) {
        Integer cand = r + d * pj;
        if (j == 1 && unit && cand % p == 0) continue;
        if (eval_mod(c, cand, next_mod) == 0) next.push_back(cand);
      }
      if (next.size() > kDirectScanLimit) throw InconsistencyError("activity: residue set too large");
    }
    cur = std::move(next);
    pj = next_mod;
    if (cur.empty()) break;
  }
  return cur;
}

struct Search {
  std::optional<Integer> smallest;
  Integer checked;
};

Search search_residues(const std::vector<Integer>& c, const Integer& b, const Integer& n) {
  Search out;
  if (n <= kDirectScanLimit) {
    out.checked = 0;
    if (b.fits_slong_p()) {
      // Machine-word scan; the modulus is below 2^22.
      using u128 = unsigned __int128;
      unsigned long nn = n.get_ui(), bb = b.get_ui();
      std::vector<u128> cm;
      for (const Integer& x : c) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
        cm.push_back(r.get_ui());
      }
      unsigned long count = 0;
      for (unsigned long a = 0; a < nn; ++a) {
        if (std::gcd(a, bb) != 1) continue;
        ++count;
        u128 acc = 0;
        for (std::size_t k = cm.size(); k-- > 0;) acc = (acc * a + cm[k]) % nn;
        if (acc == 0) {
          out.checked = count;
          out.smallest = Integer(a);
          return out;
        }
      }
      out.checked = count;
      return out;
    }
    for (Integer a = 0; a < n; ++a) {
      if (gcd(a, b) != 1) continue;
      ++out.checked;
      if (eval_mod(c, a, n) == 0) {
        out.smallest = a;
        return out;
      }
    }
    return out;
  }
  // Chinese remaindering over the prime powers of n.
  out.checked = 0;
  std::vector<Integer> combined{0};
  Integer modulus = 1;
  for (const auto& [p, k] : factor_integer(n)) {
    Integer pk = pow(p, k);
    std::vector<Integer> local = roots_mod_prime_power(c, p, k, b % p == 0);
    out.checked += pk;
    if (local.empty()) return out;
    if (combined.size() * local.size() > kDirectScanLimit) {
      throw InconsistencyError("activity: too many residue combinations");
    }
    Integer inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pk.get_mpz_t());
    std::vector<Integer> next;
    for (const Integer& x : combined) {
      for (const Integer& y : local) {
        // z = x (mod modulus), z = y (mod pk)
        Integer t = ((y - x) % pk) * inv % pk;
        if (t < 0) t += pk;
        next.push_back(x + modulus * t);
      }
    }
    combined = std::move(next);
    modulus *= pk;
  }
  out.smallest = *std::min_element(combined.begin(), combined.end());
  return out;
}

}  // namespace

DenominatorBound denominator_bound(const UniPoly& a) {
  if (a.degree() < 1) throw InputError("denominator_bound: A must be nonconstant");
  Integer q = 1;
  for (const Rational& c : a.coeffs()) q = lcm(q, c.get_den());
  UniPoly p = a * Rational(q);
  Integer content = 0;
  for (const Rational& c : p.coeffs()) content = gcd(content, c.get_num());
  Integer shared = gcd(content, q);
  p *= Rational(1) / Rational(shared);
  q /= shared;

  int m = p.deg();
  Integer lead = abs(p.lc().get_num());
  Integer bound = 1;
  for (const Integer& prime : prime_divisors(lead)) {
    long vm = long(valuation(lead, prime));
    // e_p = floor of the largest threshold, clipped at zero.
    Rational best = Rational(vm - long(valuation(q, prime)), m);
    for (int i = 0; i < m; ++i) {
      if (p.coeff(i) == 0) continue;
      long vi = long(valuation(p.coeff(i).get_num(), prime));
      best = std::max(best, Rational(vm - vi, m - i));
    }
    if (best >= 1) {
      Integer e;
      mpz_fdiv_q(e.get_mpz_t(), best.get_num().get_mpz_t(), best.get_den().get_mpz_t());
      bound *= pow(prime, e.get_ui());
    }
  }
  return {bound, q, p};
}

ActivityResult activity_witness(const UniPoly& a) {
  DenominatorBound db = denominator_bound(a);
  ActivityResult out;
  out.M = db.M;
  int m = db.P.deg();
  for (const Integer& b : divisors(db.M)) {
    Integer n = db.q * pow(b, unsigned(m));
    std::vector<Integer> c = homogenized(db.P, b);
    Search s = search_residues(c, b, n);
    if (s.smallest) {
      Integer r = *s.smallest;
      if (2 * r > n) r -= n;
      out.active = true;
      out.witness = make_rational(r, b);
      if (!is_integral(a.eval(out.witness))) throw InconsistencyError("activity: witness is not integral");
      out.lambda = integer_coset(a, out.witness);
      return out;
    }
    out.certificate.push_back({b, n, s.checked});
  }
  return out;
}

Rational integer_coset(const UniPoly& a, const Rational& t0) {
  if (!is_integral(a.eval(t0))) throw InputError("integer_coset: A(t0) = " + to_string(a.eval(t0)) + " is not an integer");
  UniPoly c = taylor_shift(a, t0);
  Integer den = 1;
  for (const Rational& x : c.coeffs()) den = lcm(den, x.get_den());
  Integer lambda = 1;
  for (const Integer& p : prime_divisors(den)) {
    long need = 0;
    for (int i = 1; i <= c.deg(); ++i) {
      if (c.coeff(i) == 0) continue;
      long v = valuation(c.coeff(i), p);
      if (v < 0) need = std::max(need, (-v + i - 1) / i);
    }
    lambda *= pow(p, static_cast<unsigned long>(need));
  }
  return Rational(lambda);
}

}  // namespace liftscope
