#include "modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace liftscope::detail {

u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1u) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("invmod of zero");
  return powmod(a, p - 2, p);
}

ModPoly::ModPoly(std::vector<u64> c, u64 p) : c_(std::move(c)), p_(p) {
  for (auto& x : c_) x %= p_;
  trim();
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::reduce(const UniPoly& f, u64 p) {
  std::vector<u64> c;
  c.reserve(f.coeffs().size());
  Integer pz(static_cast<unsigned long>(p));
  for (const auto& r : f.coeffs()) {
    Integer num, den;
    mpz_fdiv_r(num.get_mpz_t(), r.get_num().get_mpz_t(), pz.get_mpz_t());
    mpz_fdiv_r(den.get_mpz_t(), r.get_den().get_mpz_t(), pz.get_mpz_t());
    u64 n = num.get_ui(), d = den.get_ui();
    c.push_back(mulmod(n, invmod(d, p), p));
  }
  return ModPoly(std::move(c), p);
}

u64 ModPoly::eval(u64 x) const {
  u64 acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mulmod(acc, x, p_) + *it) % p_;
  return acc;
}

ModPoly ModPoly::monic() const {
  if (c_.empty()) return *this;
  return *this * invmod(lc(), p_);
}

ModPoly ModPoly::derivative() const {
  std::vector<u64> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mulmod(c_[i], i % p_, p_));
  return ModPoly(std::move(d), p_);
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  u64 p = a.p_ ? a.p_ : b.p_;
  std::vector<u64> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + b[i]) % p;
  return ModPoly(std::move(c), p);
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  u64 p = a.p_ ? a.p_ : b.p_;
  std::vector<u64> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + p - b[i]) % p;
  return ModPoly(std::move(c), p);
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  u64 p = a.p_ ? a.p_ : b.p_;
  if (a.is_zero() || b.is_zero()) return ModPoly({}, p);
  std::vector<u64> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = (c[i + j] + a.c_[i] * b.c_[j]) % p;
  }
  return ModPoly(std::move(c), p);
}

ModPoly operator*(const ModPoly& a, u64 s) {
  std::vector<u64> c = a.c_;
  for (auto& x : c) x = mulmod(x, s % a.p_, a.p_);
  return ModPoly(std::move(c), a.p_);
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  if (b.is_zero()) throw std::domain_error("ModPoly division by zero");
  u64 p = b.prime();
  if (a.deg() < b.deg()) return {ModPoly({}, p), a};
  std::vector<u64> r = a.coeffs();
  int db = b.deg();
  std::vector<u64> q(std::size_t(a.deg() - db) + 1, 0);
  u64 inv = invmod(b.lc(), p);
  for (int k = a.deg() - db; k >= 0; --k) {
    u64 c = mulmod(r[std::size_t(k + db)], inv, p);
    q[std::size_t(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      u64& x = r[std::size_t(k + j)];
      x = (x + p - mulmod(c, b[std::size_t(j)], p)) % p;
    }
  }
  r.resize(std::size_t(db));
  return {ModPoly(std::move(q), p), ModPoly(std::move(r), p)};
}

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
  ModPoly x = a, y = b;
  while (!y.is_zero()) {
    ModPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ModPoly inverse_mod(const ModPoly& a, const ModPoly& m) {
  u64 p = m.prime();
  ModPoly r0 = m, r1 = divmod(a, m).second;
  ModPoly t0({}, p), t1 = ModPoly::constant(1, p);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.deg() != 0) throw std::domain_error("inverse_mod: not invertible");
  return divmod(t0 * invmod(r0.lc(), p), m).second;
}

ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m) {
  u64 p = m.prime();
  ModPoly result = divmod(ModPoly::constant(1, p), m).second;
  ModPoly b = divmod(base, m).second;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, m).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(result * b, m).second;
  }
  return result;
}

bool is_squarefree(const ModPoly& f) {
  ModPoly d = f.derivative();
  if (d.is_zero()) return f.deg() <= 0;
  return gcd(f, d).deg() == 0;
}

std::vector<std::pair<ModPoly, int>> distinct_degree_factor(const ModPoly& f_in) {
  u64 p = f_in.prime();
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly f = f_in.monic();
  ModPoly x = ModPoly::x(p);
  ModPoly h = x;
  Integer pz(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= f.deg(); ++d) {
    h = powmod(h, pz, f);
    ModPoly g = gcd(h - x, f);
    if (g.deg() > 0) {
      out.emplace_back(g, d);
      f = divmod(f, g).first;
      h = divmod(h, f).second;
    }
  }
  if (f.deg() > 0) out.emplace_back(f, f.deg());
  return out;
}

namespace {

void equal_degree_split(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (f.deg() == d) {
    out.push_back(f.monic());
    return;
  }
  u64 p = f.prime();
  Integer exponent = (pow(Integer(static_cast<unsigned long>(p)), unsigned(d)) - 1) / 2;
  std::uniform_int_distribution<u64> coeff(0, p - 1);
  while (true) {
    std::vector<u64> c(std::size_t(f.deg()));
    for (auto& x : c) x = coeff(rng);
    ModPoly a(std::move(c), p);
    if (a.deg() <= 0) continue;
    ModPoly g = gcd(a, f);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(divmod(f, g).first, d, rng, out);
      return;
    }
    ModPoly b = powmod(a, exponent, f) - ModPoly::constant(1, p);
    g = gcd(b, f);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ModPoly> factor_squarefree(const ModPoly& f) {
  if (f.prime() == 2) throw std::invalid_argument("factor_squarefree requires an odd prime");
  std::mt19937_64 rng(0x5eed'1234ULL + f.prime());
  std::vector<ModPoly> out;
  for (const auto& [g, d] : distinct_degree_factor(f)) equal_degree_split(g, d, rng, out);
  std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                        b.coeffs().rend());
  });
  return out;
}

int count_irreducible_factors(const ModPoly& f) {
  int n = 0;
  for (const auto& [g, d] : distinct_degree_factor(f)) n += g.deg() / d;
  return n;
}

std::vector<u64> roots(const ModPoly& f) {
  u64 p = f.prime();
  std::vector<u64> out;
  if (p <= 4096) {
    for (u64 r = 0; r < p; ++r) {
      if (f.eval(r) == 0) out.push_back(r);
    }
    return out;
  }
  // Split off the linear part gcd(f, x^p - x), then factor it.
  ModPoly x = ModPoly::x(p);
  ModPoly lin = gcd(f, powmod(x, Integer(static_cast<unsigned long>(p)), f) - x);
  if (lin.deg() <= 0) return out;
  std::mt19937_64 rng(0xabcdefULL + p);
  std::vector<ModPoly> linear;
  equal_degree_split(lin, 1, rng, linear);
  for (const auto& l : linear) out.push_back((p - l[0]) % p);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace liftscope::detail
