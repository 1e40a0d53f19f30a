#include <algorithm>
#include <stdexcept>

#include "liftscope/errors.hpp"
#include "liftscope/factor.hpp"
#include "modp.hpp"

namespace liftscope {

using detail::ModPoly;
using detail::u64;

namespace {

using IntPoly = std::vector<Integer>;

IntPoly to_intpoly(const UniPoly& f) {
  IntPoly out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    if (c.get_den() != 1) throw std::logic_error("to_intpoly: non-integral coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

UniPoly from_intpoly(const IntPoly& f) {
  std::vector<Rational> c;
  c.reserve(f.size());
  for (const auto& x : f) c.emplace_back(x);
  return UniPoly(std::move(c));
}

void reduce_mod(IntPoly& a, const Integer& m) {
  for (auto& x : a) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  reduce_mod(c, m);
  return c;
}

IntPoly from_modpoly(const ModPoly& f) {
  IntPoly out;
  for (u64 c : f.coeffs()) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

Integer inf_norm(const UniPoly& f) {
  Integer m = 0;
  for (const auto& c : f.coeffs()) m = std::max(m, Integer(abs(c.get_num())));
  return m;
}

// Lifts f = lc(f) * prod(u_i) mod p to a factorization modulo p^k with monic
// factors, by linear Hensel steps.
std::vector<IntPoly> hensel_lift(const UniPoly& f, const std::vector<ModPoly>& u, u64 p, unsigned k) {
  Integer pz(static_cast<unsigned long>(p));
  Integer pk = pow(pz, k);
  IntPoly fi = to_intpoly(f);
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), fi.back().get_mpz_t(), pk.get_mpz_t());
  IntPoly target = fi;
  for (auto& c : target) c *= lc_inv;
  reduce_mod(target, pk);

  std::size_t r = u.size();
  std::vector<ModPoly> sigma(r);
  for (std::size_t i = 0; i < r; ++i) {
    ModPoly others = ModPoly::constant(1, p);
    for (std::size_t j = 0; j < r; ++j) {
      if (j != i) others = others * u[j];
    }
    sigma[i] = detail::inverse_mod(others, u[i]);
  }
  std::vector<IntPoly> lifted;
  for (const auto& ui : u) lifted.push_back(from_modpoly(ui));

  Integer pj = pz;
  for (unsigned j = 1; j < k; ++j) {
    Integer next = pj * pz;
    IntPoly prod{Integer(1)};
    for (const auto& l : lifted) prod = mul_mod(prod, l, next);
    IntPoly err = target;
    reduce_mod(err, next);
    err.resize(std::max(err.size(), prod.size()), Integer(0));
    for (std::size_t i = 0; i < prod.size(); ++i) err[i] -= prod[i];
    reduce_mod(err, next);
    std::vector<u64> e;
    for (auto& c : err) e.push_back(Integer(c / pj).get_ui());
    ModPoly emod(std::move(e), p);
    if (!emod.is_zero()) {
      for (std::size_t i = 0; i < r; ++i) {
        ModPoly delta = detail::divmod(emod * sigma[i], u[i]).second;
        IntPoly d = from_modpoly(delta);
        auto& l = lifted[i];
        l.resize(std::max(l.size(), d.size()), Integer(0));
        for (std::size_t t = 0; t < d.size(); ++t) l[t] += pj * d[t];
      }
    }
    pj = next;
  }
  return lifted;
}

struct PrimeChoice {
  u64 p = 0;
  std::vector<ModPoly> factors;
};

PrimeChoice choose_prime(const UniPoly& f) {
  PrimeChoice best;
  int tried = 0;
  for (u64 p : small_primes()) {
    if (p == 2) continue;
    Integer lcn = f.lc().get_num();
    if (mpz_divisible_ui_p(lcn.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    ModPoly fp = ModPoly::reduce(f, p);
    if (!detail::is_squarefree(fp)) continue;
    int count = detail::count_irreducible_factors(fp.monic());
    if (best.p == 0 || count < int(best.factors.size())) {
      best.p = p;
      best.factors.assign(std::size_t(count), ModPoly());
      if (count == 1) break;
    }
    if (++tried >= 6) break;
  }
  if (best.p == 0) throw InconsistencyError("no suitable prime for factorization");
  best.factors = detail::factor_squarefree(ModPoly::reduce(f, best.p).monic());
  return best;
}

// Visits k-subsets of {0..n-1} in lexicographic order; stops when fn returns true.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<UniPoly> factor_squarefree_primitive(const UniPoly& f_in) {
  if (f_in.is_zero() || f_in.is_constant()) return {};
  UniPoly f = f_in;
  if (f.deg() == 1) return {f};
  std::vector<UniPoly> out;
  // Pull out x first; it keeps the constant-term checks meaningful.
  if (f.coeff(0) == 0) {
    out.push_back(UniPoly::x());
    f = exact_div(f, UniPoly::x());
    if (f.deg() <= 1) {
      if (f.deg() == 1) out.push_back(f);
      return out;
    }
  }
  PrimeChoice choice = choose_prime(f);
  if (choice.factors.size() == 1) {
    out.push_back(f);
    return out;
  }
  int n = f.deg();
  Integer bound = abs(f.lc().get_num()) * pow(Integer(2), unsigned(n)) * (n + 1) * inf_norm(f);
  Integer pz(static_cast<unsigned long>(choice.p));
  unsigned k = 1;
  Integer pk = pz;
  while (pk <= 2 * bound) {
    pk *= pz;
    ++k;
  }
  std::vector<IntPoly> lifted = hensel_lift(f, choice.factors, choice.p, k);

  // Zassenhaus recombination.
  UniPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = for_each_subset(lifted.size(), s, [&](const std::vector<std::size_t>& idx) {
      IntPoly g{rest.lc().get_num()};
      for (std::size_t i : idx) g = mul_mod(g, lifted[i], pk);
      for (auto& c : g) c = symmetric_mod(c, pk);
      while (!g.empty() && g.back() == 0) g.pop_back();
      UniPoly cand = primitive_part(from_intpoly(g));
      if (cand.is_constant()) return false;
      auto [q, r] = divmod(rest, cand);
      if (!r.is_zero()) return false;
      out.push_back(cand);
      rest = q;
      for (std::size_t t = idx.size(); t-- > 0;) lifted.erase(lifted.begin() + std::ptrdiff_t(idx[t]));
      return true;
    });
    if (!found) ++s;
  }
  if (!rest.is_constant()) out.push_back(primitive_part(rest));
  return out;
}

UniPoly UniFactorization::expand() const {
  UniPoly acc(unit);
  for (const auto& [f, m] : factors) acc *= f.pow(m);
  return acc;
}

UniFactorization factor_uni(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factor_uni(0)");
  UniFactorization out;
  auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].is_constant()) continue;
    for (auto& q : factor_squarefree_primitive(primitive_part(parts[i]))) {
      out.factors.emplace_back(std::move(q), unsigned(i + 1));
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  UniPoly prod(Rational(1));
  for (const auto& [f, m] : out.factors) prod *= f.pow(m);
  out.unit = p.lc() / prod.lc();
  return out;
}

namespace {

// Roots of a squarefree integer-primitive polynomial, via p-adic lifting of
// the roots modulo a good prime.
std::vector<Rational> roots_of_squarefree(const UniPoly& f) {
  std::vector<Rational> out;
  if (f.is_constant()) return out;
  int n = f.deg();
  if (n == 1) {
    out.push_back(-f.coeff(0) / f.coeff(1));
    return out;
  }
  if (n == 2) {
    Rational a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
    Rational disc = b * b - 4 * a * c;
    auto s = exact_root(disc, 2);
    if (!s) return out;
    out.push_back((-b - *s) / (2 * a));
    if (*s != 0) out.push_back((-b + *s) / (2 * a));
    std::sort(out.begin(), out.end());
    return out;
  }
  Integer lc = abs(f.lc().get_num());
  Integer bound = lc + inf_norm(f);
  for (u64 p : small_primes()) {
    if (p == 2) continue;
    if (mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    ModPoly fp = ModPoly::reduce(f, p);
    if (!detail::is_squarefree(fp)) continue;
    std::vector<u64> rp = detail::roots(fp);
    if (rp.empty()) return out;
    Integer pz(static_cast<unsigned long>(p));
    Integer pk = pz;
    while (pk <= 2 * bound) pk *= pz;
    IntPoly fi = to_intpoly(f);
    IntPoly dfi = to_intpoly(f.derivative());
    auto eval_mod = [&](const IntPoly& g, const Integer& x, const Integer& m) {
      Integer acc = 0;
      for (std::size_t i = g.size(); i-- > 0;) {
        acc = acc * x + g[i];
        mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
      }
      return acc;
    };
    for (u64 r0 : rp) {
      // Newton iteration, doubling precision each step.
      Integer r(static_cast<unsigned long>(r0));
      Integer m = pz;
      while (m < pk) {
        m = std::min(Integer(m * m), pk);
        Integer fv = eval_mod(fi, r, m);
        Integer dv = eval_mod(dfi, r, m);
        Integer inv;
        mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m.get_mpz_t());
        r = r - fv * inv;
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
      }
      Integer a = symmetric_mod(Integer(lc * r), pk);
      Rational y = make_rational(a, lc);
      if (f.eval(y) == 0) out.push_back(y);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  throw InconsistencyError("rational_roots: no good prime found");
}

}  // namespace

std::vector<Rational> distinct_rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots(0)");
  if (p.is_constant()) return {};
  UniPoly f = primitive_part(p);
  std::vector<Rational> out;
  if (f.coeff(0) == 0) {
    out.push_back(0);
    int shift = 0;
    while (f.coeff(shift) == 0) ++shift;
    f = UniPoly(std::vector<Rational>(f.coeffs().begin() + shift, f.coeffs().end()));
  }
  if (f.deg() >= 3) {
    constexpr u64 kProbe = 1000003;
    bool known_squarefree = !mpz_divisible_ui_p(f.lc().get_num().get_mpz_t(), kProbe) &&
                            detail::is_squarefree(ModPoly::reduce(f, kProbe));
    if (!known_squarefree) f = primitive_part(squarefree_part(f));
  }
  for (auto& r : roots_of_squarefree(f)) out.push_back(r);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RationalRoot> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots(0)");
  std::vector<RationalRoot> out;
  auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].is_constant()) continue;
    for (const auto& r : distinct_rational_roots(parts[i])) out.push_back({r, unsigned(i + 1)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
  return out;
}

}  // namespace liftscope
