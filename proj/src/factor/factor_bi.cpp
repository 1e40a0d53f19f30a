#include <algorithm>

#include "liftscope/errors.hpp"
#include "liftscope/factor.hpp"

namespace liftscope {

namespace {

// Power series in Z truncated at some order, coefficients in Q[Y].
using Series = std::vector<UniPoly>;

Series mul_truncated(const Series& a, const Series& b, std::size_t order) {
  Series c(std::min(order, a.size() + b.size() - 1));
  for (std::size_t i = 0; i < a.size() && i < c.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Z-major view: result[k] is the coefficient of X^k as a polynomial in Y.
Series to_series(const BiPoly& p) {
  BiPoly s = p.swap_xy();
  return Series(s.y_coeffs().begin(), s.y_coeffs().end());
}

BiPoly from_series(const Series& s) { return BiPoly(s).swap_xy(); }

bool squarefree_specialization(const BiPoly& p, const Rational& x0) {
  UniPoly s = p.eval_x(x0);
  if (s.degree() != p.degree_y()) return false;
  return gcd(s, s.derivative()).is_constant();
}

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

// Factors a squarefree P, monic in Y, into monic irreducibles.
std::vector<BiPoly> factor_monic(const BiPoly& p) {
  if (p.deg_y() <= 1) return {p};
  Rational x0 = 0;
  for (long k = 0;; ++k) {
    x0 = (k % 2 == 0) ? Rational(-k / 2) : Rational((k + 1) / 2);
    if (squarefree_specialization(p, x0)) break;
    if (k > 10000) throw InconsistencyError("factor_bi: no squarefree specialization found");
  }
  BiPoly q = p.shift_x(x0);
  UniFactorization uf = factor_uni(q.eval_x(0));
  std::vector<UniPoly> u0;
  for (const auto& [f, m] : uf.factors) u0.push_back(f.monic());
  if (u0.size() == 1) return {p};

  std::size_t order = std::size_t(q.degree_x().is_minus_infinity() ? 0 : q.deg_x()) + 1;
  std::size_t r = u0.size();
  std::vector<UniPoly> sigma(r);
  for (std::size_t i = 0; i < r; ++i) {
    UniPoly others(Rational(1));
    for (std::size_t j = 0; j < r; ++j) {
      if (j != i) others *= u0[j];
    }
    ExtendedGcd eg = extended_gcd(others, u0[i]);
    if (!eg.g.is_constant()) throw InconsistencyError("factor_bi: specialization factors not coprime");
    sigma[i] = (eg.s * (1 / eg.g.lc())) % u0[i];
  }

  Series target = to_series(q);
  target.resize(order);
  std::vector<Series> lifted(r);
  for (std::size_t i = 0; i < r; ++i) lifted[i] = Series{u0[i]};
  for (std::size_t k = 1; k < order; ++k) {
    Series prod{UniPoly(Rational(1))};
    for (const auto& s : lifted) prod = mul_truncated(prod, s, k + 1);
    prod.resize(k + 1);
    UniPoly err = target[k] - prod[k];
    for (std::size_t i = 0; i < r; ++i) {
      lifted[i].resize(k + 1);
      if (!err.is_zero()) lifted[i][k] = (err * sigma[i]) % u0[i];
    }
  }

  std::vector<BiPoly> out;
  BiPoly rest = q;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = for_each_subset(lifted.size(), s, [&](const std::vector<std::size_t>& idx) {
      Series c{UniPoly(Rational(1))};
      for (std::size_t i : idx) c = mul_truncated(c, lifted[i], order);
      BiPoly cand = from_series(c);
      BiPoly quot;
      if (!try_divide(rest, cand, quot)) return false;
      out.push_back(cand.shift_x(-x0));
      rest = quot;
      for (std::size_t t = idx.size(); t-- > 0;) lifted.erase(lifted.begin() + std::ptrdiff_t(idx[t]));
      return true;
    });
    if (!found) ++s;
  }
  if (rest.deg_y() > 0) out.push_back(rest.shift_x(-x0));
  return out;
}

}  // namespace

BiPoly BiFactorization::expand() const {
  BiPoly acc = BiPoly::from_x(UniPoly(unit));
  for (const auto& h : graph_factors) acc = acc * BiPoly::graph(h);
  for (const auto& f : nongraph_factors) acc = acc * f;
  return acc;
}

std::vector<BiPoly> BiFactorization::all_factors() const {
  std::vector<BiPoly> out;
  for (const auto& h : graph_factors) out.push_back(BiPoly::graph(h));
  out.insert(out.end(), nongraph_factors.begin(), nongraph_factors.end());
  return out;
}

BiFactorization factor_bi(const BiPoly& p) {
  if (p.is_zero() || p.deg_y() < 1) throw InputError("factor_bi: positive Y-degree required");
  if (!p.lc_y().is_constant()) throw InputError("factor_bi: leading Y-coefficient must be constant");
  if (gcd(p, p.derivative_y()).deg_y() > 0) throw InputError("factor_bi: input is not squarefree");
  Rational lc = p.leading_coeff();
  BiFactorization out;
  Rational nongraph_lc = 1;
  for (auto& f : factor_monic(p * Rational(1 / lc))) {
    if (f.deg_y() == 1) {
      out.graph_factors.push_back(-f.y_coeff(0));
    } else {
      BiPoly c = canonical(f);
      nongraph_lc *= c.leading_coeff();
      out.nongraph_factors.push_back(std::move(c));
    }
  }
  std::sort(out.graph_factors.begin(), out.graph_factors.end(),
            [](const UniPoly& a, const UniPoly& b) { return canonical_less(a, b); });
  std::sort(out.nongraph_factors.begin(), out.nongraph_factors.end(),
            [](const BiPoly& a, const BiPoly& b) { return canonical_less(a, b); });
  out.unit = lc / nongraph_lc;
  if (out.expand() != p) throw InconsistencyError("factor_bi: factors do not multiply back to the input");
  return out;
}

}  // namespace liftscope
