#include "liftscope/bipoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "liftscope/errors.hpp"

namespace liftscope {

BiPoly::BiPoly(std::vector<UniPoly> y_coeffs) : coeffs_(std::move(y_coeffs)) { trim(); }

void BiPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BiPoly BiPoly::separated(const UniPoly& f, const UniPoly& g) { return from_x(f) - from_y(g); }

BiPoly BiPoly::from_x(const UniPoly& p) { return BiPoly(std::vector<UniPoly>{p}); }

BiPoly BiPoly::from_y(const UniPoly& p) {
  std::vector<UniPoly> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return BiPoly(std::move(v));
}

BiPoly BiPoly::graph(const UniPoly& h) { return BiPoly(std::vector<UniPoly>{-h, UniPoly(Rational(1))}); }

BiPoly BiPoly::monomial(const Rational& c, int i, int j) {
  std::vector<UniPoly> v(std::size_t(j) + 1);
  v[std::size_t(j)] = UniPoly::monomial(c, i);
  return BiPoly(std::move(v));
}

int BiPoly::deg_y() const {
  if (coeffs_.empty()) throw std::logic_error("deg_y() of the zero polynomial");
  return int(coeffs_.size()) - 1;
}

Degree BiPoly::degree_x() const {
  Degree d;
  for (const auto& c : coeffs_) d = std::max(d, c.degree());
  return d;
}

int BiPoly::deg_x() const { return degree_x().value(); }

int BiPoly::total_degree() const {
  if (coeffs_.empty()) throw std::logic_error("total_degree() of the zero polynomial");
  int d = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_zero()) d = std::max(d, int(j) + coeffs_[j].deg());
  }
  return d;
}

UniPoly BiPoly::y_coeff(int j) const {
  if (j < 0 || std::size_t(j) >= coeffs_.size()) return {};
  return coeffs_[std::size_t(j)];
}

UniPoly BiPoly::eval_x(const Rational& x) const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.eval(x));
  return UniPoly(std::move(v));
}

UniPoly BiPoly::eval_y(const Rational& y) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const { return eval_x(x).eval(y); }

BiPoly BiPoly::shift_x(const Rational& a) const {
  std::vector<UniPoly> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(taylor_shift(c, a));
  return BiPoly(std::move(v));
}

BiPoly BiPoly::swap_xy() const {
  if (is_zero()) return {};
  int dx = deg_x();
  std::vector<std::vector<Rational>> out(std::size_t(dx) + 1,
                                         std::vector<Rational>(coeffs_.size(), Rational(0)));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const auto& c = coeffs_[j].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) out[i][j] = c[i];
  }
  std::vector<UniPoly> v;
  v.reserve(out.size());
  for (auto& row : out) v.emplace_back(std::move(row));
  return BiPoly(std::move(v));
}

BiPoly BiPoly::leading_form() const {
  if (is_zero()) return {};
  int d = total_degree();
  std::vector<UniPoly> v(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    int i = d - int(j);
    if (i >= 0) v[j] = UniPoly::monomial(coeffs_[j].coeff(i), i);
  }
  return BiPoly(std::move(v));
}

BiPoly BiPoly::derivative_y() const {
  std::vector<UniPoly> v;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) v.push_back(coeffs_[j] * Rational(long(j)));
  return BiPoly(std::move(v));
}

BiPoly BiPoly::derivative_x() const {
  std::vector<UniPoly> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.derivative());
  return BiPoly(std::move(v));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UniPoly> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return BiPoly(std::move(v));
}

BiPoly operator*(BiPoly a, const Rational& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.trim();
  return a;
}

BiPoly operator*(BiPoly a, const UniPoly& x_poly) {
  for (auto& x : a.coeffs_) x = x * x_poly;
  a.trim();
  return a;
}

BiPoly operator-(BiPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

std::strong_ordering canonical_compare(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return !a.is_zero() <=> !b.is_zero();
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  if (auto c = a.deg_y() <=> b.deg_y(); c != 0) return c;
  for (std::size_t j = a.coeffs_.size(); j-- > 0;) {
    if (auto c = canonical_compare(a.coeffs_[j], b.coeffs_[j]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string BiPoly::to_string(std::string_view xvar, std::string_view yvar) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    const auto& c = coeffs_[j].coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] == 0) continue;
      bool neg = c[i] < 0;
      Rational a = neg ? Rational(-c[i]) : c[i];
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      std::string mono;
      auto append = [&](std::string_view var, std::size_t e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += std::string(var);
        if (e >= 2) mono += "^" + std::to_string(e);
      };
      append(xvar, i);
      append(yvar, j);
      if (mono.empty()) {
        out += liftscope::to_string(a);
      } else if (a == 1) {
        out += mono;
      } else {
        out += liftscope::to_string(a) + "*" + mono;
      }
    }
  }
  return out;
}

Rational canonical_unit(const BiPoly& p) {
  if (p.is_zero()) return 0;
  Integer den_lcm = 1;
  for (const auto& c : p.y_coeffs()) {
    for (const auto& r : c.coeffs()) den_lcm = lcm(den_lcm, r.get_den());
  }
  Integer num_gcd = 0;
  for (const auto& c : p.y_coeffs()) {
    for (const auto& r : c.coeffs()) num_gcd = gcd(num_gcd, r.get_num() * (den_lcm / r.get_den()));
  }
  Rational unit = make_rational(num_gcd, den_lcm);
  return p.leading_coeff() < 0 ? Rational(-unit) : unit;
}

BiPoly canonical(const BiPoly& p) {
  if (p.is_zero()) return {};
  return p * Rational(1 / canonical_unit(p));
}

UniPoly content_y(const BiPoly& p) {
  if (p.is_zero()) return {};
  UniPoly g;
  for (const auto& c : p.y_coeffs()) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

BiPoly pseudo_remainder_y(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder_y by zero");
  if (a.is_zero() || a.deg_y() < b.deg_y()) return a;
  int db = b.deg_y();
  int delta = a.deg_y() - db;
  UniPoly lb = b.lc_y();
  BiPoly r = a;
  int steps = 0;
  while (!r.is_zero() && r.deg_y() >= db) {
    BiPoly t = BiPoly::monomial(1, 0, r.deg_y() - db) * r.lc_y();
    r = r * lb - t * b;
    ++steps;
  }
  for (; steps < delta + 1; ++steps) r = r * lb;
  return r;
}

namespace {

bool y_coeffs_divide(const BiPoly& a, const UniPoly& c, BiPoly& out) {
  std::vector<UniPoly> v;
  v.reserve(a.y_coeffs().size());
  for (const auto& x : a.y_coeffs()) {
    auto [q, r] = divmod(x, c);
    if (!r.is_zero()) return false;
    v.push_back(std::move(q));
  }
  out = BiPoly(std::move(v));
  return true;
}

}  // namespace

bool try_divide(const BiPoly& a, const BiPoly& b, BiPoly& quotient) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) {
    quotient = {};
    return true;
  }
  if (a.deg_y() < b.deg_y()) return false;
  int db = b.deg_y();
  UniPoly lb = b.lc_y();
  BiPoly r = a;
  std::vector<UniPoly> q(std::size_t(a.deg_y() - db) + 1);
  while (!r.is_zero() && r.deg_y() >= db) {
    auto [qc, rem] = divmod(r.lc_y(), lb);
    if (!rem.is_zero()) return false;
    int k = r.deg_y() - db;
    q[std::size_t(k)] = qc;
    r -= BiPoly::monomial(1, 0, k) * qc * b;
  }
  if (!r.is_zero()) return false;
  quotient = BiPoly(std::move(q));
  return true;
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  BiPoly q;
  if (!try_divide(a, b, q)) throw InconsistencyError("bivariate exact_div: not divisible");
  return q;
}

bool divides(const BiPoly& b, const BiPoly& a) {
  BiPoly q;
  return try_divide(a, b, q);
}

bool associates(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return canonical(a) == canonical(b);
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0)");
  if (a.is_zero()) return canonical(b);
  if (b.is_zero()) return canonical(a);
  UniPoly ca = content_y(a), cb = content_y(b);
  UniPoly cont = gcd(ca, cb);
  BiPoly p = exact_div(a, BiPoly::from_x(ca));
  BiPoly q = exact_div(b, BiPoly::from_x(cb));
  if (p.deg_y() < q.deg_y()) std::swap(p, q);
  // Primitive remainder sequence in Q[X][Y].
  while (!q.is_zero() && q.deg_y() > 0) {
    BiPoly r = pseudo_remainder_y(p, q);
    p = std::move(q);
    if (r.is_zero()) {
      q = {};
      break;
    }
    q = exact_div(r, BiPoly::from_x(content_y(r)));
  }
  BiPoly g = q.is_zero() ? p : BiPoly::from_x(UniPoly(Rational(1)));
  if (g.deg_y() > 0) g = exact_div(g, BiPoly::from_x(content_y(g)));
  return canonical(g * cont);
}

BiPoly squarefree_part(const BiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part(0)");
  Rational sign = p.leading_coeff() < 0 ? Rational(-1) : Rational(1);
  UniPoly cont = content_y(p);
  BiPoly prim = exact_div(p, BiPoly::from_x(cont));
  BiPoly sqf_prim = prim;
  if (prim.deg_y() > 0) sqf_prim = exact_div(prim, gcd(prim, prim.derivative_y()));
  UniPoly sqf_cont = cont.is_constant() ? UniPoly(Rational(1)) : liftscope::squarefree_part(cont);
  return canonical(sqf_prim * sqf_cont) * sign;
}

UniPoly resultant_y(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  BiPoly a = p, b = q;
  Rational sign = 1;
  if (a.deg_y() < b.deg_y()) {
    if ((a.deg_y() % 2 == 1) && (b.deg_y() % 2 == 1)) sign = -1;
    std::swap(a, b);
  }
  if (b.deg_y() == 0) return b.lc_y().pow(unsigned(a.deg_y())) * sign;
  // Strip contents: Res(c*A, d*B) = c^deg B * d^deg A * Res(A, B).
  UniPoly ca = content_y(a), cb = content_y(b);
  UniPoly t = ca.pow(unsigned(b.deg_y())) * cb.pow(unsigned(a.deg_y()));
  a = exact_div(a, BiPoly::from_x(ca));
  b = exact_div(b, BiPoly::from_x(cb));
  UniPoly g(Rational(1)), h(Rational(1));
  while (true) {
    int delta = a.deg_y() - b.deg_y();
    if ((a.deg_y() % 2 == 1) && (b.deg_y() % 2 == 1)) sign = -sign;
    BiPoly r = pseudo_remainder_y(a, b);
    a = std::move(b);
    if (r.is_zero()) return {};
    UniPoly divisor = g * h.pow(unsigned(delta));
    std::vector<UniPoly> v;
    for (const auto& c : r.y_coeffs()) v.push_back(exact_div(c, divisor));
    b = BiPoly(std::move(v));
    g = a.lc_y();
    if (delta > 0) h = exact_div(g.pow(unsigned(delta)), h.pow(unsigned(delta - 1)));
    if (b.deg_y() == 0) {
      int da = a.deg_y();
      UniPoly hh = exact_div(b.lc_y().pow(unsigned(da)), h.pow(unsigned(da - 1)));
      return hh * t * sign;
    }
  }
}

UniPoly discriminant_y(const BiPoly& p) {
  int n = p.deg_y();
  if (n < 1) throw std::invalid_argument("discriminant_y of a polynomial of Y-degree 0");
  UniPoly r = resultant_y(p, p.derivative_y());
  Rational sign = ((n * (n - 1) / 2) % 2 == 0) ? Rational(1) : Rational(-1);
  return exact_div(r, p.lc_y()) * sign;
}

}  // namespace liftscope
