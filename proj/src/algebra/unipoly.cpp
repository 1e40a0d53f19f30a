#include "liftscope/unipoly.hpp"

#include <stdexcept>

#include "liftscope/errors.hpp"

namespace liftscope {

int Degree::value() const {
  if (!finite_) throw std::logic_error("degree of the zero polynomial has no integer value");
  return value_;
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly::UniPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

UniPoly UniPoly::monomial(const Rational& c, int n) {
  if (c == 0) return {};
  std::vector<Rational> v(std::size_t(n) + 1, Rational(0));
  v[std::size_t(n)] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int UniPoly::deg() const {
  if (coeffs_.empty()) throw std::logic_error("deg() of the zero polynomial");
  return int(coeffs_.size()) - 1;
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || std::size_t(i) >= coeffs_.size()) return 0;
  return coeffs_[std::size_t(i)];
}

Rational UniPoly::lc() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly operator-(UniPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result(Rational(1)), base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(long(i));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / lc());
}

std::strong_ordering canonical_compare(const UniPoly& a, const UniPoly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    const auto& x = a.coeffs_[i];
    const auto& y = b.coeffs_[i];
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string UniPoly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    if (k >= 1) {
      mono = std::string(var);
      if (k >= 2) mono += "^" + std::to_string(k);
    }
    if (mono.empty()) {
      out += liftscope::to_string(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += liftscope::to_string(a) + "*" + mono;
    }
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> r = a.coeffs();
  int db = b.deg();
  int da = a.deg();
  std::vector<Rational> q(std::size_t(da - db) + 1, Rational(0));
  Rational inv = 1 / b.lc();
  const auto& bc = b.coeffs();
  for (int k = da - db; k >= 0; --k) {
    Rational c = r[std::size_t(k + db)] * inv;
    q[std::size_t(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[std::size_t(k + j)] -= c * bc[std::size_t(j)];
  }
  r.resize(std::size_t(db));
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InconsistencyError("exact_div: nonzero remainder");
  return q;
}

bool divides(const UniPoly& b, const UniPoly& a) { return (a % b).is_zero(); }

ContentPrimitive content_primitive(const UniPoly& p) {
  if (p.is_zero()) return {Rational(0), UniPoly()};
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
  Integer num_gcd = 0;
  for (const auto& c : p.coeffs()) num_gcd = gcd(num_gcd, c.get_num() * (den_lcm / c.get_den()));
  Rational content = make_rational(num_gcd, den_lcm);
  if (p.lc() < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c / content);
  return {content, UniPoly(std::move(out))};
}

UniPoly gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd(0, 0)");
  if (q.is_zero()) return p.monic();
  if (p.is_zero()) return q.monic();
  // Primitive remainder sequence over Z keeps coefficients small.
  UniPoly a = primitive_part(p), b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    // Pseudo-remainder of integer polynomials, then primitive part.
    UniPoly r = a;
    Rational lb = b.lc();
    int db = b.deg();
    while (!r.is_zero() && r.deg() >= db) {
      UniPoly t = UniPoly::monomial(r.lc(), r.deg() - db);
      r = r * lb - t * b;
    }
    a = std::move(b);
    b = primitive_part(r);
  }
  return a.monic();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0(Rational(1)), s1, t0, t1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    UniPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) throw std::invalid_argument("extended_gcd(0, 0)");
  Rational inv = 1 / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly compose(const UniPoly& g, const UniPoly& h) {
  UniPoly acc;
  const auto& c = g.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * h + UniPoly(c[k]);
  return acc;
}

UniPoly taylor_shift(const UniPoly& p, const Rational& t0) {
  // Horner in place: repeated synthetic division by (x - t0).
  std::vector<Rational> c = p.coeffs();
  std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) c[j] += t0 * c[j + 1];
  }
  return UniPoly(std::move(c));
}

UniPoly scale_argument(const UniPoly& p, const Rational& s) {
  std::vector<Rational> c = p.coeffs();
  Rational sk = 1;
  for (auto& x : c) {
    x *= sk;
    sk *= s;
  }
  return UniPoly(std::move(c));
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition(0)");
  std::vector<UniPoly> parts;
  if (p.is_constant()) return parts;
  UniPoly dp = p.derivative();
  UniPoly a = gcd(p, dp);
  UniPoly b = exact_div(p.monic(), a);
  UniPoly c = exact_div(dp * Rational(1 / p.lc()), a);
  UniPoly d = c - b.derivative();
  while (!b.is_constant()) {
    UniPoly ai = gcd(b, d);
    parts.push_back(ai);
    b = exact_div(b, ai);
    c = exact_div(d, ai);
    d = c - b.derivative();
  }
  while (!parts.empty() && parts.back().is_constant()) parts.pop_back();
  return parts;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part(0)");
  if (p.is_constant()) return UniPoly(Rational(1));
  return exact_div(p.monic(), gcd(p, p.derivative()));
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  // Euclidean resultant over the field Q.
  Rational acc = 1;
  UniPoly f = a, g = b;
  while (true) {
    int m = f.deg(), n = g.deg();
    if (n == 0) return acc * liftscope::pow(g.lc(), unsigned(m));
    UniPoly r = f % g;
    if (r.is_zero()) return 0;
    int k = r.deg();
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    acc *= liftscope::pow(g.lc(), unsigned(m - k));
    f = std::move(g);
    g = std::move(r);
  }
}

}  // namespace liftscope
