#pragma once

// Dense univariate polynomials over Q.

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liftscope/numeric.hpp"

namespace liftscope {

/// Polynomial degree with a distinguished value for the zero polynomial.
/// Addition is total: anything plus minus-infinity is minus-infinity.
class Degree {
 public:
  constexpr Degree() = default;  // minus infinity
  constexpr explicit Degree(int d) : value_(d), finite_(true) {}

  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_minus_infinity() const { return !finite_; }
  /// Precondition: finite.
  int value() const;

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return Degree();
    return Degree(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(Degree a, int b) { return a == Degree(b); }
  friend constexpr std::strong_ordering operator<=>(Degree a, int b) { return a <=> Degree(b); }

 private:
  int value_ = 0;
  bool finite_ = false;
};

class UniPoly {
 public:
  UniPoly() = default;
  /// Coefficients in increasing exponent order; trailing zeros are trimmed.
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);
  explicit UniPoly(const Rational& c);

  static UniPoly constant(const Rational& c) { return UniPoly(c); }
  /// c * x^n
  static UniPoly monomial(const Rational& c, int n);
  static UniPoly x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Degree degree() const { return coeffs_.empty() ? Degree() : Degree(int(coeffs_.size()) - 1); }
  /// Integer degree; the zero polynomial is rejected.
  int deg() const;
  /// Coefficient of x^i (zero beyond the degree).
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Leading coefficient; zero for the zero polynomial.
  Rational lc() const;

  Rational operator()(const Rational& x) const { return eval(x); }
  Rational eval(const Rational& x) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  UniPoly pow(unsigned e) const;
  UniPoly derivative() const;
  /// Monic version (zero stays zero).
  UniPoly monic() const;

  /// Canonical order: degree, then coefficients from the top down.
  friend std::strong_ordering canonical_compare(const UniPoly& a, const UniPoly& b);
  friend bool canonical_less(const UniPoly& a, const UniPoly& b) {
    return canonical_compare(a, b) < 0;
  }

  /// Human-readable form in the CLI grammar, e.g. "2*x^3 - 1/2*x + 7".
  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division over Q. Divisor nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);  // quotient
UniPoly operator%(const UniPoly& a, const UniPoly& b);  // remainder
/// a / b, throwing InconsistencyError when b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& b, const UniPoly& a);

/// Monic greatest common divisor. gcd(p, 0) = monic(p); gcd(0, 0) is rejected.
UniPoly gcd(const UniPoly& p, const UniPoly& q);

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  UniPoly g, s, t;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

/// g(h(x)).
UniPoly compose(const UniPoly& g, const UniPoly& h);

/// Coefficients of p(t0 + z) as a polynomial in z.
UniPoly taylor_shift(const UniPoly& p, const Rational& t0);

/// p(s*x).
UniPoly scale_argument(const UniPoly& p, const Rational& s);

/// p = content * primitive, with primitive in Z[x], gcd of its coefficients 1
/// and positive leading coefficient. Zero maps to (0, 0).
struct ContentPrimitive {
  Rational content;
  UniPoly primitive;
};
ContentPrimitive content_primitive(const UniPoly& p);

/// Primitive integer normalization (content dropped).
inline UniPoly primitive_part(const UniPoly& p) { return content_primitive(p).primitive; }

/// Squarefree decomposition (Yun): p = lc * prod_i parts[i]^(i+1), parts monic
/// and pairwise coprime; parts[i] may be 1.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

/// Product of the distinct monic irreducible factors of p.
UniPoly squarefree_part(const UniPoly& p);

/// Resultant of two univariate polynomials (Sylvester convention).
Rational resultant(const UniPoly& a, const UniPoly& b);

}  // namespace liftscope
