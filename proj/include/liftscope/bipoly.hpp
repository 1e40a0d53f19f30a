#pragma once

// Dense bivariate polynomials over Q, stored as polynomials in Y whose
// coefficients are polynomials in X.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "liftscope/unipoly.hpp"

namespace liftscope {

class BiPoly {
 public:
  BiPoly() = default;
  /// Coefficients indexed by Y-exponent; trailing zeros trimmed.
  explicit BiPoly(std::vector<UniPoly> y_coeffs);

  /// f(X) - g(Y).
  static BiPoly separated(const UniPoly& f, const UniPoly& g);
  /// p(X), no Y.
  static BiPoly from_x(const UniPoly& p);
  /// p(Y), no X.
  static BiPoly from_y(const UniPoly& p);
  /// Y - h(X).
  static BiPoly graph(const UniPoly& h);
  /// c * X^i * Y^j
  static BiPoly monomial(const Rational& c, int i, int j);

  bool is_zero() const { return coeffs_.empty(); }
  Degree degree_y() const { return coeffs_.empty() ? Degree() : Degree(int(coeffs_.size()) - 1); }
  int deg_y() const;
  Degree degree_x() const;
  int deg_x() const;
  int total_degree() const;
  /// Coefficient of Y^j as a polynomial in X.
  UniPoly y_coeff(int j) const;
  Rational coeff(int i, int j) const { return y_coeff(j).coeff(i); }
  const std::vector<UniPoly>& y_coeffs() const { return coeffs_; }
  UniPoly lc_y() const { return coeffs_.empty() ? UniPoly() : coeffs_.back(); }

  /// Specialization X = x, a polynomial in Y.
  UniPoly eval_x(const Rational& x) const;
  /// Specialization Y = y, a polynomial in X.
  UniPoly eval_y(const Rational& y) const;
  Rational eval(const Rational& x, const Rational& y) const;
  /// Substitutes X -> X + a.
  BiPoly shift_x(const Rational& a) const;
  /// Exchanges the roles of X and Y.
  BiPoly swap_xy() const;
  /// Degree form: the homogeneous part of top total degree.
  BiPoly leading_form() const;

  BiPoly derivative_y() const;
  BiPoly derivative_x() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& c);
  friend BiPoly operator*(BiPoly a, const UniPoly& x_poly);
  friend BiPoly operator-(BiPoly a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

  /// Leading coefficient in the (Y, then X) monomial order.
  Rational leading_coeff() const { return is_zero() ? Rational(0) : lc_y().lc(); }

  /// Canonical order: total degree, Y-degree, then coefficients lexicographically.
  friend std::strong_ordering canonical_compare(const BiPoly& a, const BiPoly& b);
  friend bool canonical_less(const BiPoly& a, const BiPoly& b) {
    return canonical_compare(a, b) < 0;
  }

  std::string to_string(std::string_view xvar = "x", std::string_view yvar = "y") const;

 private:
  void trim();
  std::vector<UniPoly> coeffs_;
};

/// Integer-primitive normalization with positive leading coefficient (leading
/// in Y, then in X). Zero stays zero.
BiPoly canonical(const BiPoly& p);
/// The rational c with p = c * canonical(p).
Rational canonical_unit(const BiPoly& p);

/// Content with respect to Y: monic gcd of the X-polynomial coefficients.
UniPoly content_y(const BiPoly& p);

/// Pseudo-remainder in Y: lc_y(b)^(da-db+1) * a mod b.
BiPoly pseudo_remainder_y(const BiPoly& a, const BiPoly& b);

/// Exact division in Q[X][Y]. Returns false when b does not divide a.
bool try_divide(const BiPoly& a, const BiPoly& b, BiPoly& quotient);
BiPoly exact_div(const BiPoly& a, const BiPoly& b);
bool divides(const BiPoly& b, const BiPoly& a);
/// True when a = c * b for a nonzero rational c.
bool associates(const BiPoly& a, const BiPoly& b);

/// Greatest common divisor in Q[X,Y], canonically normalized.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

/// Squarefree part: product of the distinct irreducible factors, each to the
/// first power, integer-primitive with the sign of p's leading coefficient.
BiPoly squarefree_part(const BiPoly& p);

/// Resultant with respect to Y, via the subresultant remainder sequence.
UniPoly resultant_y(const BiPoly& p, const BiPoly& q);

/// Discriminant with respect to Y (deg_y >= 1).
UniPoly discriminant_y(const BiPoly& p);

}  // namespace liftscope
