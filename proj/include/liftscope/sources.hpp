#pragma once

// Square-root (d_X = 2) components of f(X) = g(Y), and verification of
// polynomial parametrizations supplied by the user.

#include <optional>
#include <string>
#include <vector>

#include "liftscope/bipoly.hpp"
#include "liftscope/unipoly.hpp"

namespace liftscope {

/// g(Y) = G((Y - c)^2).
struct SourceEvenForm {
  Rational c;
  UniPoly G;
};

std::optional<SourceEvenForm> source_even_center(const UniPoly& g);

/// X = alpha*t^2 + beta, Y = c + t*E(t^2).
struct QuadraticSource {
  Rational alpha;
  Rational beta;
  Rational c;
  UniPoly E;

  UniPoly A() const;
  UniPoly B() const;
};

struct ConstructedSource {
  UniPoly f;
  UniPoly g;
  QuadraticSource source;
};

/// f(X) = G(u*E(u)^2) with u = (X - beta)/alpha, and g(Y) = G((Y - c)^2).
ConstructedSource construct_quadratic_source(const UniPoly& G, const Rational& c, const Rational& alpha,
                                             const Rational& beta, const UniPoly& E);

/// All quadratic sources, one per component, E with positive leading
/// coefficient. Empty when g is not source-even.
std::vector<QuadraticSource> detect_quadratic_sources(const UniPoly& f, const UniPoly& g);

struct ParamCertificate {
  UniPoly A;
  UniPoly B;
};

struct CertificateCheck {
  bool accepted = false;
  /// Empty on acceptance; otherwise names the failed clause.
  std::string reason;
  int dX = 0;
};

/// Checks f(A) = g(B), birationality of t -> (A(t), B(t)), and B not in Q[A].
CertificateCheck verify_certificate(const UniPoly& f, const UniPoly& g, const ParamCertificate& cert);

/// The irreducible polynomial vanishing on (A(t), B(t)), in canonical form.
/// A and B must not both be constant.
BiPoly implicitize(const UniPoly& a, const UniPoly& b);

/// Exact square root with positive leading coefficient, if p is a square.
std::optional<UniPoly> poly_sqrt(const UniPoly& p);

}  // namespace liftscope
