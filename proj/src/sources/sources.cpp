#include "liftscope/sources.hpp"

#include <algorithm>

#include "liftscope/decompose.hpp"
#include "liftscope/errors.hpp"
#include "liftscope/factor.hpp"

namespace liftscope {

std::optional<SourceEvenForm> source_even_center(const UniPoly& g) {
  if (g.degree() < 1) throw InputError("source_even_center: g must be nonconstant");
  int n = g.deg();
  if (n % 2 != 0) return std::nullopt;
  Rational c = -g.coeff(n - 1) / (Rational(n) * g.lc());
  UniPoly shifted = taylor_shift(g, c);
  std::vector<Rational> G(std::size_t(n / 2) + 1);
  for (int k = 0; k <= n; ++k) {
    if (k % 2 == 1) {
      if (shifted.coeff(k) != 0) return std::nullopt;
    } else {
      G[std::size_t(k / 2)] = shifted.coeff(k);
    }
  }
  return SourceEvenForm{c, UniPoly(std::move(G))};
}

UniPoly QuadraticSource::A() const { return UniPoly{beta, 0, alpha}; }

UniPoly QuadraticSource::B() const {
  // c + t*E(t^2)
  std::vector<Rational> b(E.is_zero() ? 1 : std::size_t(2 * E.deg() + 2), 0);
  for (std::size_t k = 0; k < E.coeffs().size(); ++k) b[2 * k + 1] = E.coeffs()[k];
  b[0] = c;
  return UniPoly(std::move(b));
}

ConstructedSource construct_quadratic_source(const UniPoly& G, const Rational& c, const Rational& alpha,
                                             const Rational& beta, const UniPoly& E) {
  if (alpha == 0) throw InputError("construct_quadratic_source: alpha must be nonzero");
  if (E.is_zero()) throw InputError("construct_quadratic_source: E must be nonzero");
  if (G.degree() < 1) throw InputError("construct_quadratic_source: G must be nonconstant");
  UniPoly u{-beta / alpha, 1 / alpha};
  UniPoly eu = compose(E, u);
  ConstructedSource out;
  out.f = compose(G, u * eu * eu);
  out.g = compose(G, UniPoly{c * c, -2 * c, 1});
  out.source = QuadraticSource{alpha, beta, c, E};
  if (compose(out.f, out.source.A()) != compose(out.g, out.source.B())) {
    throw InconsistencyError("construct_quadratic_source: f(A) != g(B)");
  }
  return out;
}

std::optional<UniPoly> poly_sqrt(const UniPoly& p) {
  if (p.is_zero()) return UniPoly();
  if (p.deg() % 2 != 0) return std::nullopt;
  auto lead = exact_root(p.lc(), 2);
  if (!lead) return std::nullopt;
  int d = p.deg() / 2;
  std::vector<Rational> r(std::size_t(d) + 1, 0);
  r[std::size_t(d)] = *lead;
  // Coefficient of x^(2d-k) in r^2 is 2*r_d*r_(d-k) plus terms already known.
  for (int k = 1; k <= d; ++k) {
    Rational known = 0;
    for (int i = d - k + 1; i <= d; ++i) {
      int j = 2 * d - k - i;
      if (j > d - k && j <= d) known += r[std::size_t(i)] * r[std::size_t(j)];
    }
    r[std::size_t(d - k)] = (p.coeff(2 * d - k) - known) / (2 * *lead);
  }
  UniPoly root(std::move(r));
  if (root * root != p) return std::nullopt;
  return root;
}

std::vector<QuadraticSource> detect_quadratic_sources(const UniPoly& f, const UniPoly& g) {
  if (f.degree() < 1 || g.degree() < 1) throw InputError("detect_quadratic_sources: f and g must be nonconstant");
  auto form = source_even_center(g);
  if (!form) return {};
  std::vector<QuadraticSource> out;
  std::vector<BiPoly> components;
  for (const UniPoly& v : decompositions(f, form->G)) {
    for (const RationalRoot& root : rational_roots(v)) {
      if (root.multiplicity % 2 == 0) continue;
      // v(Z + beta) = Z * S(Z), S = s * T^2.
      UniPoly w = taylor_shift(v, root.root);
      UniPoly s_poly = exact_div(w, UniPoly::x());
      Rational s = s_poly.lc();
      auto t = poly_sqrt(s_poly * (1 / s));
      if (!t) continue;
      // alpha = s gives alpha*S(alpha*U) = (s*T(s*U))^2.
      UniPoly e = scale_argument(*t, s) * s;
      if (e.lc() < 0) e = -e;
      QuadraticSource src{s, root.root, form->c, e};
      if (compose(f, src.A()) != compose(g, src.B())) {
        throw InconsistencyError("detect_quadratic_sources: candidate fails f(A) = g(B)");
      }
      if (is_poly_in(src.B(), src.A())) continue;
      BiPoly comp = implicitize(src.A(), src.B());
      if (std::find(components.begin(), components.end(), comp) != components.end()) continue;
      components.push_back(comp);
      out.push_back(std::move(src));
    }
  }
  return out;
}

BiPoly implicitize(const UniPoly& a, const UniPoly& b) {
  if (a.degree() < 1 && b.degree() < 1) throw InputError("implicitize: constant parametrization");
  if (a.degree() < 1) return canonical(BiPoly::from_x(UniPoly{-a.coeff(0), 1}));
  if (b.degree() < 1) return canonical(BiPoly::from_y(UniPoly{-b.coeff(0), 1}));
  // Res_t(X - A(t), Y - B(t)) has X-degree at most deg B; interpolate it from
  // the specializations X = 0, 1, ..., deg B. In each specialization t plays
  // the eliminated variable and Y the coefficient variable.
  int n = b.deg();
  std::vector<Rational> xs;
  std::vector<UniPoly> values;
  BiPoly yb = BiPoly::from_x(UniPoly::x()) - BiPoly::from_y(b);
  for (int i = 0; i <= n; ++i) {
    Rational x = i;
    BiPoly xa = BiPoly::from_y(UniPoly(x) - a);
    xs.push_back(x);
    values.push_back(resultant_y(xa, yb));
  }
  // Lagrange interpolation in X with coefficients in Q[Y].
  BiPoly res;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly basis(Rational(1));
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= UniPoly{-xs[j], 1};
      denom *= xs[i] - xs[j];
    }
    basis *= 1 / denom;
    // values[i] is a polynomial in Y; the result needs Y as the BiPoly's Y.
    res += BiPoly::from_y(values[i]) * basis;
  }
  return canonical(squarefree_part(res));
}

CertificateCheck verify_certificate(const UniPoly& f, const UniPoly& g, const ParamCertificate& cert) {
  if (cert.A.degree() < 1) throw InputError("certificate: A must be nonconstant");
  CertificateCheck out;
  if (compose(f, cert.A) != compose(g, cert.B)) {
    out.reason = "f(A(t)) != g(B(t))";
    return out;
  }
  // gcd over Q(s)[t] of A(t) - A(s) and B(t) - B(s); the variable s is X here.
  BiPoly da = BiPoly::from_y(cert.A) - BiPoly::from_x(cert.A);
  BiPoly db = BiPoly::from_y(cert.B) - BiPoly::from_x(cert.B);
  BiPoly common = db.is_zero() ? da : gcd(da, db);
  if (common.deg_y() != 1) {
    out.reason = "not birational: gcd(A(t)-A(s), B(t)-B(s)) has t-degree " + std::to_string(common.deg_y());
    return out;
  }
  if (is_poly_in(cert.B, cert.A)) {
    out.reason = "graph component: B is a polynomial in A";
    return out;
  }
  out.accepted = true;
  out.dX = cert.A.deg();
  return out;
}

}  // namespace liftscope
