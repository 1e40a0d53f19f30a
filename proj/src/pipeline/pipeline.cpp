#include "liftscope/pipeline.hpp"

#include <algorithm>

#include "liftscope/decompose.hpp"
#include "liftscope/errors.hpp"

namespace liftscope {

const char* to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::SiegelFinite: return "siegel-finite";
    case ComponentClass::OneInfinity: return "one-infinity";
    case ComponentClass::TwoInfinity: return "two-infinity";
    case ComponentClass::Unclassified: return "unclassified";
  }
  return "?";
}

const char* to_string(GrowthKind g) {
  switch (g) {
    case GrowthKind::Power: return "power";
    case GrowthKind::Polylog: return "polylog";
    case GrowthKind::Bounded: return "bounded";
    case GrowthKind::Unknown: return "unknown";
  }
  return "?";
}

UniPoly ComponentRecord::A() const {
  if (source) return source->A();
  if (certificate) return certificate->A;
  return {};
}

UniPoly ComponentRecord::B() const {
  if (source) return source->B();
  if (certificate) return certificate->B;
  return {};
}

namespace {

std::optional<std::size_t> match_component(const std::vector<ComponentRecord>& comps, const BiPoly& curve) {
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (associates(comps[i].F, curve)) return i;
  }
  return std::nullopt;
}

void mark_one_infinity(ComponentRecord& rec, int dx) {
  if (dx != rec.F.deg_y()) {
    throw InconsistencyError("component " + rec.F.to_string() + ": d_X = " + std::to_string(dx) +
                             " differs from its Y-degree " + std::to_string(rec.F.deg_y()));
  }
  rec.cls = ComponentClass::OneInfinity;
  rec.dX = dx;
}

// Points at infinity of a conic from its degree form aX^2 + bXY + cY^2.
void classify_conic(ComponentRecord& rec) {
  BiPoly q = rec.F.leading_form();
  Rational a = q.coeff(2, 0), b = q.coeff(1, 1), c = q.coeff(0, 2);
  Rational disc = b * b - 4 * a * c;
  if (disc == 0) return;  // one point at infinity; left to the quadratic-source detector
  rec.cls = ComponentClass::TwoInfinity;
  if (disc < 0) {
    rec.detail = "two conjugate non-real points at infinity (definite degree form)";
  } else if (exact_root(disc, 2)) {
    rec.detail = "two rational points at infinity";
  } else {
    rec.detail = "two conjugate points at infinity";
  }
}

}  // namespace

LiftReport analyze(const UniPoly& f, const UniPoly& g, const std::vector<ParamCertificate>& certificates,
                   const AnalyzeOptions& options) {
  if (f.degree() < 1 || g.degree() < 1) throw InputError("analyze: f and g must be nonconstant");
  LiftReport rep;
  rep.f = f;
  rep.g = g;
  rep.factorization = factor_separated(f, g);
  rep.H = decompositions(f, g);
  for (BiPoly& F : strip_graphs(rep.factorization, rep.H)) {
    ComponentRecord rec;
    rec.F = std::move(F);
    rep.components.push_back(std::move(rec));
  }
  rep.collision = collision_set(rep.factorization, options.include_discriminants);

  for (ComponentRecord& rec : rep.components) {
    rec.abs_factors = absolute_factor_count(rec.F);
    if (rec.abs_factors >= 2) {
      rec.cls = ComponentClass::SiegelFinite;
      rec.detail = "geometrically reducible (" + std::to_string(rec.abs_factors) + " absolute factors)";
    }
  }

  for (const QuadraticSource& src : detect_quadratic_sources(f, g)) {
    auto idx = match_component(rep.components, implicitize(src.A(), src.B()));
    if (!idx) throw InconsistencyError("quadratic source does not match any non-graph factor");
    ComponentRecord& rec = rep.components[*idx];
    if (rec.cls == ComponentClass::SiegelFinite) {
      throw InconsistencyError("quadratic source matched a geometrically reducible factor");
    }
    mark_one_infinity(rec, 2);
    rec.source = src;
  }

  // A factor linear in X with constant X-coefficient is the graph of a
  // polynomial over the Y-line: X = A(t), Y = t.
  for (ComponentRecord& rec : rep.components) {
    if (rec.cls != ComponentClass::Unclassified || rec.F.deg_x() != 1) continue;
    UniPoly lin = rec.F.swap_xy().y_coeff(1);
    if (!lin.is_constant()) continue;
    ParamCertificate cert{rec.F.swap_xy().y_coeff(0) * (-1 / lin.coeff(0)), UniPoly::x()};
    CertificateCheck chk = verify_certificate(f, g, cert);
    if (!chk.accepted) throw InconsistencyError("X-linear parametrization rejected: " + chk.reason);
    mark_one_infinity(rec, chk.dX);
    rec.certificate = cert;
  }

  for (const ParamCertificate& cert : certificates) {
    CertificateCheck chk = verify_certificate(f, g, cert);
    std::string label = "certificate A=" + cert.A.to_string("t") + ", B=" + cert.B.to_string("t");
    if (!chk.accepted) {
      rep.notes.push_back(label + " rejected: " + chk.reason);
      continue;
    }
    auto idx = match_component(rep.components, implicitize(cert.A, cert.B));
    if (!idx) {
      rep.notes.push_back(label + " does not match any non-graph factor");
      continue;
    }
    ComponentRecord& rec = rep.components[*idx];
    if (rec.cls != ComponentClass::Unclassified) {
      rep.notes.push_back(label + " matches an already classified component; kept as " + to_string(rec.cls));
      continue;
    }
    mark_one_infinity(rec, chk.dX);
    rec.certificate = cert;
    rec.provenance = Provenance::Certificate;
  }

  for (ComponentRecord& rec : rep.components) {
    if (rec.cls == ComponentClass::Unclassified && rec.F.total_degree() <= 2) classify_conic(rec);
    if (rec.cls == ComponentClass::OneInfinity) rec.activity = activity_witness(rec.A());
  }

  bool any_two = false, any_unclassified = false;
  int worst_unclassified = 0;  // smallest Y-degree among unclassified factors
  for (const ComponentRecord& rec : rep.components) {
    if (rec.active()) {
      Rational e(1, rec.dX);
      if (!rep.theta || e > *rep.theta) rep.theta = e;
    }
    if (rec.cls == ComponentClass::TwoInfinity) any_two = true;
    if (rec.cls == ComponentClass::Unclassified) {
      if (!any_unclassified || rec.F.deg_y() < worst_unclassified) worst_unclassified = rec.F.deg_y();
      any_unclassified = true;
      rep.notes.push_back("component " + rec.F.to_string() +
                          " unclassified: genus and boundary not computed; supply a certificate");
    }
  }
  // An unclassified factor contributes at most B^(1/deg_Y F), so a larger
  // proven exponent still decides the order.
  if (rep.theta && (!any_unclassified || *rep.theta >= Rational(1, worst_unclassified))) {
    rep.growth = GrowthKind::Power;
  } else if (any_unclassified) {
    rep.growth = GrowthKind::Unknown;
  } else if (any_two) {
    rep.growth = GrowthKind::Polylog;
  } else {
    rep.growth = GrowthKind::Bounded;
  }
  if (any_two) rep.notes.push_back("two-infinity contribution is polylogarithmic; exponent not computed");
  if (rep.theta && *rep.theta > Rational(1, 2)) throw InconsistencyError("theta exceeds 1/2");
  return rep;
}

std::string predicted_growth(const LiftReport& report) {
  switch (report.growth) {
    case GrowthKind::Power: return "≍ B^{" + to_string(*report.theta) + "}";
    case GrowthKind::Polylog: return "polylogarithmic, exponent not computed";
    case GrowthKind::Bounded: return "O(1)";
    case GrowthKind::Unknown: return "unknown; upper bound O(B^{1/2})";
  }
  return "?";
}

std::string growth_explanation(const LiftReport& report) {
  bool square_root = std::any_of(report.components.begin(), report.components.end(),
                                 [](const ComponentRecord& r) { return r.active() && r.dX == 2; });
  std::string out = "N_new(B) " + predicted_growth(report) + ". ";
  if (square_root) {
    out += "An active one-infinity component with d_X = 2 exists, so square-root growth occurs.";
  } else {
    out += "No active one-infinity component with d_X = 2 exists, so N_new(B) = O(B^{1/3}).";
  }
  return out;
}

}  // namespace liftscope
