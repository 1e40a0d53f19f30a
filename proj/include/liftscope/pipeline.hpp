#pragma once

// Full analysis of f(X) = g(Y): graph components, component classes, the
// predicted exponent and growth class.

#include <optional>
#include <string>
#include <vector>

#include "liftscope/activity.hpp"
#include "liftscope/factor.hpp"
#include "liftscope/fibers.hpp"
#include "liftscope/sources.hpp"

namespace liftscope {

enum class ComponentClass { SiegelFinite, OneInfinity, TwoInfinity, Unclassified };
enum class Provenance { Builtin, Certificate };
enum class GrowthKind { Power, Polylog, Bounded, Unknown };

const char* to_string(ComponentClass c);
const char* to_string(GrowthKind g);

struct ComponentRecord {
  BiPoly F;
  int abs_factors = 1;
  ComponentClass cls = ComponentClass::Unclassified;
  /// Why SiegelFinite / which kind of TwoInfinity.
  std::string detail;
  /// OneInfinity only.
  int dX = 0;
  std::optional<QuadraticSource> source;
  std::optional<ParamCertificate> certificate;
  std::optional<ActivityResult> activity;
  Provenance provenance = Provenance::Builtin;

  bool active() const { return activity && activity->active; }
  /// X-coordinate of the parametrization (OneInfinity only).
  UniPoly A() const;
  UniPoly B() const;
};

struct AnalyzeOptions {
  bool include_discriminants = false;
};

struct LiftReport {
  UniPoly f, g;
  std::vector<UniPoly> H;
  BiFactorization factorization;
  std::vector<ComponentRecord> components;
  CollisionSet collision;
  std::optional<Rational> theta;
  GrowthKind growth = GrowthKind::Bounded;
  std::vector<std::string> notes;
};

LiftReport analyze(const UniPoly& f, const UniPoly& g, const std::vector<ParamCertificate>& certificates = {},
                   const AnalyzeOptions& options = {});

/// "≍ B^{1/2}", "O(1)", "polylogarithmic, exponent not computed", or an
/// upper-bound statement for unknown growth.
std::string predicted_growth(const LiftReport& report);

/// Longer statement including the square-root criterion.
std::string growth_explanation(const LiftReport& report);

}  // namespace liftscope
