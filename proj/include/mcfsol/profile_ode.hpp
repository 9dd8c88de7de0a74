#pragma once

// Numerical integration of the generating-curve systems:
//
//   revolution profile (arc length):
//     phi'' =  psi' Q,   psi'' = -phi' Q,
//     Q = 2c (phi psi' - phi' psi) - 2b phi' + psi'/phi.
//   The system conserves phi'^2 + psi'^2 exactly; drift is integrator error.
//
//   cylindrical graph curves s -> (s, q(s)) for the reduced translator
//   equations of the cylindrical family.

#include <optional>
#include <string>
#include <vector>

#include "mcfsol/soliton.hpp"

namespace mcfsol {

struct ProfileState {
  double s = 0;
  double phi = 1, psi = 0;
  double dphi = 0, dpsi = 1;
};

struct ProfileDerivs {
  double dphi = 0, dpsi = 0;
  double ddphi = 0, ddpsi = 0;
};

ProfileDerivs revolution_rhs(const ProfileState& st, double b, double c);

// Generating-curve soliton residual evaluated on an integration state; the
// second derivatives come from the system right-hand side. Zero to rounding
// along any trajectory of revolution_rhs with the same (b, c).
double revolution_soliton_residual(const ProfileState& st, double b, double c);

enum class IntegrationMethod { Rk4Fixed, Rk45Adaptive };

struct IntegrationConfig {
  IntegrationMethod method = IntegrationMethod::Rk45Adaptive;
  double step = 1e-3;    // fixed-step size (Rk4Fixed)
  double rtol = 1e-10;
  double atol = 1e-12;
  double s_max = 5.0;
  double phi_floor = 1e-6;
  long max_steps = 4000000;
  double max_step = 2e-3;  // also the output sample density
  bool normalize_tangent = false;  // rescale the initial tangent to unit speed
  bool allow_any_speed = false;    // literal mode: integrate as given
};

enum class StopReason { ReachedEnd, SingularStop, StepLimit, DenominatorBlowup };

const char* stop_reason_name(StopReason r);

struct CurvePoint {
  double s = 0;
  double y = 0, z = 0;    // profile coordinates: (phi,psi) or (h,q)
  double dy = 0, dz = 0;  // tangent w.r.t. s
  double kappa = 0;
  double residual = 0;    // governing-equation residual at the sample
};

struct SampledCurve {
  std::vector<CurvePoint> pts;
  StopReason stop = StopReason::ReachedEnd;
  std::string meta;  // "key=value;..." provenance notes

  double total_length() const;
  double max_abs_residual() const;
};

// Integrates the revolution profile system from init. Samples are emitted at
// spacing <= cfg.max_step. Stops at s_max, the phi floor (SingularStop, a
// normal terminal status), or the step limit.
SampledCurve integrate_revolution_profile(ProfileState init, double b, double c,
                                          const IntegrationConfig& cfg);

struct FigurePreset {
  int number = 0;
  double b = 0, c = 0;
  double phi0 = 1, psi0 = 0, dphi0 = 0, dpsi0 = 1;
  std::string label;  // qualitative behaviour implied by the signs of (b,c)
};

// The ten published presets. Throws UnknownFigure outside 1..10.
FigurePreset figure_preset(int n);

// Behaviour label derived from the signs of (b,c): translating iff b != 0,
// shrinking iff c < 0, expanding iff c > 0.
std::string classify_motion(double b, double c);

// Runs a preset. Presets 4, 7, 8 have non-unit initial tangents as printed;
// by default the tangent is normalized (direction preserved) and the
// normalization recorded in the curve metadata. literal = true integrates
// the state exactly as printed instead; the same system applies, conserving
// the non-unit speed.
SampledCurve run_figure_preset(int n, bool literal = false,
                               std::optional<IntegrationConfig> cfg = {});

// Reduced cylindrical graph equations for curves (s, q(s)).
struct GraphOde {
  enum class Kind {
    // y0 q' = x0 q'' / (1 + q'^2 - y0^2), the translating family with
    // b = 1/2, z0 = 0.
    TranslatorReduced,
    // -q'' = 1 + (3/4) q'^2
    GrimReaper,
    // full transverse-profile equation with h = s and general generators
    Custom,
  };
  Kind kind = Kind::GrimReaper;
  double x0 = -1, y0 = 1;   // TranslatorReduced parameters
  MotionGenerators gens;    // Custom
  Vec3 w = Vec3(1, 0, 0);   // Custom
};

SampledCurve integrate_cylindrical_graph(const GraphOde& ode, double s0, double q0,
                                         double dq0, const IntegrationConfig& cfg);

// Resamples to n nodes uniform in arc length (linear interpolation in the
// polyline; tangents and curvature recomputed from the result).
SampledCurve resample_arclength(const SampledCurve& curve, int n);

// Three-point circumcircle curvature estimates with one-sided copies at the
// endpoints; tangents by centered differences in arc length. Fills dy, dz,
// kappa of every point in place.
void refresh_discrete_frame(SampledCurve& curve);

}  // namespace mcfsol
