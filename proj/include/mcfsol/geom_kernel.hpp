#pragma once

// Differential geometry of the four surface families:
//
//   ruled          X(s,u) = beta(s) + u w(s)      (noncylindrical: |w|=1, |w'|=1,
//                                                  <beta',w'>=0, striction line)
//   cylindrical    same, with w constant
//   conical        X(s,u) = P + u w(s), |w|=1, w' != 0
//   revolution     X(u,s) = (phi cos u, phi sin u, psi)
//
// Orientation convention: normals are
//   ruled       N = (lambda w' + u w'^w) / sqrt(lambda^2+u^2)
//   cylindrical N = beta'^w / |beta'^w|
//   conical     N = w'^w / |w'|
//   revolution  N = (psi' cos u, psi' sin u, -phi') / sqrt(phi'^2+psi'^2)
// and the sign of the mean curvature follows. Every residual operation in
// this library uses the same convention.

#include <optional>

#include "mcfsol/derivatives.hpp"
#include "mcfsol/types.hpp"

namespace mcfsol {

enum class RuledMode { Noncylindrical, Cylindrical, Conical };

class RuledSurface {
 public:
  static RuledSurface noncylindrical(SpaceCurve beta, SpaceCurve w);
  static RuledSurface cylindrical(SpaceCurve beta, const Vec3& w);
  static RuledSurface conical(const Vec3& apex, SpaceCurve w);

  RuledMode mode() const { return mode_; }
  const SpaceCurve& beta() const { return beta_; }
  const SpaceCurve& w() const { return w_; }
  Vec3 apex() const { return beta_.value(0.0); }

  Vec3 point(double s, double u) const { return beta_.value(s) + u * w_.value(s); }

  // Checks the mode's parameterization invariants at s (tolerance kParamTol).
  // Throws ParamViolation on failure.
  void check_admissible(double s) const;

 private:
  RuledSurface(RuledMode m, SpaceCurve beta, SpaceCurve w)
      : mode_(m), beta_(std::move(beta)), w_(std::move(w)) {}

  RuledMode mode_;
  SpaceCurve beta_;
  SpaceCurve w_;
};

class RevolutionSurface {
 public:
  RevolutionSurface(ScalarCurve phi, ScalarCurve psi)
      : phi_(std::move(phi)), psi_(std::move(psi)) {}

  const ScalarCurve& phi() const { return phi_; }
  const ScalarCurve& psi() const { return psi_; }

  Vec3 point(double s, double u) const {
    const double p = phi_.value(s);
    return {p * std::cos(u), p * std::sin(u), psi_.value(s)};
  }

  // phi > 0 and (phi')^2 + (psi')^2 > 0; throws SingularEvaluation otherwise.
  void check_regular(double s) const;

 private:
  ScalarCurve phi_, psi_;
};

// Invariants of a noncylindrical ruled surface at a parameter value.
// lambda is the distribution parameter <beta'^w, w'>; F = <beta',w>;
// J = <w^w', w''>.
struct RuledInvariants {
  double lambda = 0;
  double lambda_prime = 0;
  double F = 0;
  double J = 0;
};

// Frame of a plane curve alpha = (0, x1, x2): tau = alpha',
// eta = (0, x2', -x1'), kappa = (x1'' x2' - x2'' x1') / |tau|^3.
struct CurveFrame {
  Vec3 tau = Vec3::Zero();
  Vec3 eta = Vec3::Zero();
  double kappa = 0;
};

struct SurfaceSample {
  Vec3 point = Vec3::Zero();
  Vec3 normal = Vec3::Zero();
  double H = 0;
  double K = 0;
  double s = 0;
  double u = 0;
};

RuledInvariants ruled_invariants(const RuledSurface& surf, double s);
Vec3 ruled_normal(const RuledSurface& surf, double s, double u);
double ruled_mean_curvature(const RuledSurface& surf, double s, double u);
double ruled_gauss_curvature(const RuledSurface& surf, double s, double u);

// Cylindrical specialization H = <beta'', beta'^w> / (2 (|beta'|^2 - F^2)^{3/2});
// independent of u. Requires |w| = 1 and beta' not parallel to w.
double cylindrical_mean_curvature(const RuledSurface& surf, double s);
Vec3 cylindrical_normal(const RuledSurface& surf, double s);

// Conical specialization H = <w'', w'^w> / (2 u |w'|^3). Singular at u = 0.
double conical_mean_curvature(const RuledSurface& surf, double s, double u);
Vec3 conical_normal(const RuledSurface& surf, double s);
// Shared numerator <w'', w'^w>; conical H == 0 iff this vanishes.
double conical_triple_product(const RuledSurface& surf, double s);

Vec3 revolution_normal(const RevolutionSurface& surf, double s, double u);
double revolution_mean_curvature(const RevolutionSurface& surf, double s);
double revolution_gauss_curvature(const RevolutionSurface& surf, double s);

CurveFrame curve_frame(const PlaneCurve& curve, double s);

// Point + normal + curvatures, dispatching on the surface mode.
SurfaceSample surface_sample(const RuledSurface& surf, double s, double u);
SurfaceSample surface_sample(const RevolutionSurface& surf, double s, double u);

}  // namespace mcfsol
