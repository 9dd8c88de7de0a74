#pragma once

// Self-similar soliton condition H = <c X + Gamma'(0) X + Theta'(0), N> and
// the specialized residual systems for each surface family.
//
// Axis conventions are fixed: revolution residuals use Axis::Z (rotation
// about e3, translation b e3), cylindrical residuals use Axis::X (rotation
// about e1, translation b e1). At t = 0 the dilation term is c X.

#include <array>
#include <functional>
#include <vector>

#include "mcfsol/geom_kernel.hpp"

namespace mcfsol {

struct MotionGenerators {
  double a = 0;  // rotation rate xi'(0)
  double b = 0;  // translation rate zeta'(0)
  double c = 0;  // dilation rate sigma'(0)
  Axis axis = Axis::Z;

  Mat3 gamma_prime() const;   // skew generator, Gamma'(0) + Gamma'(0)^T = 0
  Vec3 theta_prime() const;   // b e3 (axis Z) or b e1 (axis X)
};

// c X + Gamma'(0) X + Theta'(0)
Vec3 motion_field(const Vec3& x, const MotionGenerators& gens);

// r = <motion_field(X), N> - H
double pointwise_residual(const SurfaceSample& sample, const MotionGenerators& gens);

struct GridSpec {
  double s_min = 0, s_max = 1;
  int n_s = 1;
  double u_min = 0, u_max = 0;
  int n_u = 1;
};

struct ResidualSample {
  double s = 0, u = 0;
  double value = 0;       // raw residual, as the equations print it
  double normalized = 0;  // value / (1 + sum of |terms|)
};

struct ResidualReport {
  GridSpec grid;
  std::vector<ResidualSample> samples;
  double max_abs = 0;
  double l2 = 0;  // sqrt(mean of squares)
  double max_abs_normalized = 0;

  void add(const ResidualSample& smp);
  void finalize();
};

ResidualReport residual_grid(const RuledSurface& surf, const MotionGenerators& gens,
                             const GridSpec& grid);
ResidualReport residual_grid(const RevolutionSurface& surf, const MotionGenerators& gens,
                             const GridSpec& grid);

// Generating-curve soliton residual for a revolution surface, with
// alpha = (0,phi,psi):
//   r = kappa |tau| - (2c <alpha,eta> + 2b <e3,eta> + <e3,tau>/phi).
// The rotation rate plays no role (rotations act tangentially on a surface
// of revolution). Works for any parameterization speed.
double revolution_soliton_residual(double phi, double psi, double dphi, double dpsi,
                                   double ddphi, double ddpsi, double b, double c,
                                   double* scale = nullptr);
double revolution_soliton_residual(const RevolutionSurface& surf, double s,
                                   const MotionGenerators& gens,
                                   double* scale = nullptr);

struct CylindricalResiduals {
  double r_alg = 0;  // algebraic constraint from the rotation part
  double r_ode = 0;  // curvature equation; zero iff soliton
  double scale = 1;  // 1 + sum of |terms| of r_ode, for scale-free reporting
};

// Cylindrical family, profile plane transverse to the motion axis:
// beta = (0, h, q), w = (x0,y0,z0), axis X. Implements the printed system
//   r_alg = a x0 <w,tau>
//   r_ode = 2c x0 (hq'-qh') + 2b (z0 h'-y0 q') - 2a x0 (hh'+qq')
//           - x0 (q'h''-q''h') / (h'^2+q'^2-(y0 h'+z0 q')^2).
// Several published exact solutions carry rulings with |w| != 1 even though
// the equations assume unit w; allow_unnormalized_w exists solely to
// reproduce them and evaluates the equations literally as printed.
CylindricalResiduals cylindrical_residuals_transverse(const PlaneCurve& beta,
                                                      const Vec3& w,
                                                      const MotionGenerators& gens,
                                                      double s,
                                                      bool allow_unnormalized_w = false);

// Cylindrical family, profile plane containing the motion axis:
// beta = (h, q, 0), w = (x0,y0,z0), axis X:
//   r_alg = a ((1-x0^2) h' - x0 y0 q')
//   r_ode = 2c z0 (hq'-qh') + 2b z0 q' + 2a q (y0 h'-z0 q')
//           - z0 (q'h''-q''h') / (h'^2+q'^2-(x0 h'+y0 q')^2).
CylindricalResiduals cylindrical_residuals_axial(const PlaneCurve& beta, const Vec3& w,
                                                 const MotionGenerators& gens, double s,
                                                 bool allow_unnormalized_w = false);

// Coefficient functions of the noncylindrical residual system, each an inner
// product against the moving frame {w, w', w'^w}.
struct NoncylindricalCoefficients {
  double V = 0;  // <Gamma'(0) beta, w'>
  double W = 0;  // <Gamma'(0) w,    w'>
  double Y = 0;  // <Gamma'(0) beta, w'^w>
  double Z = 0;  // <Gamma'(0) w,    w'^w>
  double C = 0;  // <Theta'(0), w'>
  double D = 0;  // <Theta'(0), w'^w>
  double A = 0;  // c <beta, w'^w>
  double B = 0;  // c <beta, w'>
};

NoncylindricalCoefficients noncylindrical_coefficients(const RuledSurface& surf,
                                                       const MotionGenerators& gens,
                                                       double s);

// Coefficients {c4, c3, c2, c1, c0} of the quartic
//   P(u) = 2 (lambda^2+u^2)^{3/2} (<motion_field(X), N> - H),
// namely c4 = 2Z, c3 = 2(lambda W + Y + D + A),
// c2 = 2(lambda^2 Z + lambda(V+C+B) + J/2),
// c1 = 2 lambda^3 W + 2 lambda^2 (Y+D+A) + lambda',
// c0 = 2 lambda^3 (V+C+B) + lambda F + lambda^2 J.
// A noncylindrical soliton is exactly a surface where all five vanish.
std::array<double, 5> noncylindrical_quartic(const RuledSurface& surf,
                                             const MotionGenerators& gens, double s);

double evaluate_quartic(const std::array<double, 5>& coeffs, double u);

// Conical residual system; all three vanish iff the cone is a soliton.
// r3 shares its numerator with conical_mean_curvature, so r3 = 0 forces H = 0.
struct ConicalResiduals {
  double r1 = 0;  // u^2 coefficient: <Gamma'(0) w + c w, w'^w>
  double r2 = 0;  // u coefficient:   <L'(0) P, w'^w>
  double r3 = 0;  // constant term:   <w'', w'^w> / (2 |w'|^2)
};

ConicalResiduals conical_residual_system(const RuledSurface& surf,
                                         const MotionGenerators& gens, double s);

// Scalar bisection on a bracketing interval, |hi-lo| tolerance 1e-12.
// Used for soliton parameter discovery (e.g. the dilation rate that makes a
// cylinder a shrinker).
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol = 1e-12);

}  // namespace mcfsol
