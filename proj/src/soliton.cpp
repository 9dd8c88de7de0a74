#include "mcfsol/soliton.hpp"

#include <cmath>

namespace mcfsol {

Mat3 MotionGenerators::gamma_prime() const {
  Mat3 m = Mat3::Zero();
  if (axis == Axis::Z) {
    m(0, 1) = -a;
    m(1, 0) = a;
  } else {
    m(1, 2) = -a;
    m(2, 1) = a;
  }
  return m;
}

Vec3 MotionGenerators::theta_prime() const {
  return axis == Axis::Z ? Vec3(0, 0, b) : Vec3(b, 0, 0);
}

Vec3 motion_field(const Vec3& x, const MotionGenerators& gens) {
  Vec3 rot;
  if (gens.axis == Axis::Z)
    rot = Vec3(-gens.a * x.y(), gens.a * x.x(), 0.0);
  else
    rot = Vec3(0.0, -gens.a * x.z(), gens.a * x.y());
  return gens.c * x + rot + gens.theta_prime();
}

double pointwise_residual(const SurfaceSample& sample, const MotionGenerators& gens) {
  return motion_field(sample.point, gens).dot(sample.normal) - sample.H;
}

void ResidualReport::add(const ResidualSample& smp) {
  samples.push_back(smp);
  max_abs = std::max(max_abs, std::abs(smp.value));
  max_abs_normalized = std::max(max_abs_normalized, std::abs(smp.normalized));
  l2 += smp.value * smp.value;
}

void ResidualReport::finalize() {
  if (!samples.empty()) l2 = std::sqrt(l2 / static_cast<double>(samples.size()));
}

namespace {

template <class Surf>
ResidualReport residual_grid_impl(const Surf& surf, const MotionGenerators& gens,
                                  const GridSpec& grid) {
  ResidualReport rep;
  rep.grid = grid;
  for (int i = 0; i < grid.n_s; ++i) {
    const double s = grid.n_s > 1
                         ? grid.s_min + (grid.s_max - grid.s_min) * i / (grid.n_s - 1)
                         : grid.s_min;
    for (int j = 0; j < grid.n_u; ++j) {
      const double u = grid.n_u > 1
                           ? grid.u_min + (grid.u_max - grid.u_min) * j / (grid.n_u - 1)
                           : grid.u_min;
      const SurfaceSample smp = surface_sample(surf, s, u);
      ResidualSample rs;
      rs.s = s;
      rs.u = u;
      const double m = motion_field(smp.point, gens).dot(smp.normal);
      rs.value = m - smp.H;
      rs.normalized = rs.value / (1.0 + std::abs(m) + std::abs(smp.H));
      rep.add(rs);
    }
  }
  rep.finalize();
  return rep;
}

}  // namespace

ResidualReport residual_grid(const RuledSurface& surf, const MotionGenerators& gens,
                             const GridSpec& grid) {
  return residual_grid_impl(surf, gens, grid);
}

ResidualReport residual_grid(const RevolutionSurface& surf, const MotionGenerators& gens,
                             const GridSpec& grid) {
  return residual_grid_impl(surf, gens, grid);
}

double revolution_soliton_residual(double phi, double psi, double dphi, double dpsi,
                                   double ddphi, double ddpsi, double b, double c,
                                   double* scale) {
  if (phi <= 0.0) throw SingularEvaluation("revolution residual requires phi > 0");
  const double speed2 = dphi * dphi + dpsi * dpsi;
  if (speed2 <= 0.0) throw SingularEvaluation("irregular generating curve");
  const double speed = std::sqrt(speed2);
  const double kappa = (ddphi * dpsi - ddpsi * dphi) / (speed2 * speed);
  // alpha = (0,phi,psi), tau = alpha', eta = (0,psi',-phi'), e3 = (0,0,1)
  const double alpha_eta = phi * dpsi - psi * dphi;
  const double e3_eta = -dphi;
  const double e3_tau = dpsi;
  if (scale)
    *scale = 1.0 + std::abs(kappa * speed) + std::abs(2.0 * c * alpha_eta) +
             std::abs(2.0 * b * e3_eta) + std::abs(e3_tau / phi);
  return kappa * speed - (2.0 * c * alpha_eta + 2.0 * b * e3_eta + e3_tau / phi);
}

double revolution_soliton_residual(const RevolutionSurface& surf, double s,
                                   const MotionGenerators& gens, double* scale) {
  return revolution_soliton_residual(surf.phi().value(s), surf.psi().value(s),
                                     surf.phi().d1(s), surf.psi().d1(s),
                                     surf.phi().d2(s), surf.psi().d2(s), gens.b,
                                     gens.c, scale);
}

namespace {

void check_w_norm(const Vec3& w, bool allow_unnormalized) {
  if (!allow_unnormalized && std::abs(w.norm() - 1.0) > kParamTol)
    throw ParamViolation("cylindrical residuals require |w| = 1 "
                         "(set allow_unnormalized_w to reproduce the printed examples)");
}

}  // namespace

CylindricalResiduals cylindrical_residuals_transverse(const PlaneCurve& beta,
                                                      const Vec3& w,
                                                      const MotionGenerators& gens,
                                                      double s,
                                                      bool allow_unnormalized_w) {
  check_w_norm(w, allow_unnormalized_w);
  const double x0 = w.x(), y0 = w.y(), z0 = w.z();
  const double h = beta.x1.value(s), q = beta.x2.value(s);
  const double dh = beta.x1.d1(s), dq = beta.x2.d1(s);
  const double ddh = beta.x1.d2(s), ddq = beta.x2.d2(s);

  const double w_tau = y0 * dh + z0 * dq;  // <w, beta'> with beta' = (0,h',q')
  const double denom = dh * dh + dq * dq - w_tau * w_tau;
  if (denom <= kParamTol) throw DegenerateSurface("beta' parallel to w");

  CylindricalResiduals r;
  r.r_alg = gens.a * x0 * w_tau;
  const double t1 = 2.0 * gens.c * x0 * (h * dq - q * dh);
  const double t2 = 2.0 * gens.b * (z0 * dh - y0 * dq);
  const double t3 = -2.0 * gens.a * x0 * (h * dh + q * dq);
  const double t4 = -x0 * (dq * ddh - ddq * dh) / denom;
  r.r_ode = t1 + t2 + t3 + t4;
  r.scale = 1.0 + std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4);
  return r;
}

CylindricalResiduals cylindrical_residuals_axial(const PlaneCurve& beta, const Vec3& w,
                                                 const MotionGenerators& gens, double s,
                                                 bool allow_unnormalized_w) {
  check_w_norm(w, allow_unnormalized_w);
  const double x0 = w.x(), y0 = w.y(), z0 = w.z();
  const double h = beta.x1.value(s), q = beta.x2.value(s);
  const double dh = beta.x1.d1(s), dq = beta.x2.d1(s);
  const double ddh = beta.x1.d2(s), ddq = beta.x2.d2(s);

  const double w_tau = x0 * dh + y0 * dq;  // <w, beta'> with beta' = (h',q',0)
  const double denom = dh * dh + dq * dq - w_tau * w_tau;
  if (denom <= kParamTol) throw DegenerateSurface("beta' parallel to w");

  CylindricalResiduals r;
  r.r_alg = gens.a * ((1.0 - x0 * x0) * dh - x0 * y0 * dq);
  const double t1 = 2.0 * gens.c * z0 * (h * dq - q * dh);
  const double t2 = 2.0 * gens.b * z0 * dq;
  const double t3 = 2.0 * gens.a * q * (y0 * dh - z0 * dq);
  const double t4 = -z0 * (dq * ddh - ddq * dh) / denom;
  r.r_ode = t1 + t2 + t3 + t4;
  r.scale = 1.0 + std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4);
  return r;
}

NoncylindricalCoefficients noncylindrical_coefficients(const RuledSurface& surf,
                                                       const MotionGenerators& gens,
                                                       double s) {
  const Vec3 beta = surf.beta().value(s);
  const Vec3 w = surf.w().value(s);
  const Vec3 dw = surf.w().d1(s);
  const Vec3 dw_w = dw.cross(w);
  const Mat3 gp = gens.gamma_prime();
  const Vec3 tp = gens.theta_prime();

  NoncylindricalCoefficients k;
  k.V = (gp * beta).dot(dw);
  k.W = (gp * w).dot(dw);
  k.Y = (gp * beta).dot(dw_w);
  k.Z = (gp * w).dot(dw_w);
  k.C = tp.dot(dw);
  k.D = tp.dot(dw_w);
  k.A = gens.c * beta.dot(dw_w);
  k.B = gens.c * beta.dot(dw);
  return k;
}

std::array<double, 5> noncylindrical_quartic(const RuledSurface& surf,
                                             const MotionGenerators& gens, double s) {
  const RuledInvariants inv = ruled_invariants(surf, s);
  const NoncylindricalCoefficients k = noncylindrical_coefficients(surf, gens, s);
  const double L = inv.lambda;
  const double vcb = k.V + k.C + k.B;
  const double yda = k.Y + k.D + k.A;
  return {
      2.0 * k.Z,
      2.0 * (L * k.W + yda),
      2.0 * (L * L * k.Z + L * vcb + 0.5 * inv.J),
      2.0 * L * L * L * k.W + 2.0 * L * L * yda + inv.lambda_prime,
      2.0 * L * L * L * vcb + L * inv.F + L * L * inv.J,
  };
}

double evaluate_quartic(const std::array<double, 5>& c, double u) {
  // c = {c4, c3, c2, c1, c0}
  return (((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4];
}

ConicalResiduals conical_residual_system(const RuledSurface& surf,
                                         const MotionGenerators& gens, double s) {
  if (surf.mode() != RuledMode::Conical)
    throw ParamViolation("conical residual system requires conical mode");
  surf.check_admissible(s);
  const Vec3 w = surf.w().value(s);
  const Vec3 dw = surf.w().d1(s);
  const Vec3 dw_w = dw.cross(w);
  const Vec3 apex = surf.apex();

  ConicalResiduals r;
  r.r1 = (gens.gamma_prime() * w + gens.c * w).dot(dw_w);
  r.r2 = motion_field(apex, gens).dot(dw_w);
  r.r3 = conical_triple_product(surf, s) / (2.0 * dw.squaredNorm());
  return r;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) throw std::invalid_argument("bisect_root: no sign change");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace mcfsol
