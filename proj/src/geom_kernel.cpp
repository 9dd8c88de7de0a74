#include "mcfsol/geom_kernel.hpp"

#include <cmath>

namespace mcfsol {

RuledSurface RuledSurface::noncylindrical(SpaceCurve beta, SpaceCurve w) {
  return RuledSurface(RuledMode::Noncylindrical, std::move(beta), std::move(w));
}

RuledSurface RuledSurface::cylindrical(SpaceCurve beta, const Vec3& w) {
  return RuledSurface(RuledMode::Cylindrical, std::move(beta), SpaceCurve::constant(w));
}

RuledSurface RuledSurface::conical(const Vec3& apex, SpaceCurve w) {
  return RuledSurface(RuledMode::Conical, SpaceCurve::constant(apex), std::move(w));
}

void RuledSurface::check_admissible(double s) const {
  const Vec3 w = w_.value(s);
  const Vec3 dw = w_.d1(s);
  switch (mode_) {
    case RuledMode::Noncylindrical: {
      if (std::abs(w.norm() - 1.0) > kParamTol)
        throw ParamViolation("noncylindrical surface requires |w| = 1");
      if (std::abs(dw.norm() - 1.0) > kParamTol)
        throw ParamViolation("noncylindrical surface requires |w'| = 1");
      if (std::abs(beta_.d1(s).dot(dw)) > kParamTol)
        throw ParamViolation("directrix must be a striction line (<beta',w'> = 0)");
      break;
    }
    case RuledMode::Cylindrical: {
      if (dw.norm() > kParamTol)
        throw ParamViolation("cylindrical surface requires constant w");
      break;
    }
    case RuledMode::Conical: {
      if (beta_.d1(s).norm() > kParamTol)
        throw ParamViolation("conical surface requires a fixed apex");
      if (dw.norm() <= kParamTol)
        throw ParamViolation("conical surface requires w' != 0");
      break;
    }
  }
}

void RevolutionSurface::check_regular(double s) const {
  if (phi_.value(s) <= 0.0)
    throw SingularEvaluation("revolution surface requires phi > 0");
  const double dp = phi_.d1(s), ds = psi_.d1(s);
  if (dp * dp + ds * ds <= 0.0)
    throw SingularEvaluation("generating curve is irregular (phi' = psi' = 0)");
}

RuledInvariants ruled_invariants(const RuledSurface& surf, double s) {
  if (surf.mode() != RuledMode::Noncylindrical)
    throw ParamViolation("ruled invariants are defined for noncylindrical surfaces");
  surf.check_admissible(s);

  const Vec3 db = surf.beta().d1(s);
  const Vec3 ddb = surf.beta().d2(s);
  const Vec3 w = surf.w().value(s);
  const Vec3 dw = surf.w().d1(s);
  const Vec3 ddw = surf.w().d2(s);

  RuledInvariants inv;
  inv.lambda = db.cross(w).dot(dw);
  inv.F = db.dot(w);
  inv.J = w.cross(dw).dot(ddw);
  // Full derivative of <beta'^w, w'>; the beta'^w' term drops (repeated factor).
  inv.lambda_prime = ddb.cross(w).dot(dw) + db.cross(w).dot(ddw);
  return inv;
}

Vec3 ruled_normal(const RuledSurface& surf, double s, double u) {
  const RuledInvariants inv = ruled_invariants(surf, s);
  const double denom = inv.lambda * inv.lambda + u * u;
  if (denom <= 0.0)
    throw SingularEvaluation("normal undefined at lambda = u = 0");
  const Vec3 dw = surf.w().d1(s);
  const Vec3 w = surf.w().value(s);
  return (inv.lambda * dw + u * dw.cross(w)) / std::sqrt(denom);
}

double ruled_mean_curvature(const RuledSurface& surf, double s, double u) {
  const RuledInvariants inv = ruled_invariants(surf, s);
  const double denom = inv.lambda * inv.lambda + u * u;
  if (denom <= 0.0)
    throw SingularEvaluation("mean curvature undefined at lambda = u = 0");
  const double num = inv.lambda * inv.F + inv.lambda * inv.lambda * inv.J +
                     u * inv.lambda_prime + u * u * inv.J;
  return -num / (2.0 * std::pow(denom, 1.5));
}

double ruled_gauss_curvature(const RuledSurface& surf, double s, double u) {
  const RuledInvariants inv = ruled_invariants(surf, s);
  const double denom = inv.lambda * inv.lambda + u * u;
  if (denom <= 0.0)
    throw SingularEvaluation("Gauss curvature undefined at lambda = u = 0");
  return -inv.lambda * inv.lambda / (denom * denom);
}

double cylindrical_mean_curvature(const RuledSurface& surf, double s) {
  if (surf.mode() != RuledMode::Cylindrical)
    throw ParamViolation("cylindrical mean curvature requires cylindrical mode");
  surf.check_admissible(s);
  const Vec3 w = surf.w().value(s);
  if (std::abs(w.norm() - 1.0) > kParamTol)
    throw ParamViolation("cylindrical mean curvature requires |w| = 1");
  const Vec3 db = surf.beta().d1(s);
  const Vec3 ddb = surf.beta().d2(s);
  const double F = db.dot(w);
  const double denom = db.squaredNorm() - F * F;
  if (denom <= kParamTol * kParamTol)
    throw DegenerateSurface("beta' parallel to w");
  return ddb.dot(db.cross(w)) / (2.0 * std::pow(denom, 1.5));
}

Vec3 cylindrical_normal(const RuledSurface& surf, double s) {
  const Vec3 db = surf.beta().d1(s);
  const Vec3 w = surf.w().value(s);
  const Vec3 n = db.cross(w);
  const double len = n.norm();
  if (len <= kParamTol) throw DegenerateSurface("beta' parallel to w");
  return n / len;
}

double conical_triple_product(const RuledSurface& surf, double s) {
  const Vec3 w = surf.w().value(s);
  const Vec3 dw = surf.w().d1(s);
  const Vec3 ddw = surf.w().d2(s);
  return ddw.dot(dw.cross(w));
}

double conical_mean_curvature(const RuledSurface& surf, double s, double u) {
  if (surf.mode() != RuledMode::Conical)
    throw ParamViolation("conical mean curvature requires conical mode");
  surf.check_admissible(s);
  if (u == 0.0) throw SingularEvaluation("conical surface is singular at the apex");
  const double dwn = surf.w().d1(s).norm();
  return conical_triple_product(surf, s) / (2.0 * u * dwn * dwn * dwn);
}

Vec3 conical_normal(const RuledSurface& surf, double s) {
  const Vec3 w = surf.w().value(s);
  const Vec3 dw = surf.w().d1(s);
  const double len = dw.norm();
  if (len <= kParamTol) throw SingularEvaluation("conical normal undefined for w' = 0");
  return dw.cross(w) / len;
}

Vec3 revolution_normal(const RevolutionSurface& surf, double s, double u) {
  const double dp = surf.phi().d1(s), ds = surf.psi().d1(s);
  const double speed2 = dp * dp + ds * ds;
  if (speed2 <= 0.0) throw SingularEvaluation("normal undefined: phi' = psi' = 0");
  const double inv = 1.0 / std::sqrt(speed2);
  return {ds * std::cos(u) * inv, ds * std::sin(u) * inv, -dp * inv};
}

double revolution_mean_curvature(const RevolutionSurface& surf, double s) {
  surf.check_regular(s);
  const double p = surf.phi().value(s);
  const double dp = surf.phi().d1(s), ddp = surf.phi().d2(s);
  const double ds = surf.psi().d1(s), dds = surf.psi().d2(s);
  const double speed2 = dp * dp + ds * ds;
  const double num = p * (ddp * ds - dp * dds) - ds * speed2;
  return num / (2.0 * p * std::pow(speed2, 1.5));
}

double revolution_gauss_curvature(const RevolutionSurface& surf, double s) {
  surf.check_regular(s);
  const double p = surf.phi().value(s);
  const double dp = surf.phi().d1(s), ddp = surf.phi().d2(s);
  const double ds = surf.psi().d1(s), dds = surf.psi().d2(s);
  const double speed2 = dp * dp + ds * ds;
  return (-ds * ds * ddp + dp * ds * dds) / (p * speed2 * speed2);
}

CurveFrame curve_frame(const PlaneCurve& curve, double s) {
  const double d1 = curve.x1.d1(s), d2 = curve.x2.d1(s);
  const double dd1 = curve.x1.d2(s), dd2 = curve.x2.d2(s);
  const double speed2 = d1 * d1 + d2 * d2;
  if (speed2 <= 0.0) throw SingularEvaluation("curve frame undefined at a cusp");
  CurveFrame f;
  f.tau = Vec3(0.0, d1, d2);
  f.eta = Vec3(0.0, d2, -d1);
  f.kappa = (dd1 * d2 - dd2 * d1) / std::pow(speed2, 1.5);
  return f;
}

SurfaceSample surface_sample(const RuledSurface& surf, double s, double u) {
  SurfaceSample smp;
  smp.s = s;
  smp.u = u;
  smp.point = surf.point(s, u);
  switch (surf.mode()) {
    case RuledMode::Noncylindrical:
      smp.normal = ruled_normal(surf, s, u);
      smp.H = ruled_mean_curvature(surf, s, u);
      smp.K = ruled_gauss_curvature(surf, s, u);
      break;
    case RuledMode::Cylindrical:
      smp.normal = cylindrical_normal(surf, s);
      smp.H = cylindrical_mean_curvature(surf, s);
      smp.K = 0.0;
      break;
    case RuledMode::Conical:
      smp.normal = conical_normal(surf, s);
      smp.H = conical_mean_curvature(surf, s, u);
      smp.K = 0.0;
      break;
  }
  return smp;
}

SurfaceSample surface_sample(const RevolutionSurface& surf, double s, double u) {
  SurfaceSample smp;
  smp.s = s;
  smp.u = u;
  smp.point = surf.point(s, u);
  smp.normal = revolution_normal(surf, s, u);
  smp.H = revolution_mean_curvature(surf, s);
  smp.K = revolution_gauss_curvature(surf, s);
  return smp;
}

}  // namespace mcfsol
