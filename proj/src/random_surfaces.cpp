#include "mcfsol/random_surfaces.hpp"

#include <array>

#include "mcfsol/trig_poly.hpp"

namespace mcfsol {

namespace {

using TrigVec = std::array<TrigPoly, 3>;

SpaceCurve make_space_curve(const TrigVec& f, const Mat3& frame) {
  TrigVec d1, d2;
  for (int i = 0; i < 3; ++i) {
    d1[i] = f[i].derivative();
    d2[i] = d1[i].derivative();
  }
  auto eval = [frame](const TrigVec& g, double s) {
    return Vec3(frame * Vec3(g[0].eval(s), g[1].eval(s), g[2].eval(s)));
  };
  return SpaceCurve([=](double s) { return eval(f, s); },
                    [=](double s) { return eval(d1, s); },
                    [=](double s) { return eval(d2, s); });
}

Mat3 random_rotation(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Quaterniond q(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
  q.normalize();
  return q.toRotationMatrix();
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// w(s) = (a cos(ws), a sin(ws), c) with a = sin(theta0), c = cos(theta0),
// w = 1/a, expressed in a random orthonormal frame. Unit speed on S^2.
struct SphericalCircle {
  TrigVec w;
  double a;
};

SphericalCircle spherical_circle(Rng& rng) {
  SphericalCircle sc;
  sc.a = uniform(rng, 0.45, 0.92);
  const double c = (uniform(rng, 0, 1) < 0.5 ? 1.0 : -1.0) * std::sqrt(1.0 - sc.a * sc.a);
  const double omega = 1.0 / sc.a;
  sc.w[0] = TrigPoly::cosine(sc.a, omega);
  sc.w[1] = TrigPoly::sine(sc.a, omega);
  sc.w[2] = TrigPoly(c);
  return sc;
}

}  // namespace

RuledSurface random_noncylindrical(Rng& rng) {
  const Mat3 R = random_rotation(rng);
  const SphericalCircle sc = spherical_circle(rng);
  const double a = sc.a;
  const double c = sc.w[2].eval(0.0);
  const double omega = 1.0 / a;

  // F(s) = F0 + F1 cos(nu s), lambda(s) = L0 + L1 sin(mu s), lambda >= 0.3.
  const double F0 = uniform(rng, -0.8, 0.8);
  const double F1 = uniform(rng, -0.5, 0.5);
  const double L0 = uniform(rng, 0.7, 1.6);
  const double L1 = uniform(rng, -0.35, 0.35);
  // Near-collisions with omega would put a near-zero frequency into the
  // product expansion, whose antiderivative divides by it.
  double nu = uniform(rng, 0.3, 1.3);
  if (std::abs(nu - omega) < 0.05) nu += 0.11;
  double mu = uniform(rng, 0.3, 1.3);
  if (std::abs(mu - omega) < 0.05) mu += 0.11;

  TrigPoly F(F0);
  F.add_cos(F1, nu);
  TrigPoly lam(L0);
  lam.add_sin(L1, mu);

  // beta' = F w + lambda (w ^ w'); w ^ w' = (-c cos(ws), -c sin(ws), a).
  // In-plane factor G = a F - c lambda multiplies (cos, sin); the axial
  // component is c F + a lambda.
  TrigPoly G(a * F0 - c * L0);
  G.add_cos(a * F1, nu);
  G.add_sin(-c * L1, mu);

  TrigVec dbeta;
  dbeta[0] = G.times_cos(omega);
  dbeta[1] = G.times_sin(omega);
  dbeta[2] = TrigPoly(c * F0 + a * L0);
  dbeta[2].add_cos(c * F1, nu);
  dbeta[2].add_sin(a * L1, mu);

  TrigVec beta;
  for (int i = 0; i < 3; ++i) beta[i] = dbeta[i].antiderivative();

  return RuledSurface::noncylindrical(make_space_curve(beta, R),
                                      make_space_curve(sc.w, R));
}

RuledSurface random_cylindrical(Rng& rng) {
  const Mat3 R = random_rotation(rng);
  // Directrix with dominant drift along e2 so beta' stays away from w = R e1.
  TrigVec beta;
  beta[0] = TrigPoly(0.0);
  beta[0].add_sin(uniform(rng, -0.4, 0.4), uniform(rng, 0.4, 1.2));
  beta[1] = TrigPoly(0.0, 1.0);
  beta[1].add_cos(uniform(rng, -0.4, 0.4), uniform(rng, 0.4, 1.2));
  beta[2] = TrigPoly(0.0);
  beta[2].add_sin(uniform(rng, 0.3, 0.8), uniform(rng, 0.4, 1.2));
  const Vec3 w = R * Vec3(1, 0, 0);
  return RuledSurface::cylindrical(make_space_curve(beta, R), w);
}

RuledSurface random_conical(Rng& rng) {
  const Mat3 R = random_rotation(rng);
  const SphericalCircle sc = spherical_circle(rng);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const Vec3 apex(gauss(rng), gauss(rng), gauss(rng));
  return RuledSurface::conical(apex, make_space_curve(sc.w, R));
}

RevolutionSurface random_revolution(Rng& rng) {
  TrigPoly phi(uniform(rng, 1.3, 2.2));
  phi.add_sin(uniform(rng, -0.35, 0.35), uniform(rng, 0.4, 1.2));
  phi.add_cos(uniform(rng, -0.25, 0.25), uniform(rng, 0.4, 1.2));
  TrigPoly psi(0.0, 1.0);
  psi.add_sin(uniform(rng, -0.4, 0.4), uniform(rng, 0.4, 1.1));

  const TrigPoly dphi = phi.derivative(), ddphi = dphi.derivative();
  const TrigPoly dpsi = psi.derivative(), ddpsi = dpsi.derivative();
  return RevolutionSurface(
      ScalarCurve([phi](double s) { return phi.eval(s); },
                  [dphi](double s) { return dphi.eval(s); },
                  [ddphi](double s) { return ddphi.eval(s); }),
      ScalarCurve([psi](double s) { return psi.eval(s); },
                  [dpsi](double s) { return dpsi.eval(s); },
                  [ddpsi](double s) { return ddpsi.eval(s); }));
}

MotionGenerators random_generators(Rng& rng, Axis axis) {
  MotionGenerators g;
  g.a = uniform(rng, -1.0, 1.0);
  g.b = uniform(rng, -1.0, 1.0);
  g.c = uniform(rng, -1.0, 1.0);
  g.axis = axis;
  return g;
}

}  // namespace mcfsol
