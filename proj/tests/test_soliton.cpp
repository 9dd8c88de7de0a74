#include "mcfsol/soliton.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "mcfsol/random_surfaces.hpp"
#include "test_helpers.hpp"

using namespace mcfsol;
using namespace mcfsol::testing;

TEST_CASE("motion field basics") {
  SUBCASE("identity motion is zero") {
    const MotionGenerators zero{};
    CHECK(motion_field(Vec3(3, -1, 2), zero).norm() == 0.0);
  }
  SUBCASE("rotation generator about Z") {
    MotionGenerators g;
    g.a = 1;
    g.axis = Axis::Z;
    CHECK((motion_field(Vec3(1, 0, 0), g) - Vec3(0, 1, 0)).norm() == 0.0);
  }
  SUBCASE("linearity with translation and dilation, axis X") {
    MotionGenerators g;
    g.b = 2;
    g.c = 3;
    g.axis = Axis::X;
    CHECK((motion_field(Vec3(1, 1, 1), g) - Vec3(5, 3, 3)).norm() == 0.0);
  }
  SUBCASE("generator matrix is exactly skew") {
    for (Axis ax : {Axis::Z, Axis::X}) {
      MotionGenerators g;
      g.a = 0.37;
      g.axis = ax;
      const Mat3 gp = g.gamma_prime();
      CHECK((gp + gp.transpose()).norm() == 0.0);
    }
  }
  SUBCASE("rotation generators do no radial work") {
    Rng rng(5);
    std::normal_distribution<double> gauss;
    for (int i = 0; i < 100; ++i) {
      MotionGenerators g = random_generators(rng, i % 2 ? Axis::Z : Axis::X);
      g.b = g.c = 0;
      const Vec3 v(gauss(rng), gauss(rng), gauss(rng));
      CHECK(std::abs(motion_field(v, g).dot(v)) <= 1e-15 * v.squaredNorm());
    }
  }
}

TEST_CASE("generator matrices follow the axis conventions") {
  MotionGenerators gz;
  gz.a = 2.0;
  gz.b = 3.0;
  gz.axis = Axis::Z;
  Mat3 expected_z = Mat3::Zero();
  expected_z(0, 1) = -2.0;
  expected_z(1, 0) = 2.0;
  CHECK((gz.gamma_prime() - expected_z).norm() == 0.0);
  CHECK((gz.theta_prime() - Vec3(0, 0, 3)).norm() == 0.0);

  MotionGenerators gx;
  gx.a = 2.0;
  gx.b = 3.0;
  gx.axis = Axis::X;
  Mat3 expected_x = Mat3::Zero();
  expected_x(1, 2) = -2.0;
  expected_x(2, 1) = 2.0;
  CHECK((gx.gamma_prime() - expected_x).norm() == 0.0);
  CHECK((gx.theta_prime() - Vec3(3, 0, 0)).norm() == 0.0);

  // motion_field agrees with the explicit matrix form
  Rng rng(11);
  std::normal_distribution<double> gauss;
  for (int i = 0; i < 20; ++i) {
    const MotionGenerators g = random_generators(rng, i % 2 ? Axis::Z : Axis::X);
    const Vec3 x(gauss(rng), gauss(rng), gauss(rng));
    const Vec3 direct = g.c * x + g.gamma_prime() * x + g.theta_prime();
    CHECK((motion_field(x, g) - direct).norm() <= 1e-15 * (1.0 + direct.norm()));
  }
}

TEST_CASE("noncylindrical coefficients equal their defining inner products") {
  Rng rng(271);
  std::uniform_real_distribution<double> us(-1.5, 1.5);
  for (int trial = 0; trial < 20; ++trial) {
    const RuledSurface surf = random_noncylindrical(rng);
    const MotionGenerators g = random_generators(rng, trial % 2 ? Axis::Z : Axis::X);
    const double s = us(rng);
    const NoncylindricalCoefficients k = noncylindrical_coefficients(surf, g, s);
    const Vec3 beta = surf.beta().value(s);
    const Vec3 w = surf.w().value(s);
    const Vec3 dw = surf.w().d1(s);
    const Vec3 dw_w = dw.cross(w);
    const Mat3 gp = g.gamma_prime();
    CHECK(std::abs(k.V - (gp * beta).dot(dw)) <= 1e-10);
    CHECK(std::abs(k.W - (gp * w).dot(dw)) <= 1e-10);
    CHECK(std::abs(k.Y - (gp * beta).dot(dw_w)) <= 1e-10);
    CHECK(std::abs(k.Z - (gp * w).dot(dw_w)) <= 1e-10);
    CHECK(std::abs(k.C - g.theta_prime().dot(dw)) <= 1e-10);
    CHECK(std::abs(k.D - g.theta_prime().dot(dw_w)) <= 1e-10);
    CHECK(std::abs(k.A - g.c * beta.dot(dw_w)) <= 1e-10);
    CHECK(std::abs(k.B - g.c * beta.dot(dw)) <= 1e-10);
  }
}

TEST_CASE("pointwise residual on exact solitons") {
  SUBCASE("helicoid with zero motion") {
    const RuledSurface heli = make_helicoid(1.5);
    const MotionGenerators zero{};
    for (double s : {-1.0, 0.4})
      for (double u : {-2.0, 0.3, 1.0})
        CHECK(std::abs(pointwise_residual(surface_sample(heli, s, u), zero)) <= 1e-12);
  }
  SUBCASE("shrinking cylinder phi = r") {
    for (double r : {0.5, 1.0, 2.0}) {
      const RevolutionSurface cyl = make_cylinder(r);
      MotionGenerators g;
      g.c = -1.0 / (2.0 * r * r);
      for (double s : {0.0, 1.0})
        for (double u : {0.0, 2.0})
          CHECK(std::abs(pointwise_residual(surface_sample(cyl, s, u), g)) <= 1e-12);
    }
  }
}

TEST_CASE("residual grids") {
  const MotionGenerators zero{};
  SUBCASE("helicoid") {
    const RuledSurface heli = make_helicoid(1.0);
    const GridSpec grid{-2, 2, 25, -2, 2, 10};
    const ResidualReport rep = residual_grid(heli, zero, grid);
    CHECK(rep.samples.size() == 250);
    CHECK(rep.max_abs <= 1e-12);
    CHECK(rep.l2 <= rep.max_abs);
  }
  SUBCASE("cylinder shrinker") {
    const RevolutionSurface cyl = make_cylinder(1.0);
    MotionGenerators g;
    g.c = -0.5;
    const ResidualReport rep = residual_grid(cyl, g, {0, 5, 20, 0, 6.28, 10});
    CHECK(rep.max_abs <= 1e-12);
  }
  SUBCASE("max_abs equals the max of pointwise calls") {
    Rng rng(17);
    const RevolutionSurface surf = random_revolution(rng);
    const MotionGenerators g = random_generators(rng, Axis::Z);
    const GridSpec grid{-1, 1, 7, 0, 3, 5};
    const ResidualReport rep = residual_grid(surf, g, grid);
    double m = 0;
    for (const auto& smp : rep.samples)
      m = std::max(m, std::abs(pointwise_residual(
                          surface_sample(surf, smp.s, smp.u), g)));
    CHECK(rep.max_abs == doctest::Approx(m).epsilon(1e-15));
  }
}

TEST_CASE("revolution soliton residual") {
  SUBCASE("cylinder: 2cr + 1/r = 0 exactly") {
    for (double r : {0.5, 1.0, 2.0}) {
      const RevolutionSurface cyl = make_cylinder(r);
      MotionGenerators g;
      g.c = -1.0 / (2.0 * r * r);
      for (double s : {0.0, 3.0, 7.5})
        CHECK(std::abs(revolution_soliton_residual(cyl, s, g)) <= 1e-12);
    }
  }
  SUBCASE("self-shrinking unit sphere, c = -1") {
    const RevolutionSurface sph = make_sphere_profile();
    MotionGenerators g;
    g.c = -1.0;
    for (double s = -1.4; s <= 1.4; s += 0.2)
      CHECK(std::abs(revolution_soliton_residual(sph, s, g)) <= 1e-12);
  }
  SUBCASE("catenoid with zero motion") {
    const RevolutionSurface cat = make_catenoid();
    const MotionGenerators zero{};
    for (double s : {-1.5, 0.0, 0.3, 2.0})
      CHECK(std::abs(revolution_soliton_residual(cat, s, zero)) <= 1e-12);
  }
  SUBCASE("rotation rate is ignored") {
    const RevolutionSurface sph = make_sphere_profile();
    MotionGenerators g;
    g.c = -1.0;
    g.a = 5.0;
    CHECK(std::abs(revolution_soliton_residual(sph, 0.4, g)) <= 1e-12);
  }
}

TEST_CASE("revolution residual is -2|tau| times the pointwise residual") {
  Rng rng(23);
  std::uniform_real_distribution<double> us(-1.5, 1.5);
  for (int trial = 0; trial < 25; ++trial) {
    const RevolutionSurface surf = random_revolution(rng);
    MotionGenerators g = random_generators(rng, Axis::Z);
    const double s = us(rng);
    const double r_rev = revolution_soliton_residual(surf, s, g);
    const double speed = std::hypot(surf.phi().d1(s), surf.psi().d1(s));
    for (double u : {0.0, 1.1, 4.0}) {
      const double r_pt = pointwise_residual(surface_sample(surf, s, u), g);
      CHECK(r_rev == doctest::Approx(-2.0 * speed * r_pt).epsilon(1e-9));
    }
  }
}

TEST_CASE("cylindrical residuals, transverse profile plane") {
  MotionGenerators gens;
  gens.axis = Axis::X;

  SUBCASE("grim reaper translator") {
    gens.b = 1.0;
    auto g = [](double s) {
      return std::sin(std::sqrt(3.0) / 2 * s) - std::cos(std::sqrt(3.0) / 2 * s);
    };
    auto gp = [](double s) {
      return std::sqrt(3.0) / 2 *
             (std::cos(std::sqrt(3.0) / 2 * s) + std::sin(std::sqrt(3.0) / 2 * s));
    };
    const PlaneCurve beta{
        ScalarCurve::identity(),
        ScalarCurve([g](double s) { return 2.0 / 3.0 * std::log(0.75 * g(s) * g(s)); },
                    [g, gp](double s) { return 4.0 / 3.0 * gp(s) / g(s); },
                    [g, gp](double s) {
                      const double t = gp(s) / g(s);
                      return -1.0 - 4.0 / 3.0 * t * t;
                    })};
    const Vec3 w(1.0, 0.0, 0.5);
    CHECK_THROWS_AS(cylindrical_residuals_transverse(beta, w, gens, 0.5),
                    ParamViolation);
    for (double s : {0.2, 0.5, 0.8, 1.0, 1.4, 1.7}) {
      const auto r = cylindrical_residuals_transverse(beta, w, gens, s, true);
      CHECK(std::abs(r.r_alg) <= 1e-9);
      CHECK(std::abs(r.r_ode) <= 1e-9);
    }
  }

  SUBCASE("straight directrix with zero generators") {
    const PlaneCurve line{ScalarCurve::identity(),
                          ScalarCurve([](double s) { return 0.3 * s + 2.0; },
                                      [](double) { return 0.3; },
                                      [](double) { return 0.0; })};
    MotionGenerators zero;
    zero.axis = Axis::X;
    const auto r = cylindrical_residuals_transverse(line, Vec3(1, 0, 0), zero, 1.0);
    CHECK(r.r_alg == 0.0);
    CHECK(std::abs(r.r_ode) <= 1e-10);
  }

  SUBCASE("sol2: q = sqrt(2s+2) with b = 1/2, w = (-1,1,0)") {
    gens.b = 0.5;
    const PlaneCurve beta{
        ScalarCurve::identity(),
        ScalarCurve([](double s) { return std::sqrt(2.0 * s + 2.0); },
                    [](double s) { return 1.0 / std::sqrt(2.0 * s + 2.0); },
                    [](double s) { return -std::pow(2.0 * s + 2.0, -1.5); })};
    for (double s = 0.0; s <= 5.0; s += 0.25) {
      const auto r = cylindrical_residuals_transverse(beta, Vec3(-1, 1, 0), gens, s, true);
      CHECK(std::abs(r.r_ode) <= 1e-12);
    }
  }
}

TEST_CASE("cylindrical residuals, axial profile plane") {
  SUBCASE("forced slope relation zeroes r_alg and the curvature") {
    Rng rng(31);
    std::uniform_real_distribution<double> uv(0.25, 0.65);
    for (int trial = 0; trial < 50; ++trial) {
      const double x0 = uv(rng), y0 = uv(rng);
      MotionGenerators gens;
      gens.axis = Axis::X;
      gens.a = uv(rng);
      const double slope = (1.0 - x0 * x0) / (x0 * y0);
      const double a1 = uv(rng), w1 = uv(rng) + 0.3;
      const PlaneCurve beta{
          ScalarCurve([a1, w1](double s) { return s + a1 * std::sin(w1 * s); },
                      [a1, w1](double s) { return 1 + a1 * w1 * std::cos(w1 * s); },
                      [a1, w1](double s) { return -a1 * w1 * w1 * std::sin(w1 * s); }),
          ScalarCurve(
              [a1, w1, slope](double s) { return slope * (s + a1 * std::sin(w1 * s)); },
              [a1, w1, slope](double s) { return slope * (1 + a1 * w1 * std::cos(w1 * s)); },
              [a1, w1, slope](double s) { return -slope * a1 * w1 * w1 * std::sin(w1 * s); })};
      const double z0sq = 1.0 - x0 * x0 - y0 * y0;
      const Vec3 w(x0, y0, std::sqrt(std::max(1e-12, z0sq)));
      const double s = uv(rng);
      const auto r = cylindrical_residuals_axial(beta, w, gens, s, true);
      CHECK(std::abs(r.r_alg) <= 1e-10);
      const double dh = beta.x1.d1(s), dq = beta.x2.d1(s);
      const double ddh = beta.x1.d2(s), ddq = beta.x2.d2(s);
      CHECK(std::abs(ddh * dq - ddq * dh) <= 1e-10);
    }
  }

  SUBCASE("zero generators, straight directrix") {
    const PlaneCurve line{ScalarCurve::identity(),
                          ScalarCurve([](double s) { return 1.0 - 0.4 * s; },
                                      [](double) { return -0.4; },
                                      [](double) { return 0.0; })};
    MotionGenerators zero;
    zero.axis = Axis::X;
    const auto r = cylindrical_residuals_axial(line, Vec3(0, 0, 1), zero, 0.7);
    CHECK(r.r_alg == 0.0);
    CHECK(r.r_ode == 0.0);
  }

  SUBCASE("self-shrinking circle, a = 0, w = e3, c = -1/2") {
    MotionGenerators gens;
    gens.axis = Axis::X;
    gens.c = -0.5;
    const PlaneCurve circle{ScalarCurve([](double s) { return std::cos(s); },
                                        [](double s) { return -std::sin(s); },
                                        [](double s) { return -std::cos(s); }),
                            ScalarCurve([](double s) { return std::sin(s); },
                                        [](double s) { return std::cos(s); },
                                        [](double s) { return -std::sin(s); })};
    for (double s = 0.0; s < 6.28; s += 0.31) {
      const auto r = cylindrical_residuals_axial(circle, Vec3(0, 0, 1), gens, s);
      CHECK(std::abs(r.r_ode) <= 1e-10);
      CHECK(r.r_alg == 0.0);
    }
  }
}

TEST_CASE("noncylindrical quartic") {
  SUBCASE("helicoid with zero generators has all five coefficients zero") {
    const RuledSurface heli = make_helicoid(1.0);
    const auto c = noncylindrical_quartic(heli, MotionGenerators{}, 0.8);
    for (double ci : c) CHECK(std::abs(ci) <= 1e-14);
  }

  SUBCASE("evaluating the quartic reproduces the scaled pointwise residual") {
    Rng rng(2024);
    std::uniform_real_distribution<double> us(-1.5, 1.5);
    for (int trial = 0; trial < 20; ++trial) {
      const RuledSurface surf = random_noncylindrical(rng);
      const MotionGenerators gens = random_generators(rng, trial % 2 ? Axis::Z : Axis::X);
      const double s = us(rng);
      const auto coeffs = noncylindrical_quartic(surf, gens, s);
      const double lambda = ruled_invariants(surf, s).lambda;
      for (double u : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
        const double r = pointwise_residual(surface_sample(surf, s, u), gens);
        const double scaled = 2.0 * std::pow(lambda * lambda + u * u, 1.5) * r;
        CHECK(std::abs(evaluate_quartic(coeffs, u) - scaled) <= 1e-8);
      }
    }
  }

  SUBCASE("c1 exposes lambda' for surfaces with varying distribution parameter") {
    Rng rng(77);
    const RuledSurface surf = random_noncylindrical(rng);
    double s_star = 0;
    double best = 0;
    for (double s = -1.5; s <= 1.5; s += 0.1) {
      const double lp = std::abs(ruled_invariants(surf, s).lambda_prime);
      if (lp > best) {
        best = lp;
        s_star = s;
      }
    }
    REQUIRE(best > 1e-3);
    const auto c = noncylindrical_quartic(surf, MotionGenerators{}, s_star);
    CHECK(c[3] == doctest::Approx(ruled_invariants(surf, s_star).lambda_prime)
                      .epsilon(1e-12));
    CHECK(std::abs(c[3]) > 1e-3);
  }

  SUBCASE("helicoid under its own screw motion solves the full system") {
    const double h = 1.3;
    const RuledSurface heli = make_helicoid(h);
    MotionGenerators screw;
    screw.axis = Axis::Z;
    screw.a = 0.7;
    screw.b = 0.7 * h;
    for (double s : {-0.9, 0.0, 1.2}) {
      const auto c = noncylindrical_quartic(heli, screw, s);
      for (double ci : c) CHECK(std::abs(ci) <= 1e-12);
      for (double u : {-1.0, 0.5, 2.0})
        CHECK(std::abs(ruled_mean_curvature(heli, s, u)) <= 1e-12);
    }
    screw.b = 0.7 * h + 0.2;
    const auto c = noncylindrical_quartic(heli, screw, 0.3);
    CHECK(std::abs(c[1]) > 1e-3);
  }

  SUBCASE("triviality: vanishing quartic forces a minimal surface") {
    Rng rng(404);
    for (int trial = 0; trial < 20; ++trial) {
      const RuledSurface surf = random_noncylindrical(rng);
      const MotionGenerators gens = random_generators(rng, Axis::Z);
      double max_coeff = 0;
      for (double s = -1.0; s <= 1.0; s += 0.25) {
        const auto c = noncylindrical_quartic(surf, gens, s);
        for (double ci : c) max_coeff = std::max(max_coeff, std::abs(ci));
      }
      if (max_coeff <= 1e-10) {
        for (double s = -1.0; s <= 1.0; s += 0.25)
          for (double u : {-1.0, 0.3, 1.0})
            CHECK(std::abs(ruled_mean_curvature(surf, s, u)) <= 1e-6);
      }
    }
  }
}

TEST_CASE("conical residual system") {
  SUBCASE("planar direction field, apex at origin, zero generators") {
    SpaceCurve w([](double s) { return Vec3(std::cos(s), std::sin(s), 0); },
                 [](double s) { return Vec3(-std::sin(s), std::cos(s), 0); },
                 [](double s) { return Vec3(-std::cos(s), -std::sin(s), 0); });
    const RuledSurface cone = RuledSurface::conical(Vec3::Zero(), std::move(w));
    const auto r = conical_residual_system(cone, MotionGenerators{}, 0.8);
    CHECK(r.r1 == 0.0);
    CHECK(r.r2 == 0.0);
    CHECK(r.r3 == 0.0);
  }

  SUBCASE("non-degenerate circular cone has r3 != 0") {
    for (double rr : {0.3, 0.6, 1.0 / std::sqrt(2.0), 0.9}) {
      const RuledSurface cone = make_circular_cone(rr);
      const auto r = conical_residual_system(cone, MotionGenerators{}, 0.5);
      CHECK(std::abs(r.r3) > 1e-3);
    }
  }

  SUBCASE("r3 = 0 forces H = 0 exactly (shared numerator)") {
    Rng rng(55);
    std::uniform_real_distribution<double> us(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
      const RuledSurface cone = random_conical(rng);
      const double s = us(rng);
      const auto r = conical_residual_system(cone, random_generators(rng, Axis::Z), s);
      const double H = conical_mean_curvature(cone, s, 1.7);
      if (r.r3 == 0.0) CHECK(H == 0.0);
      CHECK(r.r3 * H >= 0.0);
    }
  }
}

TEST_CASE("direction fields of cones satisfy the moving-frame identities") {
  // unit-speed curves on the unit sphere obey
  //   w'' = kg (w'^w) - w   and   (w'^w)' = -kg w'
  // with geodesic curvature kg = -<w^w', w''>.
  Rng rng(604);
  std::uniform_real_distribution<double> us(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const RuledSurface cone = random_conical(rng);
    const double s = us(rng);
    const Vec3 w = cone.w().value(s);
    const Vec3 dw = cone.w().d1(s);
    const Vec3 ddw = cone.w().d2(s);
    const double kg = -w.cross(dw).dot(ddw);
    CHECK((ddw - (kg * dw.cross(w) - w)).norm() <= 1e-10);
    const double h = 1e-6;
    const Vec3 frame_deriv = (cone.w().d1(s + h).cross(cone.w().value(s + h)) -
                              cone.w().d1(s - h).cross(cone.w().value(s - h))) /
                             (2 * h);
    CHECK((frame_deriv + kg * dw).norm() <= 1e-6);
  }
}

TEST_CASE("conical system reproduces the scaled pointwise residual") {
  // u |w'| (<motion, N> - H) = u^2 r1 + u r2 - r3
  Rng rng(605);
  std::uniform_real_distribution<double> us(-2.0, 2.0);
  std::uniform_real_distribution<double> uu(0.4, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const RuledSurface cone = random_conical(rng);
    const MotionGenerators gens = random_generators(rng, trial % 2 ? Axis::Z : Axis::X);
    const double s = us(rng);
    const double u = (trial % 3 ? 1 : -1) * uu(rng);
    const ConicalResiduals r = conical_residual_system(cone, gens, s);
    const double r_pt = pointwise_residual(surface_sample(cone, s, u), gens);
    const double lhs = u * cone.w().d1(s).norm() * r_pt;
    const double rhs = u * u * r.r1 + u * r.r2 - r.r3;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("transverse system reproduces the scaled pointwise residual") {
  // for unit rulings, 2 sqrt(|beta'|^2 - <w,beta'>^2) (<motion,N> - H)
  //   = r_ode - 2 u r_alg
  Rng rng(606);
  std::uniform_real_distribution<double> us(-1.5, 1.5);
  std::uniform_real_distribution<double> uu(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    MotionGenerators gens = random_generators(rng, Axis::X);
    const double a1 = 0.3 * us(rng), w1 = 0.8 + 0.3 * us(rng);
    const PlaneCurve beta{
        ScalarCurve([a1, w1](double s) { return s + a1 * std::sin(w1 * s); },
                    [a1, w1](double s) { return 1 + a1 * w1 * std::cos(w1 * s); },
                    [a1, w1](double s) { return -a1 * w1 * w1 * std::sin(w1 * s); }),
        ScalarCurve([a1, w1](double s) { return 0.4 * s + a1 * std::cos(w1 * s); },
                    [a1, w1](double s) { return 0.4 - a1 * w1 * std::sin(w1 * s); },
                    [a1, w1](double s) { return -a1 * w1 * w1 * std::cos(w1 * s); })};
    Vec3 w(0.8, 0.3 * us(rng), 0.3 * us(rng));
    w.normalize();
    const double s = us(rng), u = uu(rng);
    const auto r = cylindrical_residuals_transverse(beta, w, gens, s);

    SpaceCurve directrix(
        [&beta](double t) { return Vec3(0, beta.x1.value(t), beta.x2.value(t)); },
        [&beta](double t) { return Vec3(0, beta.x1.d1(t), beta.x2.d1(t)); },
        [&beta](double t) { return Vec3(0, beta.x1.d2(t), beta.x2.d2(t)); });
    const RuledSurface surf = RuledSurface::cylindrical(std::move(directrix), w);
    const double r_pt = pointwise_residual(surface_sample(surf, s, u), gens);

    const Vec3 db(0, beta.x1.d1(s), beta.x2.d1(s));
    const double D = db.squaredNorm() - db.dot(w) * db.dot(w);
    const double lhs = 2.0 * std::sqrt(D) * r_pt;
    const double rhs = r.r_ode - 2.0 * u * r.r_alg;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("bisection recovers the shrinker dilation rate of a cylinder") {
  for (double r : {0.5, 1.0, 2.0}) {
    const RevolutionSurface cyl = make_cylinder(r);
    auto f = [&](double c) {
      MotionGenerators g;
      g.c = c;
      return revolution_soliton_residual(cyl, 0.0, g);
    };
    const double c_star = bisect_root(f, -40.0, 0.0);
    CHECK(c_star == doctest::Approx(-1.0 / (2.0 * r * r)).epsilon(1e-10));
  }
}
