#include "mcfsol/selftest.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "mcfsol/fd_oracle.hpp"
#include "mcfsol/flow_check.hpp"
#include "mcfsol/io.hpp"
#include "mcfsol/random_surfaces.hpp"

namespace mcfsol {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool pass = true;
  double worst = 0;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
  void track(double v) { worst = std::max(worst, std::abs(v)); }
};

bool close(double a, double b, double rel, double abs_floor) {
  return std::abs(a - b) <= abs_floor + rel * std::max(std::abs(a), std::abs(b));
}

RuledSurface acceptance_helicoid(double h) {
  return RuledSurface::noncylindrical(
      SpaceCurve([h](double s) { return Vec3(0, 0, h * s); },
                 [h](double) { return Vec3(0, 0, h); },
                 [](double) { return Vec3::Zero(); }),
      SpaceCurve([](double s) { return Vec3(std::cos(s), std::sin(s), 0); },
                 [](double s) { return Vec3(-std::sin(s), std::cos(s), 0); },
                 [](double s) { return Vec3(-std::cos(s), -std::sin(s), 0); }));
}

// 1. helicoid, catenoid, plane give |H| <= 1e-12 on a 50 x 20 grid in < 1 s
CriterionResult criterion_minimal_surfaces() {
  CriterionResult res{1, "minimal-surface zeros", false, "", 0};
  const auto t0 = Clock::now();
  Check chk;

  const RuledSurface heli = acceptance_helicoid(1.3);
  const RevolutionSurface catenoid(
      ScalarCurve([](double s) { return std::cosh(s); },
                  [](double s) { return std::sinh(s); },
                  [](double s) { return std::cosh(s); }),
      ScalarCurve::identity());
  const RuledSurface plane = RuledSurface::cylindrical(
      SpaceCurve([](double s) { return Vec3(0, s, 0); },
                 [](double) { return Vec3(0, 1, 0); },
                 [](double) { return Vec3::Zero(); }),
      Vec3(1, 0, 0));

  for (int i = 0; i < 50; ++i) {
    const double s = -2.0 + 4.0 * i / 49.0;
    for (int j = 0; j < 20; ++j) {
      const double u = -2.0 + 4.0 * j / 19.0;
      chk.track(ruled_mean_curvature(heli, s, u));
      chk.track(revolution_mean_curvature(catenoid, s));
      chk.track(cylindrical_mean_curvature(plane, s));
    }
  }
  chk.expect(chk.worst <= 1e-12, "max |H| above 1e-12");
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  chk.expect(res.seconds < 1.0, "runtime above 1 s");
  res.pass = chk.pass;
  std::ostringstream os;
  os << "max |H| = " << chk.worst << " across three families";
  if (!chk.pass) os << "; " << chk.detail.str();
  res.detail = os.str();
  return res;
}

// 2. specialized H/K match the finite-difference fundamental-form oracle on
//    >= 100 random admissible inputs per family within 1e-5 relative
//    (1e-8 absolute near zero), in < 10 s total
CriterionResult criterion_oracle_equivalence(unsigned long seed) {
  CriterionResult res{2, "oracle equivalence", false, "", 0};
  const auto t0 = Clock::now();
  Check chk;
  Rng rng(seed);
  std::uniform_real_distribution<double> us(-2.0, 2.0);
  std::uniform_real_distribution<double> uu(0.4, 2.0);
  int count = 0;

  for (int trial = 0; trial < 100; ++trial) {
    const double sign_u = trial % 2 ? 1.0 : -1.0;
    {
      const RuledSurface surf = random_noncylindrical(rng);
      const double s = us(rng), u = sign_u * uu(rng);
      const auto ff = fd_fundamental_forms(
          [&](double a, double b) { return surf.point(a, b); }, s, u);
      const double orient = ff.N.dot(ruled_normal(surf, s, u)) > 0 ? 1.0 : -1.0;
      chk.expect(close(ruled_mean_curvature(surf, s, u), orient * ff.H, 1e-5, 1e-8),
                 "ruled H mismatch");
      chk.expect(close(ruled_gauss_curvature(surf, s, u), ff.K, 1e-5, 1e-8),
                 "ruled K mismatch");
      ++count;
    }
    {
      const RevolutionSurface surf = random_revolution(rng);
      const double s = us(rng), u = us(rng);
      const auto ff = fd_fundamental_forms(
          [&](double a, double b) { return surf.point(a, b); }, s, u);
      const double orient = ff.N.dot(revolution_normal(surf, s, u)) > 0 ? 1.0 : -1.0;
      chk.expect(close(revolution_mean_curvature(surf, s), orient * ff.H, 1e-5, 1e-8),
                 "revolution H mismatch");
      chk.expect(close(revolution_gauss_curvature(surf, s), ff.K, 1e-5, 1e-8),
                 "revolution K mismatch");
      ++count;
    }
    {
      const RuledSurface surf = random_cylindrical(rng);
      const double s = us(rng), u = us(rng);
      const auto ff = fd_fundamental_forms(
          [&](double a, double b) { return surf.point(a, b); }, s, u);
      const double orient = ff.N.dot(cylindrical_normal(surf, s)) > 0 ? 1.0 : -1.0;
      chk.expect(close(cylindrical_mean_curvature(surf, s), orient * ff.H, 1e-5, 1e-8),
                 "cylindrical H mismatch");
      chk.expect(std::abs(ff.K) <= 1e-8, "cylindrical K not flat");
      ++count;
    }
    {
      const RuledSurface surf = random_conical(rng);
      const double s = us(rng), u = sign_u * uu(rng);
      const auto ff = fd_fundamental_forms(
          [&](double a, double b) { return surf.point(a, b); }, s, u);
      const double orient = ff.N.dot(conical_normal(surf, s)) > 0 ? 1.0 : -1.0;
      chk.expect(close(conical_mean_curvature(surf, s, u), orient * ff.H, 1e-5, 1e-8),
                 "conical H mismatch");
      chk.expect(std::abs(ff.K) <= 1e-8, "conical K not flat");
      ++count;
    }
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  chk.expect(res.seconds < 10.0, "runtime above 10 s");
  res.pass = chk.pass;
  std::ostringstream os;
  os << count << " random surfaces checked against the FD oracle";
  if (!chk.pass) os << "; " << chk.detail.str();
  res.detail = os.str();
  return res;
}

// 3. shrinking cylinder: generating-curve residual <= 1e-12 for r in
//    {0.5, 1, 2}; flow fit sigma(t) matches sqrt(1-t) within 5e-3 to t = 0.3
CriterionResult criterion_shrinking_cylinder() {
  CriterionResult res{3, "shrinking cylinder", false, "", 0};
  const auto t0 = Clock::now();
  Check chk;

  for (double r : {0.5, 1.0, 2.0}) {
    const RevolutionSurface cyl(ScalarCurve::constant(r), ScalarCurve::identity());
    MotionGenerators g;
    g.c = -1.0 / (2.0 * r * r);
    for (int i = 0; i < 50; ++i) {
      const double s = 5.0 * i / 49.0;
      chk.track(revolution_soliton_residual(cyl, s, g));
    }
  }
  chk.expect(chk.worst <= 1e-12, "generating-curve residual above 1e-12");

  // r = 1 cylinder under the flow: the radius law is r(t)^2 = 1 - t
  const SampledCurve profile = line_profile(1.0, 0.0, 1.0, 41);
  FlowFamily fam;
  fam.kind = FlowFamilyKind::Revolution;
  FlowConfig fc;
  fc.dt = 1e-4;
  fc.n_steps = 3000;
  fc.snapshot_every = 500;
  fc.resample_every = 0;
  const FlowResult flow = evolve_profile(profile, fam, fc);
  double worst_sigma = 0;
  for (size_t i = 0; i < flow.snapshots.size(); ++i) {
    const FitResult fit = fit_homothety(flow.snapshots[i], profile, Axis::Z);
    worst_sigma = std::max(worst_sigma,
                           std::abs(fit.motion.sigma - std::sqrt(1.0 - flow.times[i])));
  }
  chk.expect(worst_sigma <= 5e-3, "fitted sigma deviates from sqrt(1-t)");

  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = chk.pass;
  std::ostringstream os;
  os << "residual max = " << chk.worst << ", |sigma - sqrt(1-t)| max = " << worst_sigma;
  if (!chk.pass) os << "; " << chk.detail.str();
  res.detail = os.str();
  return res;
}

// 4. grim reaper: profile solves -q'' = 1 + (3/4) q'^2 to 1e-10 on
//    s in [0.1, 1.7]; printed cylindrical residuals <= 1e-9; flow translation
//    fit residual <= 5e-3 at t = 0.1
CriterionResult criterion_grim_reaper() {
  CriterionResult res{4, "grim reaper", false, "", 0};
  const auto t0 = Clock::now();
  Check chk;

  const ExactSolution* entry = find_entry("grim-reaper");
  chk.expect(entry != nullptr, "catalog entry missing");
  if (!entry) {
    res.pass = false;
    res.detail = chk.detail.str();
    return res;
  }
  const auto& geom = std::get<CylindricalSolution>(entry->geometry);

  double worst_ode = 0;
  for (int i = 0; i < 50; ++i) {
    const double s = 0.1 + 1.6 * i / 49.0;
    const double dq = geom.q.d1(s), ddq = geom.q.d2(s);
    worst_ode = std::max(worst_ode, std::abs(-ddq - 1.0 - 0.75 * dq * dq));
  }
  chk.expect(worst_ode <= 1e-10, "closed form fails the profile equation");

  const VerifyOutcome vo = verify(*entry);
  chk.expect(vo.report.max_abs <= 1e-9, "printed cylindrical residual above 1e-9");

  // tilted-cylinder flow: translation along x shows up in the cross-section
  // plane as motion along (-y0/x0, -z0/x0) = (0, -1/2)
  SampledCurve profile = sampled_graph(geom.q, 1.5, 3.95, 160);
  profile = resample_arclength(profile, 160);
  FlowFamily fam;
  fam.kind = FlowFamilyKind::Cylindrical;
  fam.w = geom.w;
  FlowConfig fc;
  fc.dt = 1e-4;
  fc.n_steps = 1000;
  fc.resample_every = 25;
  const FlowResult flow = evolve_profile(profile, fam, fc);
  const FitResult fit =
      fit_homothety(flow.snapshots.back(), profile, Axis::X, Vec2(0, -1));
  chk.expect(fit.rms <= 5e-3, "translation fit residual above 5e-3");
  chk.expect(std::abs(fit.motion.sigma - 1.0) <= 0.05, "fitted dilation far from 1");

  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = chk.pass;
  std::ostringstream os;
  os << "ODE residual max = " << worst_ode << ", printed residual max = "
     << vo.report.max_abs << ", flow fit rms = " << fit.rms
     << " (sigma = " << fit.motion.sigma << ", zeta = " << fit.motion.zeta << ")";
  if (!chk.pass) os << "; " << chk.detail.str();
  res.detail = os.str();
  return res;
}

// 5. sol2 residual of the reduced translator equation <= 1e-12 on [0, 5]
CriterionResult criterion_sol2() {
  CriterionResult res{5, "sol2 exact translator", false, "", 0};
  const auto t0 = Clock::now();
  const ExactSolution* entry = find_entry("sol2");
  Check chk;
  chk.expect(entry != nullptr, "catalog entry missing");
  double max_abs = 0;
  if (entry) {
    const VerifyOutcome vo = verify(*entry);
    max_abs = vo.report.max_abs;
    chk.expect(max_abs <= 1e-12, "residual above 1e-12");
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = chk.pass;
  std::ostringstream os;
  os << "max residual = " << max_abs << " on s in [0,5]";
  if (!chk.pass) os << "; " << chk.detail.str();
  res.detail = os.str();
  return res;
}

// 6. sol1 adjudication report: reference self-residual <= 1e-10, both
//    variants tabulated, verdict present
CriterionResult criterion_sol1_adjudication(const std::string& out_dir) {
  CriterionResult res{6, "sol1 adjudication", false, "", 0};
  const auto t0 = Clock::now();
  Check chk;
  const Sol1Report rep = adjudicate_sol1();
  chk.expect(rep.reference_self_residual <= 1e-10,
             "reference self-residual above 1e-10");
  chk.expect(std::isfinite(rep.variant_full_exponent.sup_deviation_from_reference),
             "variant e^{3s/2} deviation missing");
  chk.expect(std::isfinite(rep.variant_half_exponent.sup_deviation_from_reference),
             "variant e^{3s/4} deviation missing");
  chk.expect(!rep.verdict.empty(), "verdict missing");
  write_text_file(out_dir + "/sol1-adjudication.json",
                  sol1_report_to_json(rep).dump(2) + "\n");
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = chk.pass;
  std::ostringstream os;
  os << "self-residual = " << rep.reference_self_residual << "; e^{3s/2} dev = "
     << rep.variant_full_exponent.sup_deviation_from_reference << ", e^{3s/4} dev = "
     << rep.variant_half_exponent.sup_deviation_from_reference;
  if (!chk.pass) os << "; " << chk.detail.str();
  res.detail = os.str();
  return res;
}

// 7. speed conservation <= 1e-7 over [0,10] for all presets; curvature
//    relation residual via finite differences <= 1e-6 at interior samples;
//    RK4 order ratio in [12, 20] on the catenoid germ
CriterionResult criterion_ode_invariants() {
  CriterionResult res{7, "profile ODE invariants", false, "", 0};
  const auto t0 = Clock::now();
  Check chk;
  double worst_speed = 0, worst_fd = 0;

  for (int n = 1; n <= 10; ++n) {
    IntegrationConfig cfg;
    cfg.s_max = 10.0;
    cfg.max_step = 5e-4;
    const SampledCurve curve = run_figure_preset(n, false, cfg);
    const FigurePreset preset = figure_preset(n);
    const auto& pts = curve.pts;
    const double h = pts.size() > 1 ? pts[1].s - pts[0].s : 1.0;
    const size_t last =
        curve.stop == StopReason::SingularStop ? pts.size() - 5 : pts.size();
    for (size_t i = 0; i < last; ++i) {
      if (pts[i].y <= 1e-6) continue;
      worst_speed = std::max(
          worst_speed, std::abs(pts[i].dy * pts[i].dy + pts[i].dz * pts[i].dz - 1.0));
    }
    // independent curvature check: 5-point differences of the tangent; the
    // 1/phi term makes the relation genuinely singular near the axis, so
    // samples with phi < 0.05 are outside its numerical domain
    for (size_t i = 2; i + 2 < last; ++i) {
      if (pts[i].y < 0.05) continue;
      const double spacing = pts[i + 1].s - pts[i].s;
      if (std::abs(spacing - h) > 1e-12) continue;
      auto d5 = [&](auto get) {
        return (-get(pts[i + 2]) + 8 * get(pts[i + 1]) - 8 * get(pts[i - 1]) +
                get(pts[i - 2])) /
               (12.0 * h);
      };
      const double ddy = d5([](const CurvePoint& p) { return p.dy; });
      const double ddz = d5([](const CurvePoint& p) { return p.dz; });
      const double kappa_fd = ddy * pts[i].dz - ddz * pts[i].dy;
      const double rhs = 2.0 * preset.c * (pts[i].y * pts[i].dz - pts[i].dy * pts[i].z) -
                         2.0 * preset.b * pts[i].dy + pts[i].dz / pts[i].y;
      worst_fd = std::max(worst_fd, std::abs(kappa_fd - rhs));
    }
  }
  chk.expect(worst_speed <= 1e-7, "speed drift above 1e-7");
  chk.expect(worst_fd <= 1e-6, "FD curvature-relation residual above 1e-6");

  auto endpoint_error = [](double step) {
    IntegrationConfig cfg;
    cfg.method = IntegrationMethod::Rk4Fixed;
    cfg.step = step;
    cfg.s_max = 2.0;
    const SampledCurve c = integrate_revolution_profile({0, 1, 0, 0, 1}, 0, 0, cfg);
    const auto& p = c.pts.back();
    return std::hypot(p.y - std::sqrt(5.0), p.z - std::asinh(2.0));
  };
  const double ratio = endpoint_error(0.05) / endpoint_error(0.025);
  chk.expect(ratio >= 12.0 && ratio <= 20.0, "RK4 order ratio out of [12,20]");

  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = chk.pass;
  std::ostringstream os;
  os << "speed drift max = " << worst_speed << ", FD residual max = " << worst_fd
     << ", RK4 ratio = " << ratio;
  if (!chk.pass) os << "; " << chk.detail.str();
  res.detail = os.str();
  return res;
}

// 8. quartic identity on 20 random noncylindrical (surface, gens, s)
CriterionResult criterion_quartic_identity(unsigned long seed) {
  CriterionResult res{8, "noncylindrical quartic identity", false, "", 0};
  const auto t0 = Clock::now();
  Check chk;
  Rng rng(seed + 1);
  std::uniform_real_distribution<double> us(-1.5, 1.5);
  double worst = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const RuledSurface surf = random_noncylindrical(rng);
    const MotionGenerators gens =
        random_generators(rng, trial % 2 ? Axis::Z : Axis::X);
    const double s = us(rng);
    const auto coeffs = noncylindrical_quartic(surf, gens, s);
    const double lambda = ruled_invariants(surf, s).lambda;
    for (double u : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
      const double r = pointwise_residual(surface_sample(surf, s, u), gens);
      const double scaled = 2.0 * std::pow(lambda * lambda + u * u, 1.5) * r;
      worst = std::max(worst, std::abs(evaluate_quartic(coeffs, u) - scaled));
    }
  }
  chk.expect(worst <= 1e-8, "quartic vs pointwise residual mismatch above 1e-8");
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = chk.pass;
  std::ostringstream os;
  os << "max |P(u) - 2(l^2+u^2)^{3/2} r| = " << worst;
  if (!chk.pass) os << "; " << chk.detail.str();
  res.detail = os.str();
  return res;
}

// 9. triviality properties: conical r3 = 0 forces H = 0 (exact), and the
//    forced slope relations of the cylindrical cases kill the curvature
CriterionResult criterion_triviality(unsigned long seed) {
  CriterionResult res{9, "triviality property tests", false, "", 0};
  const auto t0 = Clock::now();
  Check chk;
  Rng rng(seed + 2);
  std::uniform_real_distribution<double> us(-2.0, 2.0);
  std::uniform_real_distribution<double> uv(0.25, 0.65);

  // planar (great circle) cones: r3 is exactly zero and so is H
  for (int trial = 0; trial < 25; ++trial) {
    const double s = us(rng);
    SpaceCurve w([](double t) { return Vec3(std::cos(t), std::sin(t), 0); },
                 [](double t) { return Vec3(-std::sin(t), std::cos(t), 0); },
                 [](double t) { return Vec3(-std::cos(t), -std::sin(t), 0); });
    const RuledSurface cone = RuledSurface::conical(Vec3(0, 0, trial * 0.1), w);
    const auto r = conical_residual_system(cone, random_generators(rng, Axis::Z), s);
    chk.expect(r.r3 == 0.0, "planar cone r3 not exactly 0");
    chk.expect(conical_mean_curvature(cone, s, 1.3) == 0.0,
               "planar cone H not exactly 0");
  }
  // random cones: H and r3 share the numerator exactly
  for (int trial = 0; trial < 50; ++trial) {
    const RuledSurface cone = random_conical(rng);
    const double s = us(rng);
    const auto r = conical_residual_system(cone, random_generators(rng, Axis::X), s);
    const double u = 1.7;
    const double H = conical_mean_curvature(cone, s, u);
    const double dwn = cone.w().d1(s).norm();
    if (r.r3 == 0.0) chk.expect(H == 0.0, "r3 = 0 without H = 0");
    chk.expect(std::abs(H * u * dwn - r.r3) <= 1e-13 * std::max(1.0, std::abs(r.r3)),
               "H and r3 disagree beyond rounding");
  }

  // transverse case: a != 0, x0 z0 != 0 forces q' = -(y0/z0) h', zero curvature
  double worst_kappa = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const double y0 = uv(rng), z0 = uv(rng);
    const double slope = -y0 / z0;
    const double a1 = uv(rng), w1 = uv(rng) + 0.3;
    auto h = [a1, w1](double s) { return s + a1 * std::sin(w1 * s); };
    auto dh = [a1, w1](double s) { return 1 + a1 * w1 * std::cos(w1 * s); };
    auto ddh = [a1, w1](double s) { return -a1 * w1 * w1 * std::sin(w1 * s); };
    const double s = us(rng);
    const double dq = slope * dh(s), ddq = slope * ddh(s);
    (void)h;
    worst_kappa = std::max(worst_kappa, std::abs(ddh(s) * dq - ddq * dh(s)));
    const double x0 = std::sqrt(std::max(1e-12, 1.0 - y0 * y0 - z0 * z0));
    const double r_alg = 1.0 * x0 * (y0 * dh(s) + z0 * dq);
    chk.expect(std::abs(r_alg) <= 1e-10, "forced transverse slope leaves r_alg != 0");
  }
  // axial case: a != 0, x0 y0 != 0 forces q' = ((1-x0^2)/(x0 y0)) h'
  for (int trial = 0; trial < 50; ++trial) {
    const double x0 = uv(rng), y0 = uv(rng);
    const double slope = (1.0 - x0 * x0) / (x0 * y0);
    const double a1 = uv(rng), w1 = uv(rng) + 0.3;
    auto dh = [a1, w1](double s) { return 1 + a1 * w1 * std::cos(w1 * s); };
    auto ddh = [a1, w1](double s) { return -a1 * w1 * w1 * std::sin(w1 * s); };
    const double s = us(rng);
    const double dq = slope * dh(s), ddq = slope * ddh(s);
    worst_kappa = std::max(worst_kappa, std::abs(ddh(s) * dq - ddq * dh(s)));
    const double r_alg = 1.0 * ((1.0 - x0 * x0) * dh(s) - x0 * y0 * dq);
    chk.expect(std::abs(r_alg) <= 1e-10, "forced axial slope leaves r_alg != 0");
  }
  chk.expect(worst_kappa <= 1e-10, "forced slope relations leave curvature");

  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = chk.pass;
  std::ostringstream os;
  os << "curvature numerator max = " << worst_kappa
     << " across 100 draws; conical implication exact";
  if (!chk.pass) os << "; " << chk.detail.str();
  res.detail = os.str();
  return res;
}

SampledCurve figure_curve_both_directions(int n) {
  IntegrationConfig fwd;
  fwd.s_max = 5.0;
  const SampledCurve forward = run_figure_preset(n, false, fwd);
  IntegrationConfig bwd = fwd;
  bwd.s_max = -5.0;
  const SampledCurve backward = run_figure_preset(n, false, bwd);

  SampledCurve merged;
  merged.meta = forward.meta;
  merged.stop = forward.stop;
  for (size_t i = backward.pts.size(); i-- > 1;) merged.pts.push_back(backward.pts[i]);
  for (const auto& p : forward.pts) merged.pts.push_back(p);
  return merged;
}

// 10. figures 1..10 integrate, emit CSV + SVG, and classify per the caption
//     labels, all in < 30 s
CriterionResult criterion_figures(const std::string& out_dir) {
  CriterionResult res{10, "figure reproduction", false, "", 0};
  const auto t0 = Clock::now();
  Check chk;
  // caption labels, derived from the published (b, c) pairs
  const std::array<std::string, 10> captions = {
      "translating",           "translating+expanding", "translating+shrinking",
      "translating+shrinking", "shrinking",             "expanding",
      "translating+shrinking", "translating+shrinking", "shrinking",
      "shrinking"};
  double worst_res = 0;
  for (int n = 1; n <= 10; ++n) {
    const FigurePreset preset = figure_preset(n);
    chk.expect(classify_motion(preset.b, preset.c) == captions[n - 1],
               "figure " + std::to_string(n) + " classification mismatch");
    const SampledCurve curve = figure_curve_both_directions(n);
    chk.expect(curve.pts.size() > 100, "figure " + std::to_string(n) + " too short");
    for (const auto& p : curve.pts)
      if (p.y > 1e-3) worst_res = std::max(worst_res, std::abs(p.residual));
    write_text_file(out_dir + "/fig" + std::to_string(n) + ".csv",
                    curve_to_csv(curve));
    write_text_file(out_dir + "/fig" + std::to_string(n) + ".svg",
                    curve_to_svg(curve));
  }
  chk.expect(worst_res <= 1e-6, "per-sample residual above 1e-6");
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  chk.expect(res.seconds < 30.0, "runtime above 30 s");
  res.pass = chk.pass;
  std::ostringstream os;
  os << "10 figures emitted, residual max = " << worst_res << ", "
     << res.seconds << " s";
  if (!chk.pass) os << "; " << chk.detail.str();
  res.detail = os.str();
  return res;
}

void emit_deterministic_artifacts(const std::string& dir) {
  for (int n = 1; n <= 10; ++n) {
    const SampledCurve curve = figure_curve_both_directions(n);
    write_text_file(dir + "/fig" + std::to_string(n) + ".csv", curve_to_csv(curve));
    write_text_file(dir + "/fig" + std::to_string(n) + ".svg", curve_to_svg(curve));
  }
  Json all = Json::array();
  for (const auto& outcome : verify_all()) all.push_back(verify_outcome_to_json(outcome));
  write_text_file(dir + "/verify.json", all.dump(2) + "\n");
  write_text_file(dir + "/sol1-adjudication.json",
                  sol1_report_to_json(adjudicate_sol1()).dump(2) + "\n");
}

bool files_identical(const std::filesystem::path& a, const std::filesystem::path& b) {
  std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
  if (!fa || !fb) return false;
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  return sa.str() == sb.str();
}

// 11. repeated emission produces byte-identical CSV/JSON (and SVG) artifacts
CriterionResult criterion_determinism(const std::string& out_dir) {
  CriterionResult res{11, "determinism", false, "", 0};
  const auto t0 = Clock::now();
  Check chk;
  const std::string a = out_dir + "/det-a", b = out_dir + "/det-b";
  emit_deterministic_artifacts(a);
  emit_deterministic_artifacts(b);
  int compared = 0;
  for (const auto& entry : std::filesystem::directory_iterator(a)) {
    const auto name = entry.path().filename();
    chk.expect(files_identical(entry.path(), std::filesystem::path(b) / name),
               "file differs: " + name.string());
    ++compared;
  }
  chk.expect(compared >= 22, "artifact set incomplete");
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.pass = chk.pass;
  std::ostringstream os;
  os << compared << " artifacts byte-compared";
  if (!chk.pass) os << "; " << chk.detail.str();
  res.detail = os.str();
  return res;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& out_dir,
                                            unsigned long seed) {
  std::filesystem::create_directories(out_dir);
  std::vector<CriterionResult> results;
  results.push_back(criterion_minimal_surfaces());
  results.push_back(criterion_oracle_equivalence(seed));
  results.push_back(criterion_shrinking_cylinder());
  results.push_back(criterion_grim_reaper());
  results.push_back(criterion_sol2());
  results.push_back(criterion_sol1_adjudication(out_dir));
  results.push_back(criterion_ode_invariants());
  results.push_back(criterion_quartic_identity(seed));
  results.push_back(criterion_triviality(seed));
  results.push_back(criterion_figures(out_dir));
  results.push_back(criterion_determinism(out_dir));

  Json summary = Json::array();
  for (const auto& r : results)
    summary.push_back({{"id", r.id},
                       {"name", r.name},
                       {"pass", r.pass},
                       {"detail", r.detail}});
  write_text_file(out_dir + "/acceptance-summary.json", summary.dump(2) + "\n");
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::string format_result_line(const CriterionResult& r) {
  std::ostringstream os;
  os << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.name
     << " (" << r.detail << ") [" << std::fixed << std::setprecision(2) << r.seconds
     << "s]";
  return os.str();
}

}  // namespace mcfsol
