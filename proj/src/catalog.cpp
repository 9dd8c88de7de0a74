#include "mcfsol/catalog.hpp"

#include <cmath>
#include <sstream>

namespace mcfsol {

const char* family_name(Family f) {
  switch (f) {
    case Family::Revolution: return "revolution";
    case Family::Cylindrical: return "cylindrical";
    case Family::Ruled: return "ruled";
    case Family::Conical: return "conical";
  }
  return "unknown";
}

namespace {

constexpr double kRoot3 = 1.7320508075688772;

double grim_g(double s) {
  return std::sin(kRoot3 / 2 * s) - std::cos(kRoot3 / 2 * s);
}
double grim_gp(double s) {
  return kRoot3 / 2 * (std::cos(kRoot3 / 2 * s) + std::sin(kRoot3 / 2 * s));
}

ScalarCurve grim_profile() {
  return ScalarCurve(
      [](double s) { return 2.0 / 3.0 * std::log(0.75 * grim_g(s) * grim_g(s)); },
      [](double s) { return 4.0 / 3.0 * grim_gp(s) / grim_g(s); },
      [](double s) {
        const double t = grim_gp(s) / grim_g(s);
        return -1.0 - 4.0 / 3.0 * t * t;
      });
}

// q = (4 sqrt(3)/3) atan( sqrt(e^{k s} - 4) / 2 ) with hand derivatives:
// q' = (4 sqrt(3) k / 3) / v and q'' = -(2 sqrt(3) k^2 / 3) e^{ks} / v^3,
// where v = sqrt(e^{ks} - 4); defined for s > ln(4)/k.
ScalarCurve sol1_profile(double k) {
  auto v = [k](double s) { return std::sqrt(std::exp(k * s) - 4.0); };
  return ScalarCurve(
      [v](double s) { return 4.0 * kRoot3 / 3.0 * std::atan(0.5 * v(s)); },
      [v, k](double s) { return 4.0 * kRoot3 * k / 3.0 / v(s); },
      [v, k](double s) {
        const double vv = v(s);
        return -2.0 * kRoot3 * k * k / 3.0 * std::exp(k * s) / (vv * vv * vv);
      });
}

std::vector<ExactSolution> build_entries() {
  std::vector<ExactSolution> out;

  {
    ExactSolution e;
    e.name = "plane";
    e.family = Family::Cylindrical;
    e.geometry = CylindricalSolution{ScalarCurve::identity(), ScalarCurve::constant(0.0),
                                     Vec3(1, 0, 0), false};
    e.gens.axis = Axis::X;
    e.s_min = -2;
    e.s_max = 2;
    e.tolerance = 1e-12;
    e.note = "flat cylinder over a straight directrix; minimal, zero motion";
    out.push_back(std::move(e));
  }
  {
    ExactSolution e;
    e.name = "helicoid";
    e.family = Family::Ruled;
    e.geometry = RuledSolution{
        SpaceCurve([](double s) { return Vec3(0, 0, s); },
                   [](double) { return Vec3(0, 0, 1); },
                   [](double) { return Vec3::Zero(); }),
        SpaceCurve([](double s) { return Vec3(std::cos(s), std::sin(s), 0); },
                   [](double s) { return Vec3(-std::sin(s), std::cos(s), 0); },
                   [](double s) { return Vec3(-std::cos(s), -std::sin(s), 0); })};
    e.gens.axis = Axis::Z;
    e.s_min = -2;
    e.s_max = 2;
    e.u_min = -2;
    e.u_max = 2;
    e.tolerance = 1e-12;
    e.note = "pitch-1 helicoid; minimal, zero motion";
    out.push_back(std::move(e));
  }
  {
    ExactSolution e;
    e.name = "catenoid";
    e.family = Family::Revolution;
    e.geometry = RevolutionSolution{
        ScalarCurve([](double s) { return std::cosh(s); },
                    [](double s) { return std::sinh(s); },
                    [](double s) { return std::cosh(s); }),
        ScalarCurve::identity()};
    e.gens.axis = Axis::Z;
    e.s_min = -2;
    e.s_max = 2;
    e.tolerance = 1e-12;
    e.note = "minimal, zero motion";
    out.push_back(std::move(e));
  }
  {
    ExactSolution e;
    e.name = "cylinder";
    e.family = Family::Revolution;
    e.geometry =
        RevolutionSolution{ScalarCurve::constant(1.0), ScalarCurve::identity()};
    e.gens.axis = Axis::Z;
    e.gens.c = -0.5;  // forced by 2 c r + 1/r = 0 at r = 1
    e.s_min = 0;
    e.s_max = 5;
    e.tolerance = 1e-12;
    e.note = "self-shrinking cylinder, r = 1";
    out.push_back(std::move(e));
  }
  {
    ExactSolution e;
    e.name = "grim-reaper";
    e.family = Family::Cylindrical;
    e.geometry =
        CylindricalSolution{ScalarCurve::identity(), grim_profile(), Vec3(1, 0, 0.5),
                            /*unnormalized_w=*/true};
    e.gens.axis = Axis::X;
    e.gens.b = 1.0;
    e.s_min = 0.1;
    e.s_max = 1.7;
    e.singular_s = {M_PI / (2.0 * kRoot3)};  // log singularity of the profile
    e.tolerance = 1e-9;
    e.note = "translating; profile satisfies -q'' = 1 + (3/4) q'^2; the printed "
             "rulings are not unit (|w| = sqrt(5)/2)";
    out.push_back(std::move(e));
  }
  {
    ExactSolution e;
    e.name = "sol2";
    e.family = Family::Cylindrical;
    e.geometry = CylindricalSolution{
        ScalarCurve::identity(),
        ScalarCurve([](double s) { return std::sqrt(2.0 * s + 2.0); },
                    [](double s) { return 1.0 / std::sqrt(2.0 * s + 2.0); },
                    [](double s) { return -std::pow(2.0 * s + 2.0, -1.5); }),
        Vec3(-1, 1, 0), /*unnormalized_w=*/true};
    e.gens.axis = Axis::X;
    e.gens.b = 0.5;
    e.s_min = 0;
    e.s_max = 5;
    e.tolerance = 1e-12;
    e.note = "translating graph q = sqrt(2s+2), valid for s > -1";
    out.push_back(std::move(e));
  }
  for (int half : {0, 1}) {
    ExactSolution e;
    const double k = half ? 0.75 : 1.5;
    e.name = half ? "sol1-exp34" : "sol1-exp32";
    e.family = Family::Cylindrical;
    e.geometry = CylindricalSolution{ScalarCurve::identity(), sol1_profile(k),
                                     Vec3(-1, 0.5, 0), /*unnormalized_w=*/true};
    e.gens.axis = Axis::X;
    e.gens.b = 0.5;
    e.s_min = std::log(4.0) / k + 0.1;
    e.s_max = 3.0;
    e.tolerance = 1e-4;
    e.disputed = true;
    e.note = std::string("disputed printed variant with exponent ") +
             (half ? "3s/4" : "3s/2") + "; see the adjudication report";
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<ExactSolution>& catalog_entries() {
  static const std::vector<ExactSolution> entries = build_entries();
  return entries;
}

const ExactSolution* find_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return &e;
  return nullptr;
}

namespace {

std::vector<double> grid_points(const ExactSolution& e, int n) {
  std::vector<double> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double s = n > 1 ? e.s_min + (e.s_max - e.s_min) * i / (n - 1) : e.s_min;
    bool excluded = false;
    for (double sing : e.singular_s)
      if (std::abs(s - sing) < e.singular_radius) excluded = true;
    if (!excluded) pts.push_back(s);
  }
  return pts;
}

}  // namespace

VerifyOutcome verify(const ExactSolution& entry, int n_s, int n_u) {
  VerifyOutcome out;
  out.name = entry.name;
  out.disputed = entry.disputed;
  ResidualReport& rep = out.report;
  rep.grid = GridSpec{entry.s_min, entry.s_max, n_s, entry.u_min, entry.u_max, n_u};

  const std::vector<double> ss = grid_points(entry, n_s);

  if (const auto* rev = std::get_if<RevolutionSolution>(&entry.geometry)) {
    const RevolutionSurface surf(rev->phi, rev->psi);
    for (double s : ss) {
      ResidualSample smp;
      smp.s = s;
      double scale = 1;
      smp.value = revolution_soliton_residual(surf, s, entry.gens, &scale);
      smp.normalized = smp.value / scale;
      rep.add(smp);
    }
  } else if (const auto* cyl = std::get_if<CylindricalSolution>(&entry.geometry)) {
    const PlaneCurve beta{cyl->h, cyl->q};
    for (double s : ss) {
      const CylindricalResiduals r = cylindrical_residuals_transverse(
          beta, cyl->w, entry.gens, s, cyl->unnormalized_w);
      ResidualSample smp;
      smp.s = s;
      // both residuals must vanish; keep the worse of the two
      smp.value = std::abs(r.r_ode) >= std::abs(r.r_alg) ? r.r_ode : r.r_alg;
      smp.normalized = smp.value / r.scale;
      rep.add(smp);
    }
  } else if (const auto* ruled = std::get_if<RuledSolution>(&entry.geometry)) {
    const RuledSurface surf = RuledSurface::noncylindrical(ruled->beta, ruled->w);
    for (double s : ss) {
      for (int j = 0; j < n_u; ++j) {
        const double u =
            n_u > 1 ? entry.u_min + (entry.u_max - entry.u_min) * j / (n_u - 1)
                    : entry.u_min;
        ResidualSample smp;
        smp.s = s;
        smp.u = u;
        smp.value = pointwise_residual(surface_sample(surf, s, u), entry.gens);
        smp.normalized = smp.value / (1.0 + std::abs(smp.value));
        rep.add(smp);
      }
    }
  }
  rep.finalize();
  out.pass = rep.max_abs <= entry.tolerance;

  std::ostringstream os;
  os << "max_abs=" << rep.max_abs << " tol=" << entry.tolerance
     << (entry.disputed ? " [disputed]" : "");
  out.detail = os.str();
  return out;
}

std::vector<VerifyOutcome> verify_all(int n_s, int n_u) {
  std::vector<VerifyOutcome> out;
  for (const auto& e : catalog_entries()) out.push_back(verify(e, n_s, n_u));
  return out;
}

bool all_verified(const std::vector<VerifyOutcome>& outcomes) {
  for (const auto& o : outcomes)
    if (!o.disputed && !o.pass) return false;
  return true;
}

namespace {

double ode_rhs_sol1(double dq) { return -0.5 * dq * (0.75 + dq * dq); }

Sol1Variant adjudicate_variant(const std::string& name, double k) {
  Sol1Variant v;
  v.name = name;
  v.exponent_rate = k;
  v.s_lo = std::log(4.0) / k + 0.1;
  v.s_hi = 3.0;

  const ScalarCurve q = sol1_profile(k);

  const int n = 241;
  for (int i = 0; i < n; ++i) {
    const double s = v.s_lo + (v.s_hi - v.s_lo) * i / (n - 1);
    const double res = q.d2(s) - ode_rhs_sol1(q.d1(s));
    v.ode_sup_residual = std::max(v.ode_sup_residual, std::abs(res));
  }

  // reference trajectory started from the variant's own initial data;
  // (t1) with x0 = -1, y0 = 1/2 is exactly q'' = -(1/2) q' (3/4 + q'^2)
  GraphOde ode;
  ode.kind = GraphOde::Kind::TranslatorReduced;
  ode.x0 = -1.0;
  ode.y0 = 0.5;
  IntegrationConfig cfg;
  cfg.s_max = v.s_hi;
  cfg.max_step = 1e-3;
  const SampledCurve ref =
      integrate_cylindrical_graph(ode, v.s_lo, q.value(v.s_lo), q.d1(v.s_lo), cfg);
  for (const auto& p : ref.pts)
    v.sup_deviation_from_reference =
        std::max(v.sup_deviation_from_reference, std::abs(p.z - q.value(p.s)));

  v.solves_ode = v.sup_deviation_from_reference <= 1e-4 && v.ode_sup_residual <= 1e-4;
  return v;
}

// 5-point finite-difference check that the reference trajectory satisfies the
// reduced equation, measured past the steep launch window.
double reference_self_residual(double s_lo, double s_hi, const ScalarCurve& q0) {
  GraphOde ode;
  ode.kind = GraphOde::Kind::TranslatorReduced;
  ode.x0 = -1.0;
  ode.y0 = 0.5;
  IntegrationConfig cfg;
  cfg.s_max = s_hi;
  cfg.max_step = 5e-4;
  const SampledCurve ref =
      integrate_cylindrical_graph(ode, s_lo, q0.value(s_lo), q0.d1(s_lo), cfg);
  const auto& pts = ref.pts;
  if (pts.size() < 5) return 0.0;
  const double h = pts[1].s - pts[0].s;
  double sup = 0;
  for (size_t i = 2; i + 2 < pts.size(); ++i) {
    if (pts[i].s < s_lo + 0.3) continue;  // skip the steep launch
    const double ddq = (-pts[i + 2].dz + 8 * pts[i + 1].dz - 8 * pts[i - 1].dz +
                        pts[i - 2].dz) /
                       (12.0 * h);
    sup = std::max(sup, std::abs(ddq - ode_rhs_sol1(pts[i].dz)));
  }
  return sup;
}

}  // namespace

Sol1Report adjudicate_sol1() {
  Sol1Report rep;
  rep.variant_full_exponent = adjudicate_variant("exp-3s-over-2", 1.5);
  rep.variant_half_exponent = adjudicate_variant("exp-3s-over-4", 0.75);
  rep.reference_self_residual = reference_self_residual(
      rep.variant_half_exponent.s_lo, rep.variant_half_exponent.s_hi,
      sol1_profile(0.75));

  std::ostringstream os;
  const auto& a = rep.variant_full_exponent;
  const auto& b = rep.variant_half_exponent;
  if (b.solves_ode && !a.solves_ode) {
    os << "the displayed exponent e^{3s/4} satisfies the reduced translator "
          "equation (sup ODE residual "
       << b.ode_sup_residual << ", sup deviation " << b.sup_deviation_from_reference
       << "); the inline exponent e^{3s/2} does not (sup ODE residual "
       << a.ode_sup_residual << ", sup deviation " << a.sup_deviation_from_reference
       << ") -- the printed exponents are mutually inconsistent and only the "
          "3s/4 variant solves the equation";
  } else if (!b.solves_ode && !a.solves_ode) {
    os << "closed form as printed does not solve the reduced translator "
          "equation in either exponent variant; see the tabulated residuals";
  } else {
    os << "adjudication: e^{3s/2} solves=" << a.solves_ode
       << ", e^{3s/4} solves=" << b.solves_ode;
  }
  rep.verdict = os.str();
  return rep;
}

}  // namespace mcfsol
