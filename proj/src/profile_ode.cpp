#include "mcfsol/profile_ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

namespace mcfsol {

ProfileDerivs revolution_rhs(const ProfileState& st, double b, double c) {
  if (st.phi <= 0.0) throw SingularEvaluation("revolution rhs requires phi > 0");
  const double Q = 2.0 * c * (st.phi * st.dpsi - st.dphi * st.psi) - 2.0 * b * st.dphi +
                   st.dpsi / st.phi;
  ProfileDerivs d;
  d.dphi = st.dphi;
  d.dpsi = st.dpsi;
  d.ddphi = st.dpsi * Q;
  d.ddpsi = -st.dphi * Q;
  return d;
}

double revolution_soliton_residual(const ProfileState& st, double b, double c) {
  const ProfileDerivs d = revolution_rhs(st, b, c);
  return revolution_soliton_residual(st.phi, st.psi, st.dphi, st.dpsi, d.ddphi,
                                     d.ddpsi, b, c);
}

const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::ReachedEnd: return "reached-end";
    case StopReason::SingularStop: return "singular-stop";
    case StopReason::StepLimit: return "step-limit";
    case StopReason::DenominatorBlowup: return "denominator-blowup";
  }
  return "unknown";
}

double SampledCurve::total_length() const {
  double len = 0;
  for (size_t i = 1; i < pts.size(); ++i)
    len += std::hypot(pts[i].y - pts[i - 1].y, pts[i].z - pts[i - 1].z);
  return len;
}

double SampledCurve::max_abs_residual() const {
  double m = 0;
  for (const auto& p : pts) m = std::max(m, std::abs(p.residual));
  return m;
}

namespace {

// Dormand-Prince 5(4) pair.
template <size_t N>
struct DopriStep {
  std::array<double, N> y5;   // 5th-order solution
  double err = 0;             // scaled error norm
};

template <size_t N>
using Rhs = std::function<std::array<double, N>(double, const std::array<double, N>&)>;

template <size_t N>
DopriStep<N> dopri_step(const Rhs<N>& f, double s, const std::array<double, N>& y,
                        double h, double rtol, double atol) {
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

  auto axpy = [&](std::initializer_list<std::pair<double, const std::array<double, N>*>>
                      terms) {
    std::array<double, N> r = y;
    for (const auto& [w, k] : terms)
      for (size_t i = 0; i < N; ++i) r[i] += h * w * (*k)[i];
    return r;
  };

  const auto k1 = f(s, y);
  const auto k2 = f(s + c2 * h, axpy({{a21, &k1}}));
  const auto k3 = f(s + c3 * h, axpy({{a31, &k1}, {a32, &k2}}));
  const auto k4 = f(s + c4 * h, axpy({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
  const auto k5 = f(s + c5 * h, axpy({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
  const auto k6 = f(s + h, axpy({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4},
                                 {a65, &k5}}));

  DopriStep<N> out;
  for (size_t i = 0; i < N; ++i)
    out.y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                            b6 * k6[i]);
  const auto k7 = f(s + h, out.y5);

  double errsum = 0;
  for (size_t i = 0; i < N; ++i) {
    const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                          e6 * k6[i] + e7 * k7[i]);
    const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(out.y5[i]));
    errsum += (e / sc) * (e / sc);
  }
  out.err = std::sqrt(errsum / N);
  return out;
}

template <size_t N>
std::array<double, N> rk4_step(const Rhs<N>& f, double s, const std::array<double, N>& y,
                               double h) {
  const auto k1 = f(s, y);
  std::array<double, N> t;
  for (size_t i = 0; i < N; ++i) t[i] = y[i] + 0.5 * h * k1[i];
  const auto k2 = f(s + 0.5 * h, t);
  for (size_t i = 0; i < N; ++i) t[i] = y[i] + 0.5 * h * k2[i];
  const auto k3 = f(s + 0.5 * h, t);
  for (size_t i = 0; i < N; ++i) t[i] = y[i] + h * k3[i];
  const auto k4 = f(s + h, t);
  std::array<double, N> out;
  for (size_t i = 0; i < N; ++i)
    out[i] = y[i] + h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return out;
}

// Drives the state to each multiple of cfg.max_step so output samples are
// uniform. stop_event returns true when integration must halt; on a flagged
// step the crossing is located by bisecting the step size.
template <size_t N>
struct DenseResult {
  std::vector<std::pair<double, std::array<double, N>>> samples;
  StopReason stop = StopReason::ReachedEnd;
};

template <size_t N>
DenseResult<N> integrate_dense(const Rhs<N>& f, double s0,
                               const std::array<double, N>& y0,
                               const IntegrationConfig& cfg,
                               const std::function<bool(const std::array<double, N>&)>&
                                   stop_event) {
  DenseResult<N> out;
  const double dir = cfg.s_max >= s0 ? 1.0 : -1.0;
  const double span = std::abs(cfg.s_max - s0);

  double s = s0;
  std::array<double, N> y = y0;
  out.samples.emplace_back(s, y);

  long steps = 0;
  double h = dir * std::min(cfg.max_step, span);

  if (cfg.method == IntegrationMethod::Rk4Fixed) {
    const double hs = dir * cfg.step;
    const long n = std::lround(span / cfg.step);
    for (long k = 0; k < n; ++k) {
      y = rk4_step(f, s, y, hs);
      s = s0 + (k + 1) * hs;
      out.samples.emplace_back(s, y);
      if (stop_event(y)) {
        out.stop = StopReason::SingularStop;
        return out;
      }
      if (++steps > cfg.max_steps) {
        out.stop = StopReason::StepLimit;
        return out;
      }
    }
    return out;
  }

  const long n_targets = std::max(1L, std::lround(span / cfg.max_step));
  const double emit = span / n_targets;

  for (long k = 1; k <= n_targets; ++k) {
    const double target = s0 + dir * emit * k;
    while (dir * (target - s) > 1e-14 * std::max(1.0, std::abs(target))) {
      double hstep = dir * std::min(std::abs(h), std::abs(target - s));
      DopriStep<N> st = dopri_step(f, s, y, hstep, cfg.rtol, cfg.atol);
      if (++steps > cfg.max_steps) {
        out.samples.emplace_back(s, y);
        out.stop = StopReason::StepLimit;
        return out;
      }
      if (st.err > 1.0) {
        h = hstep * std::max(0.2, 0.9 * std::pow(st.err, -0.2));
        continue;
      }
      if (stop_event(st.y5)) {
        // Bisect the step fraction to land on the event.
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 60; ++it) {
          const double mid = 0.5 * (lo + hi);
          DopriStep<N> trial = dopri_step(f, s, y, hstep * mid, cfg.rtol, cfg.atol);
          if (stop_event(trial.y5))
            hi = mid;
          else
            lo = mid;
        }
        DopriStep<N> fin = dopri_step(f, s, y, hstep * hi, cfg.rtol, cfg.atol);
        out.samples.emplace_back(s + hstep * hi, fin.y5);
        out.stop = StopReason::SingularStop;
        return out;
      }
      s += hstep;
      y = st.y5;
      const double grow = st.err > 0 ? 0.9 * std::pow(st.err, -0.2) : 5.0;
      h = dir * std::min(cfg.max_step, std::abs(hstep) * std::clamp(grow, 0.2, 5.0));
    }
    s = target;  // absorb the O(1e-14) landing slack
    out.samples.emplace_back(s, y);
  }
  return out;
}

}  // namespace

SampledCurve integrate_revolution_profile(ProfileState init, double b, double c,
                                          const IntegrationConfig& cfg) {
  std::string meta = "family=revolution;b=" + std::to_string(b) +
                     ";c=" + std::to_string(c);
  const double speed0 = std::hypot(init.dphi, init.dpsi);
  if (speed0 <= 0.0) throw BadInitialSpeed("zero initial tangent");
  if (cfg.normalize_tangent) {
    if (std::abs(speed0 - 1.0) > kSpeedTol) {
      init.dphi /= speed0;
      init.dpsi /= speed0;
      meta += ";normalized_tangent=1;initial_speed=" + std::to_string(speed0);
    }
  } else if (!cfg.allow_any_speed && std::abs(speed0 - 1.0) > kSpeedTol) {
    throw BadInitialSpeed("initial tangent speed " + std::to_string(speed0) +
                          " is not unit (set normalize_tangent or allow_any_speed)");
  }
  if (init.phi <= cfg.phi_floor) throw SingularEvaluation("initial phi below floor");

  Rhs<4> rhs = [b, c](double s, const std::array<double, 4>& y) {
    ProfileState st{s, y[0], y[1], y[2], y[3]};
    const ProfileDerivs d = revolution_rhs(st, b, c);
    return std::array<double, 4>{d.dphi, d.dpsi, d.ddphi, d.ddpsi};
  };
  auto hit_floor = [&cfg](const std::array<double, 4>& y) {
    return y[0] <= cfg.phi_floor;
  };

  const auto dense = integrate_dense<4>(rhs, init.s, {init.phi, init.psi, init.dphi,
                                                      init.dpsi},
                                        cfg, hit_floor);

  SampledCurve curve;
  curve.stop = dense.stop;
  curve.meta = meta + ";stop=" + stop_reason_name(dense.stop);
  curve.pts.reserve(dense.samples.size());
  for (const auto& [s, y] : dense.samples) {
    CurvePoint p;
    p.s = s;
    p.y = y[0];
    p.z = y[1];
    p.dy = y[2];
    p.dz = y[3];
    if (y[0] > 0.0) {
      ProfileState st{s, y[0], y[1], y[2], y[3]};
      const ProfileDerivs d = revolution_rhs(st, b, c);
      const double speed2 = y[2] * y[2] + y[3] * y[3];
      p.kappa = (d.ddphi * y[3] - d.ddpsi * y[2]) / std::pow(speed2, 1.5);
      p.residual =
          revolution_soliton_residual(y[0], y[1], y[2], y[3], d.ddphi, d.ddpsi, b, c);
    }
    curve.pts.push_back(p);
  }
  return curve;
}

FigurePreset figure_preset(int n) {
  struct Row {
    double b, c, p0, q0, dp0, dq0;
  };
  static const std::array<Row, 10> table = {{
      {1, 0, 1, 0, std::sqrt(0.75), std::sqrt(0.25)},
      {1, 1, 1, 0, 1, 0},
      {1, -2, 1, 0, 1, 0},
      {1, -1, 1, 0, 1, 1},
      {0, -2, 1, 0, 0, 1},
      {0, 2, 1, 0, 0, 1},
      {1, -4, 1, 1, 1, 1},
      {1, -4, 0.5, 0.5, -1, 1},
      {0, -6, 1, 0, 0, 1},
      {0, -2, 1, 1, 0, 1},
  }};
  if (n < 1 || n > 10)
    throw UnknownFigure("figure number must be in 1..10, got " + std::to_string(n));
  const Row& t = table[n - 1];
  FigurePreset p;
  p.number = n;
  p.b = t.b;
  p.c = t.c;
  p.phi0 = t.p0;
  p.psi0 = t.q0;
  p.dphi0 = t.dp0;
  p.dpsi0 = t.dq0;
  p.label = classify_motion(p.b, p.c);
  return p;
}

std::string classify_motion(double b, double c) {
  std::string label;
  if (b != 0.0) label = "translating";
  if (c < 0.0) label += label.empty() ? "shrinking" : "+shrinking";
  if (c > 0.0) label += label.empty() ? "expanding" : "+expanding";
  if (label.empty()) label = "stationary";
  return label;
}

SampledCurve run_figure_preset(int n, bool literal, std::optional<IntegrationConfig> cfg) {
  const FigurePreset p = figure_preset(n);
  IntegrationConfig c = cfg.value_or(IntegrationConfig{});
  if (!cfg) c.s_max = 5.0;
  c.normalize_tangent = !literal;
  c.allow_any_speed = literal;

  ProfileState init;
  init.s = 0;
  init.phi = p.phi0;
  init.psi = p.psi0;
  init.dphi = p.dphi0;
  init.dpsi = p.dpsi0;

  SampledCurve curve = integrate_revolution_profile(init, p.b, p.c, c);
  curve.meta += ";figure=" + std::to_string(n) + ";label=" + p.label +
                (literal ? ";literal=1" : "");
  return curve;
}

SampledCurve integrate_cylindrical_graph(const GraphOde& ode, double s0, double q0,
                                         double dq0, const IntegrationConfig& cfg) {
  bool blew_up = false;
  auto accel = [&](double s, double q, double dq) -> double {
    switch (ode.kind) {
      case GraphOde::Kind::TranslatorReduced: {
        const double den = 1.0 + dq * dq - ode.y0 * ode.y0;
        if (std::abs(den) < 1e-8 || ode.x0 == 0.0) {
          blew_up = true;
          return 0.0;
        }
        return ode.y0 * dq * den / ode.x0;
      }
      case GraphOde::Kind::GrimReaper:
        return -(1.0 + 0.75 * dq * dq);
      case GraphOde::Kind::Custom: {
        const double x0 = ode.w.x(), y0 = ode.w.y(), z0 = ode.w.z();
        const double den = 1.0 + dq * dq - (y0 + z0 * dq) * (y0 + z0 * dq);
        if (std::abs(den) < 1e-8 || x0 == 0.0) {
          blew_up = true;
          return 0.0;
        }
        const double lhs = 2.0 * ode.gens.c * x0 * (s * dq - q) +
                           2.0 * ode.gens.b * (z0 - y0 * dq) -
                           2.0 * ode.gens.a * x0 * (q * dq + s);
        return -den * lhs / x0;
      }
    }
    return 0.0;
  };

  Rhs<2> rhs = [&](double s, const std::array<double, 2>& y) {
    return std::array<double, 2>{y[1], accel(s, y[0], y[1])};
  };
  auto stop = [&](const std::array<double, 2>&) { return blew_up; };

  const auto dense = integrate_dense<2>(rhs, s0, {q0, dq0}, cfg, stop);

  SampledCurve curve;
  curve.stop = blew_up ? StopReason::DenominatorBlowup : dense.stop;
  curve.meta = "family=cylindrical-graph;stop=" + std::string(stop_reason_name(curve.stop));
  for (const auto& [s, y] : dense.samples) {
    CurvePoint p;
    p.s = s;
    p.y = s;        // graph curve (s, q(s))
    p.z = y[0];
    p.dy = 1.0;
    p.dz = y[1];
    const double qpp = accel(s, y[0], y[1]);
    p.kappa = -qpp / std::pow(1.0 + y[1] * y[1], 1.5);
    p.residual = 0.0;  // the state satisfies the reduced equation by construction
    curve.pts.push_back(p);
  }
  return curve;
}

namespace {

Vec2 catmull_rom(const Vec2& p0, const Vec2& p1, const Vec2& p2, const Vec2& p3,
                 double t) {
  const double t2 = t * t, t3 = t2 * t;
  const Vec2 c0 = 2.0 * p1;
  const Vec2 c1 = p2 - p0;
  const Vec2 c2 = 2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3;
  const Vec2 c3 = -p0 + 3.0 * p1 - 3.0 * p2 + p3;
  return 0.5 * (c0 + c1 * t + c2 * t2 + c3 * t3);
}

}  // namespace

void refresh_discrete_frame(SampledCurve& curve) {
  const size_t n = curve.pts.size();
  if (n < 3) return;
  auto P = [&](size_t i) { return Vec2(curve.pts[i].y, curve.pts[i].z); };
  for (size_t i = 0; i < n; ++i) {
    const size_t j = std::min(std::max<size_t>(i, 1), n - 2);
    const Vec2 a = P(j - 1), b = P(j), c = P(j + 1);
    const Vec2 ab = b - a, bc = c - b, ac = c - a;
    const double cross = ab.x() * bc.y() - ab.y() * bc.x();
    const double denom = ab.norm() * bc.norm() * ac.norm();
    // circumcircle curvature, signed to match kappa = (y''z' - z''y')/|tau|^3
    curve.pts[i].kappa = denom > 0 ? -2.0 * cross / denom : 0.0;
    const Vec2 t = ac / std::max(ac.norm(), 1e-300);
    curve.pts[i].dy = t.x();
    curve.pts[i].dz = t.y();
  }
  // endpoints: copy the adjacent interior estimate (one-sided stencil)
  curve.pts[0].kappa = curve.pts[1].kappa;
  curve.pts[n - 1].kappa = curve.pts[n - 2].kappa;
}

namespace {

Vec2 catmull_rom_deriv(const Vec2& p0, const Vec2& p1, const Vec2& p2, const Vec2& p3,
                       double t) {
  const Vec2 c1 = p2 - p0;
  const Vec2 c2 = 2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3;
  const Vec2 c3 = -p0 + 3.0 * p1 - 3.0 * p2 + p3;
  return 0.5 * (c1 + 2.0 * t * c2 + 3.0 * t * t * c3);
}

// 4-point Gauss-Legendre arc length of one interpolant piece over [0, t1].
double piece_arclength(const Vec2& p0, const Vec2& p1, const Vec2& p2, const Vec2& p3,
                       double t1) {
  static const double xg[4] = {-0.8611363115940526, -0.3399810435848563,
                               0.3399810435848563, 0.8611363115940526};
  static const double wg[4] = {0.3478548451374538, 0.6521451548625461,
                               0.6521451548625461, 0.3478548451374538};
  double len = 0;
  for (int i = 0; i < 4; ++i) {
    const double t = 0.5 * t1 * (1.0 + xg[i]);
    len += wg[i] * catmull_rom_deriv(p0, p1, p2, p3, t).norm();
  }
  return 0.5 * t1 * len;
}

}  // namespace

SampledCurve resample_arclength(const SampledCurve& curve, int n) {
  const size_t m = curve.pts.size();
  if (m < 2 || n < 2) return curve;

  std::vector<double> cum(m, 0.0);
  for (size_t i = 1; i < m; ++i)
    cum[i] = cum[i - 1] +
             std::hypot(curve.pts[i].y - curve.pts[i - 1].y,
                        curve.pts[i].z - curve.pts[i - 1].z);
  const double total = cum.back();

  auto P = [&](long i) {
    const long j = std::clamp<long>(i, 0, static_cast<long>(m) - 1);
    return Vec2(curve.pts[j].y, curve.pts[j].z);
  };
  auto ghost = [&](long i) -> Vec2 {  // mirror extrapolation past the ends
    if (i < 0) return 2.0 * P(0) - P(1);
    if (i >= static_cast<long>(m)) return 2.0 * P(m - 1) - P(m - 2);
    return P(i);
  };
  auto piece = [&](size_t seg, double t, Vec2* point, double* partial_len) {
    const Vec2 a = ghost(static_cast<long>(seg) - 1), b = ghost(seg),
               c = ghost(seg + 1), d = ghost(seg + 2);
    if (point) *point = catmull_rom(a, b, c, d, t);
    if (partial_len) *partial_len = piece_arclength(a, b, c, d, t);
  };

  SampledCurve out;
  out.stop = curve.stop;
  out.meta = curve.meta + ";resampled=" + std::to_string(n);
  out.pts.resize(n);

  // cumulative interpolant arc length up to the start of each input piece
  std::vector<double> arc(m, 0.0);
  for (size_t i = 0; i + 1 < m; ++i) {
    double full = 0;
    piece(i, 1.0, nullptr, &full);
    arc[i + 1] = arc[i] + full;
  }

  size_t seg = 0;
  for (int k = 0; k < n; ++k) {
    const double target = total * k / (n - 1);
    while (seg + 2 < m && cum[seg + 1] < target) ++seg;
    const double seg_len = cum[seg + 1] - cum[seg];
    const double t = seg_len > 0 ? (target - cum[seg]) / seg_len : 0.0;
    Vec2 p;
    double partial;
    piece(seg, t, &p, &partial);
    out.pts[k].s = arc[seg] + partial;  // arc length along the interpolant
    out.pts[k].y = p.x();
    out.pts[k].z = p.y();
  }
  refresh_discrete_frame(out);
  return out;
}

}  // namespace mcfsol
