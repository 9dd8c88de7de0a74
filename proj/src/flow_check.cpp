#include "mcfsol/flow_check.hpp"

#include <algorithm>
#include <cmath>

namespace mcfsol {

namespace {

double min_spacing(const SampledCurve& c) {
  double m = std::numeric_limits<double>::infinity();
  for (size_t i = 1; i < c.pts.size(); ++i)
    m = std::min(m, std::hypot(c.pts[i].y - c.pts[i - 1].y,
                               c.pts[i].z - c.pts[i - 1].z));
  return m;
}

// In-plane velocity of every sample under the induced surface flow.
// Derivatives along the curve use centered differences in the sample index
// (the curvature formulas are parameterization-covariant); the endpoints use
// one-sided stencils.
std::vector<Vec2> flow_velocity(const SampledCurve& c, const FlowFamily& fam,
                                double phi_floor, bool* singular) {
  const size_t n = c.pts.size();
  std::vector<Vec2> v(n, Vec2::Zero());
  auto P = [&](size_t i) { return Vec2(c.pts[i].y, c.pts[i].z); };

  auto d1 = [&](size_t i) -> Vec2 {
    if (i == 0) return -1.5 * P(0) + 2.0 * P(1) - 0.5 * P(2);
    if (i == n - 1) return 1.5 * P(n - 1) - 2.0 * P(n - 2) + 0.5 * P(n - 3);
    return 0.5 * (P(i + 1) - P(i - 1));
  };
  // endpoints keep the shifted 3-point stencil: first-order there, but
  // stable under explicit stepping; tests measure away from the boundary
  // layer it creates
  auto d2 = [&](size_t i) -> Vec2 {
    if (i == 0) return P(0) - 2.0 * P(1) + P(2);
    if (i == n - 1) return P(n - 1) - 2.0 * P(n - 2) + P(n - 3);
    return P(i + 1) - 2.0 * P(i) + P(i - 1);
  };

  for (size_t i = 0; i < n; ++i) {
    const Vec2 t = d1(i), a = d2(i);
    const double speed2 = t.squaredNorm();
    if (speed2 <= 0) continue;

    if (fam.kind == FlowFamilyKind::Revolution) {
      const double phi = c.pts[i].y;
      if (phi <= phi_floor) {
        *singular = true;
        return v;
      }
      // H = kappa/2 - psi'/(2 phi |tau|), normal eta = (psi', -phi')/|tau|
      const double speed = std::sqrt(speed2);
      const double kappa = (a.x() * t.y() - a.y() * t.x()) / (speed2 * speed);
      const double H = 0.5 * kappa - 0.5 * t.y() / (phi * speed);
      v[i] = H * Vec2(t.y(), -t.x()) / speed;
    } else {
      // cross-section of a cylinder with rulings w: 3D directrix (0, y, z)
      const Vec3 db(0, t.x(), t.y());
      const Vec3 ddb(0, a.x(), a.y());
      const Vec3 nvec = db.cross(fam.w);
      const double det = db.squaredNorm() * fam.w.squaredNorm() -
                         db.dot(fam.w) * db.dot(fam.w);
      if (det <= 0) continue;
      const Vec3 N = nvec / std::sqrt(det);
      const double H = fam.w.squaredNorm() * ddb.dot(nvec) / (2.0 * std::pow(det, 1.5));
      // slide along w so the section stays in the x = 0 plane
      const Vec3 v3 = H * (N - (N.x() / fam.w.x()) * fam.w);
      v[i] = Vec2(v3.y(), v3.z());
    }
  }
  return v;
}

}  // namespace

FlowResult evolve_profile(const SampledCurve& profile, const FlowFamily& family,
                          const FlowConfig& cfg) {
  if (profile.pts.size() < 5) throw DegenerateSurface("profile needs >= 5 samples");
  if (family.kind == FlowFamilyKind::Cylindrical && std::abs(family.w.x()) < 1e-9)
    throw DegenerateSurface("cylindrical flow requires w transverse to the profile plane");

  const double spacing = min_spacing(profile);
  if (cfg.dt > 0.4 * spacing * spacing)
    throw CflViolation("dt exceeds 0.4 * (min spacing)^2");

  FlowResult out;
  SampledCurve cur = profile;
  const int n = static_cast<int>(profile.pts.size());
  const double kappa_cap = 1.0 / (10.0 * cfg.dt);

  auto snapshot = [&](double t) {
    refresh_discrete_frame(cur);
    out.times.push_back(t);
    out.snapshots.push_back(cur);
  };

  for (int step = 0; step < cfg.n_steps; ++step) {
    bool singular = false;
    const std::vector<Vec2> v = flow_velocity(cur, family, cfg.phi_floor, &singular);
    if (singular) {
      out.stop = StopReason::SingularStop;
      break;
    }
    for (size_t i = 0; i < cur.pts.size(); ++i) {
      cur.pts[i].y += cfg.dt * v[i].x();
      cur.pts[i].z += cfg.dt * v[i].y();
    }
    out.t_end = (step + 1) * cfg.dt;

    if (cfg.resample_every > 0 && (step + 1) % cfg.resample_every == 0)
      cur = resample_arclength(cur, n);

    refresh_discrete_frame(cur);
    double kmax = 0;
    for (const auto& p : cur.pts) kmax = std::max(kmax, std::abs(p.kappa));
    if (kmax > kappa_cap) {
      out.stop = StopReason::SingularStop;
      break;
    }
    if (family.kind == FlowFamilyKind::Revolution) {
      for (const auto& p : cur.pts)
        if (p.y <= cfg.phi_floor) {
          out.stop = StopReason::SingularStop;
          break;
        }
      if (out.stop == StopReason::SingularStop) break;
    }
    if (cfg.snapshot_every > 0 && (step + 1) % cfg.snapshot_every == 0 &&
        step + 1 < cfg.n_steps)
      snapshot(out.t_end);
  }
  snapshot(out.t_end);
  return out;
}

FitResult fit_homothety(const SampledCurve& snapshot, const SampledCurve& reference,
                        Axis axis, std::optional<Vec2> trans_dir,
                        double end_margin) {
  if (snapshot.pts.size() < 10 || reference.pts.size() < 10)
    throw DegenerateFit("need at least 10 samples on both curves");
  const Vec2 dir = trans_dir.value_or(Vec2(0, 1)).normalized();
  const bool fit_rotation = axis == Axis::X;

  std::vector<Vec2> snap, ref;
  snap.reserve(snapshot.pts.size());
  for (const auto& p : snapshot.pts) snap.emplace_back(p.y, p.z);
  ref.reserve(reference.pts.size());
  for (const auto& p : reference.pts) ref.emplace_back(p.y, p.z);

  // Correspondence of one snapshot point: signed distance to the nearest
  // segment of the transformed reference, the footpoint in reference
  // coordinates, and the transformed segment's left normal.
  struct Match {
    double d = 0;
    Vec2 foot = Vec2::Zero();
    Vec2 normal = Vec2::Zero();
    bool clamped = false;
  };

  auto match_point = [&](const Vec2& p, double sigma, double xi,
                         double zeta) -> Match {
    const double cx = std::cos(xi), sx = std::sin(xi);
    auto T = [&](const Vec2& r) {
      return Vec2(sigma * (cx * r.x() - sx * r.y()) + zeta * dir.x(),
                  sigma * (sx * r.x() + cx * r.y()) + zeta * dir.y());
    };
    Match best;
    double best_abs = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < ref.size(); ++i) {
      const Vec2 a = T(ref[i]), b = T(ref[i + 1]);
      const Vec2 ab = b - a;
      const double len2 = ab.squaredNorm();
      double t = len2 > 0 ? (p - a).dot(ab) / len2 : 0.0;
      const bool lo = (i == 0 && t < 0.0);
      const bool hi = (i + 2 == ref.size() && t > 1.0);
      t = std::clamp(t, 0.0, 1.0);
      const Vec2 diff = p - (a + t * ab);
      const double d = diff.norm();
      if (d < best_abs) {
        best_abs = d;
        const double len = std::sqrt(len2);
        // left normal of the transformed segment; signed distance is smooth
        // through zero
        best.normal = len > 0 ? Vec2(-ab.y() / len, ab.x() / len) : Vec2(0, 0);
        best.d = best.normal.dot(diff);
        best.foot = ref[i] + t * (ref[i + 1] - ref[i]);
        best.clamped = lo || hi;
      }
    }
    return best;
  };

  // Snapshot end samples ride the one-sided-stencil boundary layer of the
  // flow; like curvature maxima, they are excluded from the fit. The margin
  // is a physical arc length so it does not shrink under refinement.
  size_t lo = 1, hi = snap.size() - 2;
  {
    std::vector<double> cum(snap.size(), 0.0);
    for (size_t i = 1; i < snap.size(); ++i)
      cum[i] = cum[i - 1] + (snap[i] - snap[i - 1]).norm();
    while (lo + 1 < snap.size() && cum[lo] < end_margin) ++lo;
    while (hi > lo && cum.back() - cum[hi] < end_margin) --hi;
  }

  // Gauss-Newton with analytic point-to-line Jacobians:
  //   r_i = n_i . (p_i - sigma R(xi) f_i - zeta dir)
  Eigen::Vector3d theta(1.0, 0.0, 0.0);
  int active = 0;
  for (int iter = 0; iter < 60; ++iter) {
    const double cx = std::cos(theta[1]), sx = std::sin(theta[1]);
    Eigen::Matrix3d JtJ = Eigen::Matrix3d::Zero();
    Eigen::Vector3d Jtr = Eigen::Vector3d::Zero();
    active = 0;
    for (size_t pi = lo; pi <= hi; ++pi) {
      const Vec2& p = snap[pi];
      const Match m = match_point(p, theta[0], theta[1], theta[2]);
      if (m.clamped) continue;
      ++active;
      const Vec2 Rf(cx * m.foot.x() - sx * m.foot.y(),
                    sx * m.foot.x() + cx * m.foot.y());
      const Vec2 Rpf(-sx * m.foot.x() - cx * m.foot.y(),
                     cx * m.foot.x() - sx * m.foot.y());
      Eigen::Vector3d J;
      J[0] = -m.normal.dot(Rf);
      J[1] = fit_rotation ? -theta[0] * m.normal.dot(Rpf) : 0.0;
      J[2] = -m.normal.dot(dir);
      JtJ += J * J.transpose();
      Jtr += J * m.d;
    }
    if (active < 10) throw DegenerateFit("fewer than 10 active samples in the fit");
    // Levenberg damping keeps unobservable directions (axis translation of a
    // straight profile, rotation for axis Z) pinned at their start values.
    const double lm = 1e-12 * (JtJ.trace() + 1.0);
    for (int a = 0; a < 3; ++a) JtJ(a, a) += lm;
    if (!fit_rotation) {
      JtJ(1, 1) = 1.0;
      Jtr[1] = 0.0;
    }
    const Eigen::Vector3d step = JtJ.ldlt().solve(Jtr);
    theta -= step;
    if (theta[0] <= 0) throw DegenerateFit("fit collapsed to nonpositive dilation");
    if (step.norm() < 1e-14) break;
  }

  FitResult out;
  out.motion.sigma = theta[0];
  out.motion.xi = theta[1];
  out.motion.zeta = theta[2];
  out.motion.axis = axis;
  double ss = 0;
  active = 0;
  for (size_t pi = lo; pi <= hi; ++pi) {
    const Match m = match_point(snap[pi], theta[0], theta[1], theta[2]);
    if (m.clamped) continue;
    ++active;
    ss += m.d * m.d;
  }
  out.rms = active > 0 ? std::sqrt(ss / active) : 0.0;
  out.n_active = active;
  return out;
}

SelfSimilarityReport self_similarity_report(const SampledCurve& profile,
                                            const FlowFamily& family,
                                            const SelfSimilarityConfig& cfg,
                                            const std::string& label) {
  FlowConfig fc = cfg.flow;
  if (fc.snapshot_every == 0) fc.snapshot_every = std::max(1, fc.n_steps / 6);
  const FlowResult flow = evolve_profile(profile, family, fc);

  SelfSimilarityReport rep;
  rep.label = label;
  rep.tolerance = cfg.tolerance;
  rep.stop = flow.stop;
  rep.pass = true;
  for (size_t i = 0; i < flow.snapshots.size(); ++i) {
    const FitResult fit = fit_homothety(flow.snapshots[i], profile, cfg.axis,
                                        cfg.trans_dir, cfg.end_margin);
    SelfSimilaritySnapshot snap;
    snap.t = flow.times[i];
    snap.sigma = fit.motion.sigma;
    snap.xi = fit.motion.xi;
    snap.zeta = fit.motion.zeta;
    snap.rms = fit.rms;
    rep.series.push_back(snap);
    if (fit.rms > cfg.tolerance) rep.pass = false;
  }
  return rep;
}

SampledCurve line_profile(double y, double z0, double z1, int n) {
  SampledCurve c;
  for (int i = 0; i < n; ++i) {
    CurvePoint p;
    p.s = z0 + (z1 - z0) * i / (n - 1.0);
    p.y = y;
    p.z = p.s;
    c.pts.push_back(p);
  }
  refresh_discrete_frame(c);
  return c;
}

SampledCurve sampled_graph(const ScalarCurve& q, double s0, double s1, int n) {
  SampledCurve c;
  for (int i = 0; i < n; ++i) {
    CurvePoint p;
    p.s = s0 + (s1 - s0) * i / (n - 1.0);
    p.y = p.s;
    p.z = q.value(p.s);
    c.pts.push_back(p);
  }
  refresh_discrete_frame(c);
  return c;
}

}  // namespace mcfsol
