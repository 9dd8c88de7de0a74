#pragma once

// Desk-scale forward mean-curvature-flow evolution of profile curves and a
// homothety fit that certifies self-similarity.
//
// Revolution profiles (phi,psi) move by H eta with the surface mean curvature
// induced by the profile. Cylindrical profiles are the x = 0 cross-section of
// a cylinder with ruling direction w (w = e1 is the orthogonal case, where
// the motion reduces to the plane-curve kappa/2 convention); tilted rulings
// are reduced exactly by sliding the normal velocity along w back into the
// cross-section plane.
//
// Time stepping is explicit Euler with a hard CFL guard; the module is a
// verifier, not a production flow solver.

#include <optional>
#include <vector>

#include "mcfsol/catalog.hpp"
#include "mcfsol/profile_ode.hpp"

namespace mcfsol {

struct HomotheticMotion {
  double sigma = 1;  // dilation about the coordinate origin
  double xi = 0;     // rotation about the fixed axis
  double zeta = 0;   // translation along the fit's in-plane direction
  Axis axis = Axis::Z;
};

enum class FlowFamilyKind { Revolution, Cylindrical };

struct FlowFamily {
  FlowFamilyKind kind = FlowFamilyKind::Revolution;
  Vec3 w = Vec3(1, 0, 0);  // ruling direction (cylindrical); w.x() != 0
};

struct FlowConfig {
  double dt = 1e-4;
  int n_steps = 1000;
  int resample_every = 25;      // 0 disables re-sampling
  int snapshot_every = 0;       // 0 means final snapshot only
  double phi_floor = 1e-6;      // revolution axis guard
};

struct FlowResult {
  std::vector<double> times;
  std::vector<SampledCurve> snapshots;  // same cadence as times
  StopReason stop = StopReason::ReachedEnd;
  double t_end = 0;
};

// Explicit-Euler evolution of the profile by the induced surface mean
// curvature. Throws CflViolation if dt > 0.4 * (min spacing)^2. Stops with
// SingularStop when phi hits the floor or the discrete curvature blows past
// 1/(10 dt).
FlowResult evolve_profile(const SampledCurve& profile, const FlowFamily& family,
                          const FlowConfig& cfg);

struct FitResult {
  HomotheticMotion motion;
  double rms = 0;      // root-mean-square point-to-polyline distance
  int n_active = 0;    // samples whose projection fell inside the polyline
};

// Least-squares fit of (sigma, xi, zeta) mapping the reference onto the
// snapshot: p ~ sigma R(xi) p + zeta * trans_dir. For axis Z the in-plane
// rotation is unobservable on a surface of revolution and xi is held at 0;
// trans_dir defaults to the height direction (0,1). Samples projecting
// beyond the polyline ends are trimmed, as are snapshot samples within
// end_margin arc length of the curve ends (the one-sided-stencil boundary
// layer of the flow). Throws DegenerateFit when fewer than 10 samples remain
// active.
FitResult fit_homothety(const SampledCurve& snapshot, const SampledCurve& reference,
                        Axis axis, std::optional<Vec2> trans_dir = {},
                        double end_margin = 0.0);

struct SelfSimilaritySnapshot {
  double t = 0;
  double sigma = 1, xi = 0, zeta = 0;
  double rms = 0;
};

struct SelfSimilarityReport {
  std::string label;
  std::vector<SelfSimilaritySnapshot> series;
  bool pass = false;  // every snapshot fit at or below the tolerance
  double tolerance = 5e-3;
  StopReason stop = StopReason::ReachedEnd;
};

struct SelfSimilarityConfig {
  FlowConfig flow;
  Axis axis = Axis::Z;
  std::optional<Vec2> trans_dir;
  double tolerance = 5e-3;
  double end_margin = 0.0;  // arc trimmed from the snapshot ends in the fit
};

SelfSimilarityReport self_similarity_report(const SampledCurve& profile,
                                            const FlowFamily& family,
                                            const SelfSimilarityConfig& cfg,
                                            const std::string& label = "");

// Uniformly sampled curves for the flow entries.
SampledCurve line_profile(double y, double z0, double z1, int n);
SampledCurve sampled_graph(const ScalarCurve& q, double s0, double s1, int n);

}  // namespace mcfsol
