#pragma once

#include <functional>
#include <utility>

#include "mcfsol/types.hpp"

namespace mcfsol {

// Central first difference, step h.
template <class F>
auto central_diff(const F& f, double s, double h = kFdStep) -> decltype(f(s)) {
  return (f(s + h) - f(s - h)) / (2.0 * h);
}

// Second derivative with one Richardson extrapolation step. Plain central
// second differences at h = 1e-6 lose too many digits to rounding; a larger
// base step plus extrapolation keeps both truncation and rounding near 1e-9.
template <class F>
auto richardson_second_diff(const F& f, double s, double h = 1e-3) -> decltype(f(s)) {
  auto d = [&](double hh) { return (f(s + hh) - 2.0 * f(s) + f(s - hh)) / (hh * hh); };
  return (4.0 * d(h / 2.0) - d(h)) / 3.0;
}

// Scalar function of one parameter with optional analytic derivatives.
// Missing derivatives fall back to finite differences.
class ScalarCurve {
 public:
  using Fn = std::function<double(double)>;

  ScalarCurve() = default;
  explicit ScalarCurve(Fn f) : f_(std::move(f)) {}
  ScalarCurve(Fn f, Fn d1) : f_(std::move(f)), d1_(std::move(d1)) {}
  ScalarCurve(Fn f, Fn d1, Fn d2)
      : f_(std::move(f)), d1_(std::move(d1)), d2_(std::move(d2)) {}

  static ScalarCurve constant(double v) {
    return ScalarCurve([v](double) { return v; }, [](double) { return 0.0; },
                       [](double) { return 0.0; });
  }
  static ScalarCurve identity() {
    return ScalarCurve([](double s) { return s; }, [](double) { return 1.0; },
                       [](double) { return 0.0; });
  }

  bool valid() const { return static_cast<bool>(f_); }
  bool has_analytic_derivatives() const { return d1_ && d2_; }

  double value(double s) const { return f_(s); }
  double d1(double s) const { return d1_ ? d1_(s) : central_diff(f_, s); }
  double d2(double s) const {
    if (d2_) return d2_(s);
    if (d1_) return central_diff(d1_, s);
    return richardson_second_diff(f_, s);
  }

 private:
  Fn f_, d1_, d2_;
};

// Space curve s -> R^3 with the same derivative-supply policy.
class SpaceCurve {
 public:
  using Fn = std::function<Vec3(double)>;

  SpaceCurve() = default;
  explicit SpaceCurve(Fn f) : f_(std::move(f)) {}
  SpaceCurve(Fn f, Fn d1) : f_(std::move(f)), d1_(std::move(d1)) {}
  SpaceCurve(Fn f, Fn d1, Fn d2)
      : f_(std::move(f)), d1_(std::move(d1)), d2_(std::move(d2)) {}

  static SpaceCurve constant(const Vec3& p) {
    return SpaceCurve([p](double) { return p; }, [](double) { return Vec3::Zero(); },
                      [](double) { return Vec3::Zero(); });
  }

  bool valid() const { return static_cast<bool>(f_); }

  Vec3 value(double s) const { return f_(s); }
  Vec3 d1(double s) const { return d1_ ? d1_(s) : central_diff(f_, s); }
  Vec3 d2(double s) const {
    if (d2_) return d2_(s);
    if (d1_) return central_diff(d1_, s);
    return richardson_second_diff(f_, s);
  }

 private:
  Fn f_, d1_, d2_;
};

// Plane curve s -> (x1(s), x2(s)). The embedding into R^3 depends on the
// caller's convention (profile plane x=0 or z=0).
struct PlaneCurve {
  ScalarCurve x1, x2;
};

}  // namespace mcfsol
