#pragma once

// Generic fundamental-form evaluator driven purely by surface positions and
// finite differences. It is the independent cross-check for the specialized
// closed-form curvature formulas and must not share code with them.

#include <functional>

#include "mcfsol/types.hpp"

namespace mcfsol {

struct FundamentalForms {
  double E = 0, F = 0, G = 0;
  double e = 0, f = 0, g = 0;
  Vec3 N = Vec3::Zero();
  double H = 0;
  double K = 0;
};

using SurfaceFn = std::function<Vec3(double, double)>;

// First derivatives: 4th-order central differences. Second derivatives:
// 5-point 4th-order stencils; the mixed one uses a Richardson-extrapolated
// cross stencil. Step h = 2e-3 balances truncation against rounding for the
// smooth surfaces this library works with.
FundamentalForms fd_fundamental_forms(const SurfaceFn& X, double s, double u,
                                      double h = 2e-3);

}  // namespace mcfsol
