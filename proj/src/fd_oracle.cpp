#include "mcfsol/fd_oracle.hpp"

#include <cmath>

namespace mcfsol {

namespace {

// 4th-order first derivative: (-f2 + 8f1 - 8f_1 + f_2) / (12h)
Vec3 d1_4th(const std::function<Vec3(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}

// 4th-order second derivative: (-f2 + 16f1 - 30f0 + 16f_1 - f_2) / (12h^2)
Vec3 d2_4th(const std::function<Vec3(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) -
          f(x - 2 * h)) /
         (12.0 * h * h);
}

Vec3 mixed_cross(const SurfaceFn& X, double s, double u, double h) {
  return (X(s + h, u + h) - X(s + h, u - h) - X(s - h, u + h) + X(s - h, u - h)) /
         (4.0 * h * h);
}

}  // namespace

FundamentalForms fd_fundamental_forms(const SurfaceFn& X, double s, double u, double h) {
  auto in_s = [&](double ss) { return X(ss, u); };
  auto in_u = [&](double uu) { return X(s, uu); };

  const Vec3 Xs = d1_4th(in_s, s, h);
  const Vec3 Xu = d1_4th(in_u, u, h);
  const Vec3 Xss = d2_4th(in_s, s, h);
  const Vec3 Xuu = d2_4th(in_u, u, h);
  // Richardson on the 2nd-order cross stencil.
  const Vec3 Xsu = (4.0 * mixed_cross(X, s, u, h / 2) - mixed_cross(X, s, u, h)) / 3.0;

  FundamentalForms ff;
  ff.E = Xs.dot(Xs);
  ff.F = Xs.dot(Xu);
  ff.G = Xu.dot(Xu);
  const Vec3 cross = Xs.cross(Xu);
  const double area = cross.norm();
  if (area <= 0.0) throw SingularEvaluation("degenerate tangent plane in FD oracle");
  ff.N = cross / area;
  ff.e = ff.N.dot(Xss);
  ff.f = ff.N.dot(Xsu);
  ff.g = ff.N.dot(Xuu);
  const double det = ff.E * ff.G - ff.F * ff.F;
  ff.H = (ff.E * ff.g - 2.0 * ff.f * ff.F + ff.G * ff.e) / (2.0 * det);
  ff.K = (ff.e * ff.g - ff.f * ff.f) / det;
  return ff;
}

}  // namespace mcfsol
