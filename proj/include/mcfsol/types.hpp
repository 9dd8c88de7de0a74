#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace mcfsol {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;
using Mat3 = Eigen::Matrix3d;

// Motion axis convention. Z is the revolution-surface convention (rotation
// about e3, translation along e3); X is the cylindrical one (rotation about
// e1, translation along e1).
enum class Axis { Z, X };

inline const char* axis_name(Axis a) { return a == Axis::Z ? "Z" : "X"; }

// Tolerances shared across the library.
inline constexpr double kParamTol = 1e-8;   // parameterization constraint checks
inline constexpr double kSpeedTol = 1e-7;   // arc-length speed drift
inline constexpr double kFdStep = 1e-6;     // central-difference step for 1st derivatives

struct GeomError : std::runtime_error {
  explicit GeomError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parameterization constraint violated (|w| != 1, <beta',w'> != 0, ...).
struct ParamViolation : GeomError {
  explicit ParamViolation(const std::string& msg) : GeomError(msg) {}
};

// Evaluation at a geometric singularity (lambda = u = 0, phi <= 0, apex, ...).
struct SingularEvaluation : GeomError {
  explicit SingularEvaluation(const std::string& msg) : GeomError(msg) {}
};

// Degenerate configuration (beta' parallel to w, rank-deficient fit, ...).
struct DegenerateSurface : GeomError {
  explicit DegenerateSurface(const std::string& msg) : GeomError(msg) {}
};

struct BadInitialSpeed : GeomError {
  explicit BadInitialSpeed(const std::string& msg) : GeomError(msg) {}
};

struct UnknownFigure : std::invalid_argument {
  explicit UnknownFigure(const std::string& msg) : std::invalid_argument(msg) {}
};

struct CflViolation : GeomError {
  explicit CflViolation(const std::string& msg) : GeomError(msg) {}
};

struct DegenerateFit : GeomError {
  explicit DegenerateFit(const std::string& msg) : GeomError(msg) {}
};

}  // namespace mcfsol
