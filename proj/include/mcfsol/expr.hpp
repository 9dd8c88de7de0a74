#pragma once

// Recursive-descent reader for the surface-spec expression language:
// +, -, *, /, ^, sin, cos, tan, sinh, cosh, tanh, exp, log, sqrt, asin,
// acos, atan, abs, the variable s, and the constants pi and e. Parsed
// expressions can be differentiated symbolically, so spec-file surfaces get
// analytic derivatives rather than finite differences.

#include <memory>
#include <stdexcept>
#include <string>

#include "mcfsol/derivatives.hpp"

namespace mcfsol {

struct ExprParseError : std::invalid_argument {
  explicit ExprParseError(const std::string& msg) : std::invalid_argument(msg) {}
};

class Expr {
 public:
  // Parses an expression in the single variable `var`.
  static Expr parse(const std::string& text, const std::string& var = "s");

  double eval(double s) const;
  Expr derivative() const;

  std::string to_string() const;

  // value / first / second derivative closures in one ScalarCurve
  ScalarCurve as_curve() const;

  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

 private:
  explicit Expr(NodePtr root) : root_(std::move(root)) {}
  NodePtr root_;
};

}  // namespace mcfsol
