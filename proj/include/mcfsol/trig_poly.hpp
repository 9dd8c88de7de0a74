#pragma once

// Closed-form function class c0 + c1 s + sum_k (A_k cos(w_k s) + B_k sin(w_k s)),
// closed under differentiation and (when the linear coefficient vanishes)
// antidifferentiation. Random admissible surfaces are built from these so that
// every derivative the formulas need is exact.

#include <cassert>
#include <cmath>
#include <vector>

namespace mcfsol {

class TrigPoly {
 public:
  TrigPoly() = default;
  explicit TrigPoly(double c0, double c1 = 0.0) : c0_(c0), c1_(c1) {}

  static TrigPoly cosine(double amplitude, double freq) {
    TrigPoly p;
    p.add_cos(amplitude, freq);
    return p;
  }
  static TrigPoly sine(double amplitude, double freq) {
    TrigPoly p;
    p.add_sin(amplitude, freq);
    return p;
  }

  void add_const(double v) { c0_ += v; }
  void add_linear(double v) { c1_ += v; }

  void add_cos(double amplitude, double freq) {
    if (freq < 0) freq = -freq;  // cos is even
    if (freq == 0.0) {
      c0_ += amplitude;
      return;
    }
    find(freq).A += amplitude;
  }

  void add_sin(double amplitude, double freq) {
    if (freq < 0) {
      freq = -freq;
      amplitude = -amplitude;  // sin is odd
    }
    if (freq == 0.0) return;
    find(freq).B += amplitude;
  }

  double eval(double s) const {
    double v = c0_ + c1_ * s;
    for (const auto& t : terms_)
      v += t.A * std::cos(t.w * s) + t.B * std::sin(t.w * s);
    return v;
  }

  TrigPoly derivative() const {
    TrigPoly d(c1_);
    for (const auto& t : terms_) {
      d.add_cos(t.B * t.w, t.w);
      d.add_sin(-t.A * t.w, t.w);
    }
    return d;
  }

  TrigPoly antiderivative() const {
    assert(c1_ == 0.0 && "antiderivative of a linear term leaves the class");
    TrigPoly p(0.0, c0_);
    for (const auto& t : terms_) {
      p.add_sin(t.A / t.w, t.w);
      p.add_cos(-t.B / t.w, t.w);
    }
    return p;
  }

  // Product with a single tone, expanded by the product-to-sum identities.
  TrigPoly times_cos(double freq) const {
    TrigPoly p;
    p.add_cos(c0_, freq);
    assert(c1_ == 0.0 && "linear-times-tone products are not representable");
    for (const auto& t : terms_) {
      p.add_cos(0.5 * t.A, t.w - freq);
      p.add_cos(0.5 * t.A, t.w + freq);
      p.add_sin(0.5 * t.B, t.w + freq);
      p.add_sin(0.5 * t.B, t.w - freq);
    }
    return p;
  }

  TrigPoly times_sin(double freq) const {
    TrigPoly p;
    p.add_sin(c0_, freq);
    assert(c1_ == 0.0 && "linear-times-tone products are not representable");
    for (const auto& t : terms_) {
      p.add_sin(0.5 * t.A, t.w + freq);
      p.add_sin(-0.5 * t.A, t.w - freq);
      p.add_cos(0.5 * t.B, t.w - freq);
      p.add_cos(-0.5 * t.B, t.w + freq);
    }
    return p;
  }

 private:
  struct Term {
    double w;
    double A = 0, B = 0;
  };

  Term& find(double freq) {
    for (auto& t : terms_)
      if (std::abs(t.w - freq) < 1e-14) return t;
    terms_.push_back({freq, 0.0, 0.0});
    return terms_.back();
  }

  double c0_ = 0, c1_ = 0;
  std::vector<Term> terms_;
};

}  // namespace mcfsol
