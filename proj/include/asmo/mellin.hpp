#pragma once

#include <complex>
#include <vector>

#include "asmo/repspec.hpp"

namespace asmo {

/// The smooth cutoff w and the controls for its Mellin transform and inversion.
struct WeightSpec {
  // w vanishes outside [0, 3]; e^{-1/x} on (0, 1], e^{-1/(3-x)} on [2, 3) and a
  // smooth-step blend of the two on (1, 2).
  static constexpr double support_lo = 0.0;
  static constexpr double support_hi = 3.0;

  double abs_tolerance = 1e-10;  // maximum accepted quadrature error for W(s)
  double tail_cutoff = 1e-18;    // endpoint substitution tails dropped below this

  double log_step = 1e-3;        // trapezoid step in y = log x for tabulation
  double inversion_sigma = 2.0;  // vertical line Re s = 2
  double panel_width = 2.0;      // Gauss-Legendre panels along the line
};

// Smooth step built from psi(u) = e^{-1/u}: 0 at x <= 1, 1 at x >= 2.
double smooth_step(double x);

double weight(double x);

struct MellinValue {
  Complex value;
  double error;
};

// W(s) = int_0^3 w(x) x^{s-1} dx by adaptive Gauss-Kronrod, with u = 1/x near 0
// and u = 1/(3-x) near 3. Throws QuadratureError when the error estimate exceeds
// spec.abs_tolerance.
MellinValue weight_mellin_detailed(Complex s, const WeightSpec& spec = {});
Complex weight_mellin(Complex s, const WeightSpec& spec = {});

/// W(sigma + it) = int g(y) e^{ity} dy with g(y) = w(e^y) e^{sigma y}, by the
/// trapezoid rule in y. g and all its derivatives vanish at both ends of its
/// effective support, so the rule converges spectrally; the reported error is
/// the difference from the rule at twice the step.
class LogTrapezoid {
 public:
  LogTrapezoid(double sigma, const WeightSpec& spec = {});

  double sigma() const noexcept { return sigma_; }
  std::size_t size() const noexcept { return y_.size(); }
  MellinValue evaluate(double t) const;

 private:
  double sigma_;
  double step_;
  std::vector<double> y_;
  std::vector<double> g_;
};

/// W(sigma + it) tabulated on Gauss-Legendre nodes covering [0, T]; W at -t is
/// the conjugate since w is real.
class LineTransform {
 public:
  LineTransform(double T, const WeightSpec& spec = {});

  double T() const noexcept { return T_; }
  double sigma() const noexcept { return spec_.inversion_sigma; }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<Complex>& values() const noexcept { return values_; }

  // Sum over nodes of weight * (error estimate of W at the node).
  double error_integral() const noexcept { return error_integral_; }
  // Sum over nodes of weight * |W|, i.e. int_0^T |W(sigma+it)| dt.
  double abs_integral() const noexcept { return abs_integral_; }
  // |W(sigma + iT)|.
  double edge_magnitude() const noexcept { return edge_magnitude_; }
  // Estimate of int_T^inf |W(sigma+it)| dt, the part of the line left out.
  double tail_integral() const noexcept { return tail_integral_; }

  // (1/2pi) int_{-T}^{T} W(sigma+it) x^{-sigma-it} dt.
  double invert(double x) const;

 private:
  double T_;
  WeightSpec spec_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<Complex> values_;
  double error_integral_ = 0.0;
  double abs_integral_ = 0.0;
  double edge_magnitude_ = 0.0;
  double tail_integral_ = 0.0;
};

// Gauss-Legendre nodes/weights on [0, T] in panels of the given width.
void line_quadrature(double T, double panel_width, std::vector<double>& nodes, std::vector<double>& weights);

// |w_T(x) - w(x)| where w_T is the Mellin inversion truncated at height T on Re s = 2.
double mellin_roundtrip(double x, double T, const WeightSpec& spec = {});

}  // namespace asmo
