#include "asmo/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "asmo/errors.hpp"
#include "asmo/parallel.hpp"

namespace asmo {
namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;
using Gauss15 = boost::math::quadrature::gauss<double, 15>;
constexpr int kPanelNodes = 16;
constexpr int kMaxBisections = 4000;

double psi(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }

using Integrand = std::function<Complex(double)>;

struct Panel {
  const Integrand* f;
  double a;
  double b;
  Complex value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

// One 31-point Kronrod panel with the QUADPACK error estimate, which scales
// |K - G| for smooth integrands and never reports below the roundoff floor.
Panel kronrod_panel(const Integrand& f, double a, double b) {
  const auto& xk = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss15::weights();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  std::vector<Complex> fx(2 * xk.size());
  Complex kron(0.0, 0.0);
  Complex gauss(0.0, 0.0);
  double resabs = 0.0;
  for (std::size_t i = 0; i < xk.size(); ++i) {
    const Complex lo = f(mid - half * xk[i]);
    const Complex hi = i == 0 ? lo : f(mid + half * xk[i]);
    fx[2 * i] = lo;
    fx[2 * i + 1] = hi;
    const Complex sum = i == 0 ? lo : lo + hi;
    kron += wk[i] * sum;
    resabs += wk[i] * (i == 0 ? std::abs(lo) : std::abs(lo) + std::abs(hi));
    // Gauss nodes are the even-indexed Kronrod nodes, the centre included.
    if (i % 2 == 0) gauss += wg[i / 2] * sum;
  }
  const Complex mean = 0.5 * kron;
  double resasc = 0.0;
  for (std::size_t i = 0; i < xk.size(); ++i) {
    const double d = i == 0 ? std::abs(fx[0] - mean) : std::abs(fx[2 * i] - mean) + std::abs(fx[2 * i + 1] - mean);
    resasc += wk[i] * d;
  }
  kron *= half;
  gauss *= half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs(kron - gauss);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * resabs);
  return {&f, a, b, kron, err};
}

// Global adaptive bisection: always split the panel with the largest error.
struct Accumulator {
  std::priority_queue<Panel> panels;
  double error = 0.0;

  void add(const Integrand& f, double a, double b) {
    panels.push(kronrod_panel(f, a, b));
    error += panels.top().error;
  }

  MellinValue finish(double target) {
    // Recompute the total to avoid drift from repeated subtraction.
    const auto total = [this] {
      auto copy = panels;
      double e = 0.0;
      while (!copy.empty()) {
        e += copy.top().error;
        copy.pop();
      }
      return e;
    };
    error = total();
    for (int it = 0; it < kMaxBisections && error > target; ++it) {
      const Panel worst = panels.top();
      const double mid = 0.5 * (worst.a + worst.b);
      if (!(mid > worst.a && mid < worst.b)) break;
      panels.pop();
      const Panel left = kronrod_panel(*worst.f, worst.a, mid);
      const Panel right = kronrod_panel(*worst.f, mid, worst.b);
      const double gain = worst.error - left.error - right.error;
      panels.push(left);
      panels.push(right);
      error -= gain;
      if (it % 64 == 63) error = total();
    }
    MellinValue out{{0.0, 0.0}, 0.0};
    while (!panels.empty()) {
      out.value += panels.top().value;
      out.error += panels.top().error;
      panels.pop();
    }
    return out;
  }
};

// Endpoint u in [1, inf) beyond which e^{-u} u^{power} * scale < cutoff.
double tail_end(double power, double scale, double cutoff) {
  double u = 8.0;
  while (std::exp(-u + power * std::log(u)) * scale >= cutoff) u += 2.0;
  return u;
}

// Breakpoints on [a, b] so that each panel spans at most `max_phase` of the
// phase `phase(x)` (nondecreasing) and at most `max_len` in x.
template <typename Phase>
std::vector<double> breakpoints(double a, double b, Phase&& phase, double max_phase, double max_len) {
  const double total = std::abs(phase(b) - phase(a));
  const auto by_phase = static_cast<int>(std::ceil(total / max_phase));
  const auto by_len = static_cast<int>(std::ceil((b - a) / max_len));
  const int count = std::max({1, by_phase, by_len});
  // Uniform in the phase variable when that dominates, else uniform in x.
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count) + 1);
  if (by_phase >= by_len && total > 0.0) {
    const double pa = phase(a);
    const double pb = phase(b);
    for (int i = 0; i <= count; ++i) {
      const double target = pa + (pb - pa) * i / count;
      double lo = a;
      double hi = b;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (phase(mid) < target) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      out.push_back(i == 0 ? a : (i == count ? b : 0.5 * (lo + hi)));
    }
  } else {
    for (int i = 0; i <= count; ++i) out.push_back(a + (b - a) * i / count);
  }
  return out;
}

}  // namespace

double smooth_step(double x) {
  const double a = psi(x - 1.0);
  const double b = psi(2.0 - x);
  return a / (a + b);
}

double weight(double x) {
  if (!(x > 0.0) || !(x < 3.0)) return 0.0;
  if (x <= 1.0) return std::exp(-1.0 / x);
  if (x >= 2.0) return std::exp(-1.0 / (3.0 - x));
  const double phi = smooth_step(x);
  return (1.0 - phi) * std::exp(-1.0 / x) + phi * std::exp(-1.0 / (3.0 - x));
}

MellinValue weight_mellin_detailed(Complex s, const WeightSpec& spec) {
  const double sigma = s.real();
  const double t = std::abs(s.imag());
  constexpr double kMaxPhase = 2.0 * std::numbers::pi;
  // The integrands outlive the accumulator, which refers to them.
  // (0, 1]: x = 1/u gives int_1^inf e^{-u} u^{-1-s} du.
  const Integrand head = [s](double u) { return std::exp(-u - (1.0 + s) * std::log(u)); };
  // [1, 2]: the blended plateau.
  const Integrand plateau = [s](double x) { return weight(x) * std::exp((s - 1.0) * std::log(x)); };
  // [2, 3): x = 3 - 1/u gives int_1^inf e^{-u} (3 - 1/u)^{s-1} u^{-2} du.
  const Integrand rear = [s](double u) {
    return std::exp(-u + (s - 1.0) * std::log(3.0 - 1.0 / u)) / (u * u);
  };
  Accumulator acc;
  const auto add_all = [&acc](const Integrand& f, const std::vector<double>& pts) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) acc.add(f, pts[i], pts[i + 1]);
  };
  const auto log_phase = [t](double x) { return t * std::log(x); };
  add_all(head, breakpoints(1.0, tail_end(-1.0 - sigma, 1.0, spec.tail_cutoff), log_phase, kMaxPhase, 4.0));
  add_all(plateau, breakpoints(1.0, 2.0, log_phase, kMaxPhase, 0.25));
  {
    const double scale = std::max(std::pow(2.0, sigma - 1.0), std::pow(3.0, sigma - 1.0));
    const auto phase = [t](double u) { return t * std::log(3.0 - 1.0 / u); };
    add_all(rear, breakpoints(1.0, tail_end(0.0, scale, spec.tail_cutoff), phase, kMaxPhase, 4.0));
  }

  const MellinValue out = acc.finish(0.01 * spec.abs_tolerance);
  if (!(out.error <= spec.abs_tolerance)) {
    throw QuadratureError("weight_mellin did not reach tolerance", out.error);
  }
  return out;
}

Complex weight_mellin(Complex s, const WeightSpec& spec) { return weight_mellin_detailed(s, spec).value; }

void line_quadrature(double T, double panel_width, std::vector<double>& nodes, std::vector<double>& weights) {
  using Gauss = boost::math::quadrature::gauss<double, kPanelNodes>;
  nodes.clear();
  weights.clear();
  if (!(T > 0.0)) return;
  const auto panels = static_cast<int>(std::ceil(T / panel_width - 1e-12));
  const double h = T / panels;
  const auto& x = Gauss::abscissa();
  const auto& w = Gauss::weights();
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (std::size_t i = x.size(); i-- > 0;) {
      if (x[i] == 0.0) continue;
      nodes.push_back(mid - 0.5 * h * x[i]);
      weights.push_back(0.5 * h * w[i]);
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      nodes.push_back(mid + 0.5 * h * x[i]);
      weights.push_back(0.5 * h * w[i]);
    }
  }
}

LogTrapezoid::LogTrapezoid(double sigma, const WeightSpec& spec) : sigma_(sigma), step_(spec.log_step) {
  // g(y) = w(e^y) e^{sigma y} vanishes for y >= log 3 and decays like
  // exp(-e^{-y} + sigma y) as y -> -inf.
  double y_min = -1.0;
  while (-std::exp(-y_min) + sigma * y_min >= std::log(spec.tail_cutoff)) y_min -= 0.25;
  const double y_max = std::log(WeightSpec::support_hi);
  const auto count = static_cast<std::size_t>(std::ceil((y_max - y_min) / step_));
  y_.reserve(count);
  g_.reserve(count);
  for (std::size_t j = 1; j <= count; ++j) {
    const double y = y_max - static_cast<double>(j) * step_;
    y_.push_back(y);
    g_.push_back(weight(std::exp(y)) * std::exp(sigma * y));
  }
}

MellinValue LogTrapezoid::evaluate(double t) const {
  Complex fine(0.0, 0.0);
  Complex coarse(0.0, 0.0);
  for (std::size_t j = 0; j < y_.size(); ++j) {
    const Complex term = g_[j] * Complex(std::cos(t * y_[j]), std::sin(t * y_[j]));
    fine += term;
    if (j % 2 == 1) coarse += term;
  }
  fine *= step_;
  coarse *= 2.0 * step_;
  return {fine, std::abs(fine - coarse)};
}

LineTransform::LineTransform(double T, const WeightSpec& spec) : T_(T), spec_(spec) {
  if (!(T > 0.0)) throw std::invalid_argument("LineTransform: T must be positive");
  line_quadrature(T, spec_.panel_width, nodes_, weights_);
  values_.resize(nodes_.size());
  std::vector<double> errors(nodes_.size());
  const LogTrapezoid rule(spec_.inversion_sigma, spec_);
  parallel_for(nodes_.size(), [&](std::size_t i) {
    const auto w = rule.evaluate(nodes_[i]);
    values_[i] = w.value;
    errors[i] = w.error;
  });
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    error_integral_ += weights_[i] * errors[i];
    abs_integral_ += weights_[i] * std::abs(values_[i]);
  }
  if (!(error_integral_ <= spec_.abs_tolerance)) {
    throw QuadratureError("LineTransform: tabulated transform did not reach tolerance", error_integral_);
  }
  edge_magnitude_ = std::abs(rule.evaluate(T).value);

  // int_T^inf |W| is not rigorous, just the same rule run past T in blocks
  // until a block adds nothing visible.
  const double block = std::max(16.0, 0.25 * T);
  double start = T;
  for (int b = 0; b < 1000; ++b) {
    std::vector<double> tail_nodes;
    std::vector<double> tail_weights;
    line_quadrature(block, 4.0 * spec_.panel_width, tail_nodes, tail_weights);
    std::vector<double> mags(tail_nodes.size());
    parallel_for(tail_nodes.size(), [&](std::size_t i) {
      mags[i] = std::abs(rule.evaluate(start + tail_nodes[i]).value);
    });
    double part = 0.0;
    for (std::size_t i = 0; i < mags.size(); ++i) part += tail_weights[i] * mags[i];
    tail_integral_ += part;
    start += block;
    if (part <= 1e-6 * tail_integral_) break;
  }
}

double LineTransform::invert(double x) const {
  if (!(x > 0.0)) throw std::invalid_argument("LineTransform::invert: x must be positive");
  // W(sigma - it) x^{-sigma + it} is the conjugate of the +t integrand.
  const double log_x = std::log(x);
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Complex kernel = std::exp(-Complex(spec_.inversion_sigma, nodes_[i]) * log_x);
    acc += weights_[i] * (values_[i] * kernel).real();
  }
  return acc / std::numbers::pi;
}

double mellin_roundtrip(double x, double T, const WeightSpec& spec) {
  const LineTransform line(T, spec);
  return std::abs(line.invert(x) - weight(x));
}

}  // namespace asmo
