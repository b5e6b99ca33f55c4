#include "asmo/archimedean.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "asmo/errors.hpp"

namespace asmo {
namespace {

constexpr double kShiftTarget = 15.0;

// B_{2k} / (2k (2k-1)) for k = 1..10.
constexpr std::array<double, 10> kStirlingCoefficients = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

bool is_gamma_pole(Complex z, long& index) {
  if (z.imag() != 0.0 || z.real() > 0.0) return false;
  const double r = std::nearbyint(z.real());
  if (r != z.real()) return false;
  index = static_cast<long>(-r);
  return true;
}

double frac(double x) { return x - std::floor(x); }

}  // namespace

Complex log_gamma(Complex z) {
  long index = 0;
  if (is_gamma_pole(z, index)) throw GammaPoleError(0, index);

  Complex shift_log(0.0, 0.0);
  if (z.real() < kShiftTarget) {
    const auto k = static_cast<int>(std::ceil(kShiftTarget - z.real()));
    for (int i = 0; i < k; ++i) shift_log += std::log(z + static_cast<double>(i));
    z += static_cast<double>(k);
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series(0.0, 0.0);
  Complex power = inv;
  for (double c : kStirlingCoefficients) {
    series += c * power;
    power *= inv2;
  }
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (z - 0.5) * std::log(z) - z + half_log_two_pi + series - shift_log;
}

Complex log_arch_l_factor(std::span<const Complex> params, Complex s) {
  const double r = static_cast<double>(params.size());
  Complex acc = -0.5 * r * s * std::log(std::numbers::pi);
  for (std::size_t j = 0; j < params.size(); ++j) {
    const Complex z = 0.5 * (s + params[j]);
    long index = 0;
    if (is_gamma_pole(z, index)) throw GammaPoleError(j, index);
    acc += log_gamma(z);
  }
  return acc;
}

Complex arch_l_factor(const RankinSelbergPair& pair, Complex s) {
  return std::exp(log_arch_l_factor(pair.arch_params(), s));
}

PoleGeometry::PoleGeometry(const RankinSelbergPair& pair) : PoleGeometry(pair.arch_params()) {}

PoleGeometry::PoleGeometry(std::vector<Complex> pair_params) : params_(std::move(pair_params)) {
  if (params_.empty()) throw std::invalid_argument("PoleGeometry: no archimedean parameters");
}

PoleGeometry::Pole PoleGeometry::nearest_pole(Complex s) const {
  Pole best{Complex(0.0, 0.0), true, 0, 0, std::numeric_limits<double>::infinity()};
  for (std::size_t j = 0; j < params_.size(); ++j) {
    const Complex b = params_[j];
    // Numerator: 2n + 1 + conj(b).
    const long n_num = std::max(0L, std::lround((s.real() - 1.0 - b.real()) / 2.0));
    const Complex p_num = 2.0 * static_cast<double>(n_num) + 1.0 + std::conj(b);
    if (const double d = std::abs(s - p_num); d < best.distance) best = {p_num, true, j, n_num, d};
    // Denominator: -b - 2n.
    const long n_den = std::max(0L, std::lround((-b.real() - s.real()) / 2.0));
    const Complex p_den = -b - 2.0 * static_cast<double>(n_den);
    if (const double d = std::abs(s - p_den); d < best.distance) best = {p_den, false, j, n_den, d};
  }
  return best;
}

double PoleGeometry::line_clearance(double re) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& b : params_) {
    const double u = b.real();
    const double n_num = std::max(0.0, std::nearbyint((re - 1.0 - u) / 2.0));
    best = std::min(best, std::abs(re - (2.0 * n_num + 1.0 + u)));
    const double n_den = std::max(0.0, std::nearbyint((-u - re) / 2.0));
    best = std::min(best, std::abs(re - (-u - 2.0 * n_den)));
  }
  return best;
}

AdmissibleLine admissible_line(const PoleGeometry& geometry, int n) {
  if (n < 1) throw std::invalid_argument("admissible_line: n must be at least 1");
  // Pole abscissae are 2k + 1 + u_j and -u_j - 2k, so modulo 1 they sit at
  // frac(u_j) and frac(-u_j).
  std::vector<double> marks = {0.0, 1.0};
  for (const auto& b : geometry.params()) {
    marks.push_back(frac(b.real()));
    marks.push_back(frac(-b.real()));
  }
  std::sort(marks.begin(), marks.end());
  double lo = 0.0;
  double width = -1.0;
  for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
    if (marks[i + 1] - marks[i] > width) {
      width = marks[i + 1] - marks[i];
      lo = marks[i];
    }
  }
  const double mid = lo + 0.5 * width;
  // -H = -n - 1 + mid lies in [-n-1, -n].
  AdmissibleLine line{static_cast<double>(n) + 1.0 - mid, n, 0.0};
  line.clearance = geometry.line_clearance(-line.H);
  if (!(line.clearance >= geometry.exclusion_radius())) {
    std::ostringstream msg;
    msg << "admissible_line: clearance " << line.clearance << " below exclusion radius "
        << geometry.exclusion_radius() << " at H=" << line.H;
    throw std::logic_error(msg.str());
  }
  return line;
}

AdmissibleLine admissible_line(const RankinSelbergPair& pair, int n) { return admissible_line(PoleGeometry(pair), n); }

Complex log_g_ratio(const PoleGeometry& geometry, Complex s) {
  const auto pole = geometry.nearest_pole(s);
  if (pole.distance < geometry.exclusion_radius()) {
    std::ostringstream msg;
    msg << "s = " << s << " lies within " << geometry.exclusion_radius() << " of the "
        << (pole.numerator ? "numerator" : "denominator") << " pole " << pole.location << " (j=" << pole.factor
        << ", n=" << pole.index << ")";
    throw ExclusionDiscError(msg.str());
  }
  const double r = geometry.degree();
  Complex acc = (-0.5 * r + r * s) * std::log(std::numbers::pi);
  for (const auto& b : geometry.params()) {
    acc += log_gamma(0.5 * (1.0 - s + std::conj(b))) - log_gamma(0.5 * (s + b));
  }
  return acc;
}

Complex g_ratio(const RankinSelbergPair& pair, Complex s) { return std::exp(log_g_ratio(PoleGeometry(pair), s)); }

GrowthReport g_growth_check(const PoleGeometry& geometry, const AdmissibleLine& line,
                            std::span<const double> t_grid) {
  GrowthReport report;
  report.H = line.H;
  double max_v = 0.0;
  for (const auto& b : geometry.params()) max_v = std::max(max_v, std::abs(b.imag()));
  report.stirling_threshold = 50.0 * (1.0 + max_v);

  const double r = geometry.degree();
  const double exponent = 0.5 + line.H;
  double log_b_norm = 0.0;
  for (const auto& b : geometry.params()) log_b_norm += exponent * std::log1p(std::abs(b));

  for (const double t : t_grid) {
    const Complex s(-line.H, t);
    const double log_abs_g = log_g_ratio(geometry, s).real();
    const double log_ratio = log_abs_g - r * exponent * std::log1p(std::abs(t)) - log_b_norm;
    double log_prediction = -r * exponent * std::log(std::numbers::pi);
    for (const auto& b : geometry.params()) log_prediction += exponent * std::log(0.5 * std::abs(t + b.imag()));

    GrowthRow row{t, std::exp(log_abs_g), std::exp(log_ratio), std::exp(log_prediction),
                  std::abs(std::expm1(log_abs_g - log_prediction))};
    report.max_ratio = std::max(report.max_ratio.value_or(0.0), row.ratio);
    if (std::abs(t) >= report.stirling_threshold) {
      report.max_deviation = std::max(report.max_deviation.value_or(0.0), row.deviation);
    }
    report.rows.push_back(row);
  }
  return report;
}

GrowthReport g_growth_check(const RankinSelbergPair& pair, const AdmissibleLine& line,
                            std::span<const double> t_grid) {
  return g_growth_check(PoleGeometry(pair), line, t_grid);
}

}  // namespace asmo
