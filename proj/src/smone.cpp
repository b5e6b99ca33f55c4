#include "asmo/smone.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "asmo/conductor.hpp"
#include "asmo/errors.hpp"
#include "asmo/parallel.hpp"

namespace asmo {
namespace {

std::size_t support_length(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("smoothed sum needs x > 0");
  // w(n/x) = 0 once n >= 3x.
  const double top = 3.0 * x;
  auto n = static_cast<std::size_t>(std::floor(top));
  if (static_cast<double>(n) >= top && n > 0) --n;
  return n;
}

}  // namespace

Complex smoothed_sum(const CoefficientStream& stream, double x) {
  const std::size_t top = support_length(x);
  if (top > stream.length()) {
    throw std::out_of_range("smoothed_sum: need coefficients up to " + std::to_string(top) + ", stream has " +
                            std::to_string(stream.length()));
  }
  Complex acc(0.0, 0.0);
  for (std::size_t n = 1; n <= top; ++n) acc += stream.at(n) * weight(static_cast<double>(n) / x);
  return acc;
}

Complex smoothed_sum(const RankinSelbergPair& pair, double x) {
  const std::size_t top = support_length(x);
  if (top == 0) return {0.0, 0.0};
  return smoothed_sum(rs_coeffs(pair, top), x);
}

ContourReport contour_identity(const CoefficientStream& stream, const LineTransform& line, double x, double T,
                               std::size_t N) {
  if (!(T > 0.0) || T > line.T() + 1e-9) throw std::invalid_argument("contour_identity: T outside the tabulated line");
  if (static_cast<double>(N) < 3.0 * x) throw std::invalid_argument("contour_identity: need N >= 3x");
  const double sigma = line.sigma();

  ContourReport report;
  report.x = x;
  report.T = T;
  report.N = N;
  report.direct = support_length(x) == 0 ? Complex(0.0, 0.0) : smoothed_sum(stream, x);

  std::vector<Complex> scaled(N);
  std::vector<double> logs(N);
  double abs_sum = 0.0;
  for (std::size_t n = 1; n <= N; ++n) {
    logs[n - 1] = std::log(static_cast<double>(n));
    scaled[n - 1] = stream.at(n) * std::exp(-sigma * logs[n - 1]);
    abs_sum += std::abs(scaled[n - 1]);
  }

  const auto& nodes = line.nodes();
  const std::size_t count = static_cast<std::size_t>(
      std::lower_bound(nodes.begin(), nodes.end(), T + 1e-12) - nodes.begin());
  std::vector<Complex> contributions(count);
  const double log_x = std::log(x);
  const double x_sigma = std::exp(sigma * log_x);
  parallel_for(count, [&](std::size_t k) {
    const double t = nodes[k];
    // L_N(sigma + it) and L_N(sigma - it) share the same cos/sin table.
    Complex plus(0.0, 0.0);
    Complex minus(0.0, 0.0);
    for (std::size_t i = 0; i < N; ++i) {
      const double c = std::cos(t * logs[i]);
      const double s = std::sin(t * logs[i]);
      plus += scaled[i] * Complex(c, -s);
      minus += scaled[i] * Complex(c, s);
    }
    const Complex w_plus = line.values()[k];
    const Complex x_it(std::cos(t * log_x), std::sin(t * log_x));
    contributions[k] = x_sigma * (x_it * w_plus * plus + std::conj(x_it) * std::conj(w_plus) * minus);
  });
  Complex acc(0.0, 0.0);
  double error_integral = 0.0;
  double abs_integral = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    acc += line.weights()[k] * contributions[k];
    abs_integral += line.weights()[k] * std::abs(line.values()[k]);
  }
  // The per-node W errors are only summarised over the whole line.
  error_integral = line.error_integral();

  report.integral = acc / (2.0 * std::numbers::pi);
  report.residual = std::abs(report.direct - report.integral);
  report.quadrature_budget = x_sigma * abs_sum * error_integral / std::numbers::pi;
  report.dirichlet_budget = x_sigma * dirichlet_tail_bound(stream, sigma, N) * abs_integral / std::numbers::pi;
  double skipped = line.tail_integral();
  for (std::size_t k = count; k < nodes.size(); ++k) skipped += line.weights()[k] * std::abs(line.values()[k]);
  report.truncation_budget = x_sigma * abs_sum * skipped / std::numbers::pi;
  report.budget = report.quadrature_budget + report.dirichlet_budget + report.truncation_budget;
  report.edge_magnitude = std::abs(weight_mellin(Complex(sigma, T)));
  return report;
}

ContourReport contour_identity_residual(const RankinSelbergPair& pair, double x, double T, std::size_t N) {
  const auto stream = rs_coeffs(pair, N);
  const LineTransform line(T);
  return contour_identity(stream, line, x, T, N);
}

double lower_bound_ratio(const CoefficientStream& self_stream, int m, double x, double imag_tol) {
  if (!(x >= 10.0)) throw std::invalid_argument("lower_bound_ratio: x must be at least 10");
  const Complex s = smoothed_sum(self_stream, x);
  if (std::abs(s.imag()) > imag_tol) {
    throw std::logic_error("self-pair smoothed sum has imaginary part " + std::to_string(s.imag()));
  }
  return s.real() * std::log(x) / std::pow(x, 1.0 / m);
}

double lower_bound_ratio(const RepresentationSpec& spec, double x, double imag_tol) {
  const RankinSelbergPair self(spec, spec);
  if (!(x >= 10.0)) throw std::invalid_argument("lower_bound_ratio: x must be at least 10");
  return lower_bound_ratio(rs_coeffs(self, support_length(x)), spec.m(), x, imag_tol);
}

std::optional<PlaceNorm> first_distinguishing_place(const RepresentationSpec& a, const RepresentationSpec& b,
                                                    std::uint64_t max_norm, double tol) {
  if (a.l() != b.l()) throw SpecError("specs over fields of different degree are not comparable");
  const auto past_horizon = [](const RepresentationSpec& s, std::uint64_t norm) {
    const auto h = s.data_horizon();
    return s.l() > 1 && h && norm > *h;
  };
  const Sieve sieve(std::max<std::uint64_t>(max_norm, 2));
  for (std::uint64_t norm = 2; norm <= max_norm; ++norm) {
    const std::uint64_t p = sieve.smallest_factor(norm);
    std::uint64_t rest = norm;
    while (rest % p == 0) rest /= p;
    if (rest != 1) continue;
    if (past_horizon(a, norm)) throw MissingLocalDataError(a.name(), norm);
    if (past_horizon(b, norm)) throw MissingLocalDataError(b.name(), norm);
    if (!a.is_place(norm) && !b.is_place(norm)) continue;
    const PlaceNorm v(norm);
    if (a.m() != b.m()) return v;
    if (!locally_equivalent(a, b, v, tol)) return v;
  }
  return std::nullopt;
}

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::consistent:
      return "consistent";
    case VerdictStatus::inconsistent:
      return "inconsistent";
    case VerdictStatus::no_test:
      return "no test: agreement to horizon";
  }
  return "?";
}

bool VerdictReport::any_inconsistent() const {
  return std::any_of(variants.begin(), variants.end(),
                     [](const VariantVerdict& v) { return v.status == VerdictStatus::inconsistent; });
}

const VariantVerdict& VerdictReport::variant(const std::string& name) const {
  for (const auto& v : variants) {
    if (v.name == name) return v;
  }
  throw std::out_of_range("no verdict variant '" + name + "'");
}

std::vector<std::pair<std::string, double>> threshold_exponents(int M, double epsilon,
                                                                std::optional<double> moreno_exponent) {
  std::vector<std::pair<std::string, double>> out = {
      {"paper", 2.0 * M + epsilon},
      {"wang", 4.0 * M + epsilon},
      {"brumley", 8.5 * M - 4.0 + epsilon},
  };
  if (M == 2 && moreno_exponent) out.emplace_back("moreno_gl2", *moreno_exponent);
  return out;
}

VerdictReport theorem_verdict(const RepresentationSpec& a, const RepresentationSpec& b, const VerdictOptions& options) {
  if (!(options.epsilon > 0.0) || !(options.c > 0.0)) {
    throw std::invalid_argument("theorem_verdict: epsilon and c must be positive");
  }
  VerdictReport report;
  report.left = a.name();
  report.right = b.name();
  report.horizon = options.max_norm;
  report.epsilon = options.epsilon;
  report.c = options.c;
  report.c_left = analytic_conductor(a);
  report.c_right = analytic_conductor(b);
  report.Q = std::max(report.c_left, report.c_right);
  report.M = std::max(a.m(), b.m());
  if (const auto place = first_distinguishing_place(a, b, options.max_norm, options.tol)) {
    report.first_place = place->value();
  }
  for (const auto& [name, d] : threshold_exponents(report.M, options.epsilon, options.moreno_exponent)) {
    VariantVerdict v{name, d, options.c * std::pow(report.Q, d), VerdictStatus::no_test};
    if (report.first_place) {
      v.status = static_cast<double>(*report.first_place) < v.threshold ? VerdictStatus::consistent
                                                                         : VerdictStatus::inconsistent;
    }
    report.variants.push_back(v);
  }
  return report;
}

}  // namespace asmo
