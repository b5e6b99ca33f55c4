#include "asmo/conductor.hpp"

#include <cmath>

#include "asmo/errors.hpp"

namespace asmo {
namespace {

double conductor_product(std::uint64_t q, const std::vector<Complex>& params, double t) {
  double c = static_cast<double>(q);
  for (const auto& b : params) c *= 1.0 + std::abs(Complex(0.0, t) + b);
  return c;
}

}  // namespace

double analytic_conductor(const RepresentationSpec& spec, double t) {
  return conductor_product(spec.q_arith(), spec.arch_params(), t);
}

ConductorReport rs_conductor(const RankinSelbergPair& pair, double t, double slack) {
  const auto q = pair.q_pair();
  if (!q) {
    throw SpecError("pair conductor q for " + pair.label() +
                    " is not determined by the catalog; supply it explicitly");
  }
  ConductorReport report;
  report.t = t;
  report.c_left = analytic_conductor(pair.left());
  report.c_right = analytic_conductor(pair.right());
  report.c_pair = conductor_product(*q, pair.arch_params(), t);
  report.c_pair_at_zero = conductor_product(*q, pair.arch_params(), 0.0);
  report.bound = std::pow(report.c_left, pair.right().m()) * std::pow(report.c_right, pair.left().m());
  report.holds = report.c_pair_at_zero <= report.bound * (1.0 + slack);
  return report;
}

}  // namespace asmo
