#pragma once

#include "asmo/config.hpp"
#include "asmo/repspec.hpp"

namespace asmo {

// C(pi; t) = q_pi prod_j (1 + |it + b_pi(j)|).
double analytic_conductor(const RepresentationSpec& spec, double t = 0.0);

struct ConductorReport {
  double t = 0.0;
  double c_left = 0.0;          // C(pi)
  double c_right = 0.0;         // C(pi')
  double c_pair = 0.0;          // C(pi, pi~'; t)
  double c_pair_at_zero = 0.0;  // C(pi, pi~')
  double bound = 0.0;           // C(pi)^{m'} C(pi')^{m}
  bool holds = false;           // c_pair_at_zero <= bound (1 + slack)
};

// Throws SpecError when the pair conductor q_{pi x pi~'} cannot be resolved.
ConductorReport rs_conductor(const RankinSelbergPair& pair, double t = 0.0, double slack = kConductorSlack);

}  // namespace asmo
