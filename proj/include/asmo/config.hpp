#pragma once

#include <json.hpp>

#include "asmo/mellin.hpp"

namespace asmo {

// Default tolerances. Library entry points take these as defaults; the CLI
// lets each be overridden and echoes the values it used in every report.
inline constexpr double kMellinAbsTolerance = 1e-10;
inline constexpr double kMellinLogStep = 1e-3;
inline constexpr double kLocalEquivalenceTolerance = 1e-12;
inline constexpr double kSelfPairImagTolerance = 1e-8;
inline constexpr double kConductorSlack = 1e-12;

// Smallest value accepted for a tolerance override.
inline constexpr double kMinToleranceOverride = 1e-14;

static_assert(WeightSpec{}.abs_tolerance == kMellinAbsTolerance);
static_assert(WeightSpec{}.log_step == kMellinLogStep);

struct Tolerances {
  double mellin_abs = kMellinAbsTolerance;
  double mellin_log_step = kMellinLogStep;
  double local_equivalence = kLocalEquivalenceTolerance;
  double self_pair_imag = kSelfPairImagTolerance;
  double conductor_slack = kConductorSlack;

  WeightSpec weight_spec() const {
    WeightSpec spec;
    spec.abs_tolerance = mellin_abs;
    spec.log_step = mellin_log_step;
    return spec;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json out;
    out["mellin_abs"] = mellin_abs;
    out["mellin_log_step"] = mellin_log_step;
    out["local_equivalence"] = local_equivalence;
    out["self_pair_imag"] = self_pair_imag;
    out["conductor_slack"] = conductor_slack;
    return out;
  }
};

}  // namespace asmo
