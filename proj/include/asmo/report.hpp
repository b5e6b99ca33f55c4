#pragma once

#include <string>

#include <json.hpp>

#include "asmo/archimedean.hpp"
#include "asmo/conductor.hpp"
#include "asmo/config.hpp"
#include "asmo/lfunc.hpp"
#include "asmo/mellin.hpp"
#include "asmo/smone.hpp"

// Structured reports share the spec files' conventions: JSON objects with a
// fixed field order, complex numbers as [re, im].
namespace asmo::report {

using Json = nlohmann::ordered_json;

Json complex(const Complex& z);

Json coefficients(const CoefficientStream& stream);
Json conductor(const ConductorReport& r);
Json contour(const ContourReport& r);
Json admissible(const AdmissibleLine& line, double exclusion_radius);
Json growth(const GrowthReport& r);
Json mellin(Complex s, const MellinValue& w);
Json verdict(const VerdictReport& r);

// Wraps a payload with the command name and the tolerances in force.
Json envelope(const std::string& command, const Tolerances& tolerances, Json payload);

// Pretty-printed with a trailing newline.
std::string render(const Json& doc);

}  // namespace asmo::report
