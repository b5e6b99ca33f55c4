#include "asmo/report.hpp"

namespace asmo::report {
namespace {

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json complex(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json coefficients(const CoefficientStream& stream) {
  Json out;
  out["source"] = stream.source();
  out["length"] = stream.length();
  out["degree"] = stream.degree();
  out["theta"] = stream.theta();
  Json rows = Json::array();
  for (std::size_t n = 1; n <= stream.length(); ++n) rows.push_back(Json::array({n, complex(stream.at(n))}));
  out["coefficients"] = rows;
  return out;
}

Json conductor(const ConductorReport& r) {
  Json out;
  out["t"] = r.t;
  out["c_left"] = r.c_left;
  out["c_right"] = r.c_right;
  out["c_pair"] = r.c_pair;
  out["c_pair_at_zero"] = r.c_pair_at_zero;
  out["bound"] = r.bound;
  out["holds"] = r.holds;
  return out;
}

Json contour(const ContourReport& r) {
  Json out;
  out["x"] = r.x;
  out["T"] = r.T;
  out["N"] = r.N;
  out["direct"] = complex(r.direct);
  out["integral"] = complex(r.integral);
  out["residual"] = r.residual;
  out["quadrature_budget"] = r.quadrature_budget;
  out["dirichlet_budget"] = r.dirichlet_budget;
  out["truncation_budget"] = r.truncation_budget;
  out["budget"] = r.budget;
  out["edge_magnitude"] = r.edge_magnitude;
  return out;
}

Json admissible(const AdmissibleLine& line, double exclusion_radius) {
  Json out;
  out["n"] = line.n;
  out["H"] = line.H;
  out["clearance"] = line.clearance;
  out["exclusion_radius"] = exclusion_radius;
  return out;
}

Json growth(const GrowthReport& r) {
  Json out;
  out["H"] = r.H;
  out["stirling_threshold"] = r.stirling_threshold;
  out["max_ratio"] = optional_number(r.max_ratio);
  out["max_deviation"] = optional_number(r.max_deviation);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j;
    j["t"] = row.t;
    j["abs_g"] = row.abs_g;
    j["ratio"] = row.ratio;
    j["prediction"] = row.prediction;
    j["deviation"] = row.deviation;
    rows.push_back(j);
  }
  out["rows"] = rows;
  return out;
}

Json mellin(Complex s, const MellinValue& w) {
  Json out;
  out["s"] = complex(s);
  out["W"] = complex(w.value);
  out["abs_W"] = std::abs(w.value);
  out["error"] = w.error;
  return out;
}

Json verdict(const VerdictReport& r) {
  Json out;
  out["left"] = r.left;
  out["right"] = r.right;
  out["horizon"] = r.horizon;
  out["first_place"] = r.first_place ? Json(*r.first_place) : Json("none <= " + std::to_string(r.horizon));
  out["c_left"] = r.c_left;
  out["c_right"] = r.c_right;
  out["Q"] = r.Q;
  out["M"] = r.M;
  out["epsilon"] = r.epsilon;
  out["c"] = r.c;
  Json variants = Json::array();
  for (const auto& v : r.variants) {
    Json j;
    j["name"] = v.name;
    j["exponent"] = v.exponent;
    j["threshold"] = v.threshold;
    j["status"] = to_string(v.status);
    variants.push_back(j);
  }
  out["variants"] = variants;
  out["any_inconsistent"] = r.any_inconsistent();
  return out;
}

Json envelope(const std::string& command, const Tolerances& tolerances, Json payload) {
  Json out;
  out["command"] = command;
  out["tolerances"] = tolerances.to_json();
  out["result"] = std::move(payload);
  return out;
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace asmo::report
