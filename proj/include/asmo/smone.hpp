#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asmo/config.hpp"
#include "asmo/lfunc.hpp"
#include "asmo/mellin.hpp"
#include "asmo/repspec.hpp"

namespace asmo {

// S(x; pi, pi~') = sum_n a(n) w(n/x); finite since w vanishes beyond 3.
Complex smoothed_sum(const CoefficientStream& stream, double x);
Complex smoothed_sum(const RankinSelbergPair& pair, double x);

struct ContourReport {
  double x = 0.0;
  double T = 0.0;
  std::size_t N = 0;
  Complex direct;              // the finite smoothed sum
  Complex integral;            // (1/2pi) int_{-T}^{T} x^s W(s) L_N(s) dt on Re s = 2
  double residual = 0.0;       // |direct - integral|
  double quadrature_budget = 0.0;
  double dirichlet_budget = 0.0;
  double truncation_budget = 0.0;  // from |t| > T, estimated
  double budget = 0.0;             // sum of the three
  double edge_magnitude = 0.0; // |W(2 + iT)|
};

// Compares the smoothed sum against the contour integral on Re s = 2 with the
// Dirichlet series truncated at N. `line` must cover [0, T].
ContourReport contour_identity(const CoefficientStream& stream, const LineTransform& line, double x, double T,
                               std::size_t N);
ContourReport contour_identity_residual(const RankinSelbergPair& pair, double x, double T, std::size_t N);

// S(x; pi, pi~) log x / x^{1/m}.
// Throws when |Im S| exceeds imag_tol.
double lower_bound_ratio(const CoefficientStream& self_stream, int m, double x,
                         double imag_tol = kSelfPairImagTolerance);
double lower_bound_ratio(const RepresentationSpec& spec, double x, double imag_tol = kSelfPairImagTolerance);

// Least place norm <= max_norm at which the local components differ, scanning
// norms in increasing order; nullopt when they agree throughout. Specs of
// different degree differ at the first place.
std::optional<PlaceNorm> first_distinguishing_place(const RepresentationSpec& a, const RepresentationSpec& b,
                                                    std::uint64_t max_norm, double tol = kLocalEquivalenceTolerance);

enum class VerdictStatus { consistent, inconsistent, no_test };

std::string to_string(VerdictStatus status);

struct VariantVerdict {
  std::string name;
  double exponent = 0.0;
  double threshold = 0.0;
  VerdictStatus status = VerdictStatus::no_test;
};

struct VerdictReport {
  std::string left;
  std::string right;
  std::uint64_t horizon = 0;
  std::optional<std::uint64_t> first_place;
  double c_left = 0.0;
  double c_right = 0.0;
  double Q = 0.0;
  int M = 0;
  double epsilon = 0.0;
  double c = 0.0;
  std::vector<VariantVerdict> variants;

  bool any_inconsistent() const;
  const VariantVerdict& variant(const std::string& name) const;
};

struct VerdictOptions {
  double epsilon = 0.1;
  double c = 1.0;
  std::uint64_t max_norm = 10000;
  double tol = kLocalEquivalenceTolerance;
  // Exponent for the GL(2) comparison row; that row is reported only for M = 2
  // and only when an exponent is given.
  std::optional<double> moreno_exponent;
};

// Exponents d of the threshold c Q^d for each variant.
std::vector<std::pair<std::string, double>> threshold_exponents(int M, double epsilon,
                                                                std::optional<double> moreno_exponent = std::nullopt);

VerdictReport theorem_verdict(const RepresentationSpec& a, const RepresentationSpec& b, const VerdictOptions& options);

}  // namespace asmo
