#include <gtest/gtest.h>

#include <cmath>

#include "asmo/errors.hpp"
#include "asmo/mellin.hpp"
#include "oracles.hpp"

using namespace asmo;

namespace {

// |W(sigma + it)| computed separately with mpmath at 30 digits (tanh-sinh on
// the pieces (0,1], [1,2], [2,3) of the same weight).
struct Reference {
  double sigma;
  double t;
  double abs_w;
};

constexpr Reference kReference[] = {
    {2.0, 0.0, 1.12441251767},      {2.0, 10.0, 0.092959370008},     {2.0, 40.0, 0.00325111054545},
    {2.0, 100.0, 8.63482237806e-5}, {2.0, 200.0, 1.77614956304e-6},  {2.0, 400.0, 8.96059524785e-9},
    {-5.0, 0.0, 23.9961565778},     {-5.0, 10.0, 0.0127878962288},   {-5.0, 40.0, 6.45870842413e-6},
    {-5.0, 100.0, 6.13576473381e-8}, {-5.0, 200.0, 8.80042502521e-10},
};

// Centered k-th difference with step h.
template <typename F>
double central_difference(F&& f, double x, int k, double h) {
  double acc = 0.0;
  double binom = 1.0;
  for (int i = 0; i <= k; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    acc += sign * binom * f(x + (0.5 * k - i) * h);
    binom = binom * (k - i) / (i + 1);
  }
  return acc / std::pow(h, k);
}

}  // namespace

TEST(Weight, PaperBranches) {
  EXPECT_EQ(weight(-1.0), 0.0);
  EXPECT_EQ(weight(0.0), 0.0);
  EXPECT_EQ(weight(3.0), 0.0);
  EXPECT_EQ(weight(4.0), 0.0);
  EXPECT_DOUBLE_EQ(weight(0.5), std::exp(-2.0));
  EXPECT_DOUBLE_EQ(weight(2.5), std::exp(-2.0));
  EXPECT_DOUBLE_EQ(weight(1.0), std::exp(-1.0));
  EXPECT_DOUBLE_EQ(weight(2.0), std::exp(-1.0));
}

TEST(Weight, InvariantsAndReference) {
  for (double x = -1.0; x <= 4.0; x += 1e-3) {
    EXPECT_GE(weight(x), 0.0);
    EXPECT_NEAR(weight(x), oracle::weight_reference(x), 1e-15) << x;
    if (x >= 1.0 && x <= 2.0) EXPECT_GE(weight(x), std::exp(-1.0) * (1.0 - 1e-15)) << x;
  }
  EXPECT_DOUBLE_EQ(smooth_step(1.0), 0.0);
  EXPECT_DOUBLE_EQ(smooth_step(2.0), 1.0);
  EXPECT_NEAR(smooth_step(1.5), 0.5, 1e-15);
}

TEST(Weight, DerivativesMatchBranchesAcrossKnots) {
  // Near x = 1 and x = 2 the weight coincides with the analytic branch
  // continued across the knot, so finite differences of order <= 6 taken on
  // stencils straddling the knot agree with those of the branch.
  constexpr double h = 1e-3;
  const auto left = [](double x) { return std::exp(-1.0 / x); };
  const auto right = [](double x) { return std::exp(-1.0 / (3.0 - x)); };
  for (int k = 1; k <= 6; ++k) {
    for (const double offset : {-2 * h, -h, 0.0, h, 2 * h}) {
      const double at1 = central_difference(weight, 1.0 + offset, k, h) - central_difference(left, 1.0 + offset, k, h);
      const double at2 =
          central_difference(weight, 2.0 + offset, k, h) - central_difference(right, 2.0 + offset, k, h);
      EXPECT_LE(std::abs(at1), 1e-6) << "k=" << k << " offset=" << offset;
      EXPECT_LE(std::abs(at2), 1e-6) << "k=" << k << " offset=" << offset;
    }
  }
}

TEST(WeightMellin, MassAndFirstMoment) {
  const double mass = oracle::simpson(oracle::weight_reference, 0.0, 3.0, 60000);
  const double moment = oracle::simpson([](double x) { return x * oracle::weight_reference(x); }, 0.0, 3.0, 60000);
  const auto w1 = weight_mellin_detailed(1.0);
  const auto w2 = weight_mellin_detailed(2.0);
  EXPECT_LE(w1.error, 1e-10);
  EXPECT_GT(w1.value.real(), std::exp(-1.0));
  EXPECT_NEAR(w1.value.real(), mass, 1e-9);
  EXPECT_NEAR(w2.value.real(), moment, 1e-9);
  EXPECT_GT(w2.value.real(), std::exp(-1.0) * 1.5);
  EXPECT_LT(w2.value.real(), 3.0 * w1.value.real());
}

TEST(WeightMellin, MatchesHighPrecisionReference) {
  for (const auto& ref : kReference) {
    const auto w = weight_mellin_detailed(Complex(ref.sigma, ref.t));
    EXPECT_LE(w.error, 1e-10);
    EXPECT_NEAR(std::abs(w.value), ref.abs_w, 1e-10) << ref.sigma << "+" << ref.t << "i";
    if (ref.abs_w > 1e-8) EXPECT_NEAR(std::abs(w.value) / ref.abs_w, 1.0, 1e-6) << ref.sigma << "+" << ref.t << "i";
  }
}

TEST(WeightMellin, ConjugateSymmetry) {
  for (double t : {0.5, 7.0, 90.0}) {
    const auto plus = weight_mellin(Complex(2.0, t));
    const auto minus = weight_mellin(Complex(2.0, -t));
    EXPECT_LE(std::abs(plus - std::conj(minus)), 1e-12);
  }
}

TEST(WeightMellin, DecayOnLeftLine) {
  EXPECT_LE(std::abs(weight_mellin(Complex(-5.0, 40.0))), 1e-3 * std::abs(weight_mellin(Complex(-5.0, 0.0))));
  for (const int A : {2, 4, 6}) {
    double sup = 0.0;
    double at10 = 0.0;
    double at500 = 0.0;
    for (double t = 10.0; t <= 500.0; t += 10.0) {
      const double v = std::abs(weight_mellin(Complex(-5.0, t))) * std::pow(1.0 + t, A);
      sup = std::max(sup, v);
      if (t == 10.0) at10 = v;
      if (t == 500.0) at500 = v;
    }
    EXPECT_TRUE(std::isfinite(sup));
    EXPECT_LE(at500, at10) << "A=" << A;
  }
}

TEST(WeightMellin, ReportsFailureToConverge) {
  WeightSpec spec;
  spec.abs_tolerance = 1e-30;
  try {
    weight_mellin_detailed(Complex(2.0, 5.0), spec);
    FAIL() << "expected QuadratureError";
  } catch (const QuadratureError& e) {
    EXPECT_GT(e.achieved(), 1e-30);
    EXPECT_NE(std::string(e.what()).find("achieved error"), std::string::npos);
  }
}

TEST(LogTrapezoid, AgreesWithAdaptiveQuadrature) {
  for (const double sigma : {2.0, 0.5, -5.0}) {
    const LogTrapezoid rule(sigma);
    for (double t = 0.0; t <= 600.0; t += 37.5) {
      const auto a = rule.evaluate(t);
      const auto b = weight_mellin_detailed(Complex(sigma, t));
      EXPECT_LE(std::abs(a.value - b.value), 1e-10) << sigma << " " << t;
      EXPECT_LE(a.error, 1e-12);
    }
  }
}

TEST(Roundtrip, Examples) {
  EXPECT_LE(mellin_roundtrip(1.5, 200.0), 1e-6);
  EXPECT_LE(mellin_roundtrip(2.999, 200.0), 1e-4);
  EXPECT_LE(mellin_roundtrip(5.0, 200.0), 1e-6);
}

TEST(Roundtrip, GridAtT400) {
  const LineTransform line(400.0);
  for (int i = 1; i <= 29; ++i) {
    const double x = 0.1 * i;
    EXPECT_LE(std::abs(line.invert(x) - weight(x)), 1e-6) << x;
  }
  EXPECT_LE(line.error_integral(), 1e-10);
  EXPECT_NEAR(line.edge_magnitude(), 8.96059524785e-9, 1e-15);
}

TEST(LineQuadrature, IntegratesPolynomialsAndCoversRange) {
  std::vector<double> nodes;
  std::vector<double> weights;
  line_quadrature(7.0, 2.0, nodes, weights);
  double sum = 0.0;
  double cubic = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    EXPECT_GT(nodes[i], 0.0);
    EXPECT_LT(nodes[i], 7.0);
    if (i > 0) EXPECT_GT(nodes[i], nodes[i - 1]);
    sum += weights[i];
    cubic += weights[i] * nodes[i] * nodes[i] * nodes[i];
  }
  EXPECT_NEAR(sum, 7.0, 1e-13);
  EXPECT_NEAR(cubic, std::pow(7.0, 4) / 4.0, 1e-10);
}
