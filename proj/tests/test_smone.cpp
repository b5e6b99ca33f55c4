#include <gtest/gtest.h>

#include <cmath>

#include "asmo/conductor.hpp"
#include "asmo/errors.hpp"
#include "asmo/lfunc.hpp"
#include "asmo/smone.hpp"
#include "oracles.hpp"

using namespace asmo;

namespace {

RankinSelbergPair self_pair(const char* name) {
  const auto spec = catalog_spec(name);
  return RankinSelbergPair(spec, spec);
}

// A degree one spec whose Satake values copy chi5 at primes up to `top`,
// with the value at `flip` negated when flip > 0.
RepresentationSpec chi5_copy(std::uint64_t top, std::uint64_t flip) {
  const auto chi5 = catalog_spec("chi5");
  TableLocalData table;
  for (std::uint64_t p = 2; p <= top; ++p) {
    if (!oracle::is_prime_trial(p)) continue;
    auto a = satake_at(chi5, PlaceNorm(p));
    if (p == flip) a[0] = -a[0];
    table.places[p] = a;
  }
  return RepresentationSpec("copy", 1, 1, 5, chi5.arch_params(), table);
}

}  // namespace

TEST(SmoothedSum, Examples) {
  // zeta: sum of w(n/10) for n < 30 against the reference weight.
  double direct = 0.0;
  for (int n = 1; n < 30; ++n) direct += oracle::weight_reference(n / 10.0);
  const Complex s = smoothed_sum(self_pair("trivial"), 10.0);
  EXPECT_NEAR(s.real(), direct, 1e-13);
  EXPECT_EQ(s.imag(), 0.0);

  EXPECT_EQ(smoothed_sum(self_pair("delta"), 0.25), Complex(0.0, 0.0));
  EXPECT_EQ(smoothed_sum(self_pair("trivial"), 1.0 / 3.0), Complex(0.0, 0.0));

  // Nonnegative coefficients and w >= 1/e on [1, 2].
  const auto dd = self_pair("delta");
  const auto stream = rs_coeffs(dd, 300);
  double plateau = 0.0;
  for (std::size_t n = 100; n <= 200; ++n) plateau += stream.at(n).real();
  const Complex sd = smoothed_sum(stream, 100.0);
  EXPECT_GE(sd.real(), std::exp(-1.0) * plateau);
  EXPECT_GT(plateau, 0.0);
}

TEST(SmoothedSum, ShortStreamRejected) {
  const auto stream = rs_coeffs(self_pair("trivial"), 10);
  EXPECT_THROW(smoothed_sum(stream, 10.0), std::out_of_range);
  EXPECT_THROW(smoothed_sum(stream, 0.0), std::invalid_argument);
}

TEST(SmoothedSum, SelfPairsRealAndAboveFirstTerm) {
  for (const auto& spec : catalog()) {
    const RankinSelbergPair self(spec, spec);
    for (const double x : {1.0, 2.5, 10.0, 100.0}) {
      const Complex s = smoothed_sum(self, x);
      EXPECT_LE(std::abs(s.imag()), 1e-8) << spec.name() << " " << x;
      EXPECT_GE(s.real(), oracle::weight_reference(1.0 / x) - 1e-15) << spec.name() << " " << x;
    }
  }
}

TEST(Contour, Examples) {
  for (const char* name : {"trivial", "delta"}) {
    const auto r = contour_identity_residual(self_pair(name), 20.0, 300.0, 2000);
    EXPECT_LE(r.residual, 1e-3) << name;
    EXPECT_LE(r.residual, r.budget) << name;
    EXPECT_GE(r.quadrature_budget, 0.0);
    EXPECT_GE(r.dirichlet_budget, 0.0);
  }
}

TEST(Contour, EmptySumSide) {
  // The sum is empty; what remains is the part of the line beyond T.
  const auto r = contour_identity_residual(self_pair("trivial"), 0.25, 300.0, 1);
  EXPECT_EQ(r.direct, Complex(0.0, 0.0));
  EXPECT_LE(r.residual, r.quadrature_budget + r.truncation_budget);
  EXPECT_LE(r.residual, 1e-7);
}

TEST(Contour, DoublingTDoesNotHurt) {
  const LineTransform line(600.0);
  for (const char* name : {"trivial", "delta", "chi13"}) {
    const auto stream = rs_coeffs(self_pair(name), 200);
    for (const double x : {3.7, 20.0, 50.0}) {
      const auto a = contour_identity(stream, line, x, 300.0, 200);
      const auto b = contour_identity(stream, line, x, 600.0, 200);
      EXPECT_LE(b.residual, a.residual + a.quadrature_budget) << name << " " << x;
    }
  }
}

TEST(Contour, RejectsBadArguments) {
  const LineTransform line(50.0);
  const auto stream = rs_coeffs(self_pair("trivial"), 100);
  EXPECT_THROW(contour_identity(stream, line, 10.0, 80.0, 100), std::invalid_argument);
  EXPECT_THROW(contour_identity(stream, line, 40.0, 50.0, 100), std::invalid_argument);
}

TEST(LowerBoundRatio, PositiveForCatalog) {
  for (const auto& spec : catalog()) {
    for (const double x : {10.0, 100.0, 1000.0}) {
      EXPECT_GT(lower_bound_ratio(spec, x), 0.0) << spec.name() << " " << x;
    }
  }
  EXPECT_THROW(lower_bound_ratio(catalog_spec("trivial"), 5.0), std::invalid_argument);
}

TEST(LowerBoundRatio, TrivialMatchesDirectSum) {
  const double x = 100.0;
  double direct = 0.0;
  for (int n = 1; n < 300; ++n) direct += oracle::weight_reference(n / x);
  EXPECT_NEAR(lower_bound_ratio(catalog_spec("trivial"), x), direct * std::log(x) / x, 1e-12);
}

TEST(FirstPlace, Examples) {
  const auto chi5 = catalog_spec("chi5");
  const auto chi13 = catalog_spec("chi13");
  EXPECT_FALSE(first_distinguishing_place(chi5, chi5, 10000).has_value());
  ASSERT_TRUE(first_distinguishing_place(chi5, chi13, 100).has_value());
  EXPECT_EQ(first_distinguishing_place(chi5, chi13, 100)->value(), 3u);
  EXPECT_EQ(first_distinguishing_place(catalog_spec("trivial"), catalog_spec("delta"), 100)->value(), 2u);
  EXPECT_FALSE(first_distinguishing_place(chi5, chi13, 2).has_value());
}

TEST(FirstPlace, AgainstOracle) {
  for (const std::uint64_t qa : {5, 13, 17}) {
    for (const std::uint64_t qb : {5, 13, 17}) {
      if (qa == qb) continue;
      std::uint64_t expected = 0;
      for (std::uint64_t p = 2; expected == 0; ++p) {
        if (!oracle::is_prime_trial(p)) continue;
        const int a = p == qa ? 0 : oracle::legendre_by_squares(static_cast<long long>(p), qa);
        const int b = p == qb ? 0 : oracle::legendre_by_squares(static_cast<long long>(p), qb);
        if (a != b) expected = p;
      }
      const auto got = first_distinguishing_place(catalog_spec("chi" + std::to_string(qa)),
                                                  catalog_spec("chi" + std::to_string(qb)), 1000);
      ASSERT_TRUE(got.has_value());
      EXPECT_EQ(got->value(), expected) << qa << " " << qb;
    }
  }
}

TEST(FirstPlace, TableSpecs) {
  const auto chi5 = catalog_spec("chi5");
  EXPECT_FALSE(first_distinguishing_place(chi5, chi5_copy(100, 0), 100).has_value());
  EXPECT_EQ(first_distinguishing_place(chi5, chi5_copy(100, 59), 100)->value(), 59u);
  EXPECT_THROW(first_distinguishing_place(chi5, chi5_copy(100, 0), 200), MissingLocalDataError);
}

TEST(Agreement, EqualLocalDataGivesEqualSums) {
  // Local agreement at every prime below 3x forces S(x; a x b~) = S(x; a x a~).
  const auto chi5 = catalog_spec("chi5");
  const double x = 20.0;
  const auto same = chi5_copy(60, 0);
  const Complex self = smoothed_sum(RankinSelbergPair(chi5, chi5, 1), x);
  const Complex mixed = smoothed_sum(RankinSelbergPair(chi5, same, 1), x);
  EXPECT_LE(std::abs(self - mixed), 1e-10);

  const auto other = chi5_copy(60, 7);
  EXPECT_FALSE(locally_equivalent(chi5, other, PlaceNorm(7), 1e-12));
  const Complex differs = smoothed_sum(RankinSelbergPair(chi5, other, 1), x);
  EXPECT_GT(std::abs(self - differs), 1e-3);
}

TEST(Verdict, Examples) {
  const auto chi5 = catalog_spec("chi5");
  const auto chi13 = catalog_spec("chi13");
  VerdictOptions options;
  options.max_norm = 100;
  const auto v = theorem_verdict(chi5, chi13, options);
  ASSERT_TRUE(v.first_place.has_value());
  EXPECT_EQ(*v.first_place, 3u);
  EXPECT_EQ(v.Q, 13.0);
  EXPECT_EQ(v.M, 1);
  EXPECT_NEAR(v.variant("paper").threshold, std::pow(13.0, 2.1), 1e-12 * std::pow(13.0, 2.1));
  EXPECT_NEAR(v.variant("paper").threshold, 218.3, 0.005 * 218.3);
  EXPECT_EQ(v.variant("paper").status, VerdictStatus::consistent);
  EXPECT_FALSE(v.any_inconsistent());

  const auto tc = theorem_verdict(catalog_spec("trivial"), chi5, options);
  EXPECT_EQ(tc.Q, 5.0);
  EXPECT_EQ(*tc.first_place, 2u);
  EXPECT_NEAR(tc.variant("paper").threshold, 29.37, 0.01);
  EXPECT_EQ(tc.variant("paper").status, VerdictStatus::consistent);

  const auto same = theorem_verdict(chi5, chi5, options);
  EXPECT_FALSE(same.first_place.has_value());
  for (const auto& row : same.variants) EXPECT_EQ(row.status, VerdictStatus::no_test);
  EXPECT_EQ(to_string(VerdictStatus::no_test), "no test: agreement to horizon");

  // A tiny c pushes the threshold below the first place.
  options.c = 1e-3;
  const auto tight = theorem_verdict(chi5, chi13, options);
  EXPECT_EQ(tight.variant("paper").status, VerdictStatus::inconsistent);
  EXPECT_TRUE(tight.any_inconsistent());
}

TEST(Verdict, MorenoRowOnlyForDegreeTwoWithExponent) {
  EXPECT_EQ(threshold_exponents(2, 0.1).size(), 3u);
  EXPECT_EQ(threshold_exponents(2, 0.1, 6.0).size(), 4u);
  EXPECT_EQ(threshold_exponents(1, 0.1, 6.0).size(), 3u);
  VerdictOptions options;
  options.max_norm = 100;
  options.moreno_exponent = 4.0;
  const auto v = theorem_verdict(catalog_spec("delta"), catalog_spec("trivial"), options);
  EXPECT_EQ(v.M, 2);
  EXPECT_EQ(v.variant("moreno_gl2").exponent, 4.0);
}

TEST(Verdict, ThresholdOrdering) {
  for (int M = 1; M <= 6; ++M) {
    for (const double eps : {0.01, 0.1, 1.0}) {
      const auto rows = threshold_exponents(M, eps);
      const double paper = rows[0].second;
      const double wang = rows[1].second;
      const double brumley = rows[2].second;
      EXPECT_LT(paper, wang);
      EXPECT_LE(paper, brumley);
      for (const double Q : {1.5, 13.0, 48.75, 1e4}) {
        EXPECT_LT(std::pow(Q, paper), std::pow(Q, wang));
        EXPECT_LE(std::pow(Q, paper), std::pow(Q, brumley));
      }
    }
  }
}

TEST(Verdict, InvalidOptions) {
  VerdictOptions options;
  options.epsilon = 0.0;
  EXPECT_THROW(theorem_verdict(catalog_spec("chi5"), catalog_spec("chi13"), options), std::invalid_argument);
}
