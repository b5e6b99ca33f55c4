#include <gtest/gtest.h>

#include <cmath>

#include "asmo/conductor.hpp"
#include "asmo/errors.hpp"
#include "asmo/repspec.hpp"

using namespace asmo;

TEST(AnalyticConductor, Examples) {
  EXPECT_DOUBLE_EQ(analytic_conductor(catalog_spec("trivial")), 1.0);
  EXPECT_DOUBLE_EQ(analytic_conductor(catalog_spec("delta")), 48.75);
  EXPECT_DOUBLE_EQ(analytic_conductor(catalog_spec("chi13")), 13.0);
}

TEST(AnalyticConductor, AtLeastQ) {
  for (const auto& spec : catalog()) {
    for (double t = -50.0; t <= 50.0; t += 2.5) {
      EXPECT_GE(analytic_conductor(spec, t), static_cast<double>(spec.q_arith()));
    }
  }
}

TEST(PairConductor, Examples) {
  const auto t = catalog_spec("trivial");
  const auto tt = rs_conductor(RankinSelbergPair(t, t));
  EXPECT_EQ(tt.c_pair, 1.0);
  EXPECT_EQ(tt.bound, 1.0);
  EXPECT_TRUE(tt.holds);

  const auto d = catalog_spec("delta");
  const auto dd = rs_conductor(RankinSelbergPair(d, d));
  EXPECT_EQ(dd.c_pair, 12.0 * 13.0 * 13.0 * 14.0);
  EXPECT_EQ(dd.c_pair, 28392.0);
  EXPECT_EQ(dd.bound, 48.75 * 48.75 * 48.75 * 48.75);
  EXPECT_TRUE(dd.holds);

  const auto c = rs_conductor(RankinSelbergPair(catalog_spec("chi5"), catalog_spec("chi13"), 65));
  EXPECT_EQ(c.c_pair, 65.0);
  EXPECT_EQ(c.bound, 65.0);
  EXPECT_TRUE(c.holds);
}

TEST(PairConductor, HoldsForCatalogAndSwapSymmetric) {
  for (const auto& a : catalog()) {
    for (const auto& b : catalog()) {
      const auto ab = rs_conductor(RankinSelbergPair(a, b));
      const auto ba = rs_conductor(RankinSelbergPair(b, a));
      EXPECT_TRUE(ab.holds) << a.name() << " " << b.name();
      EXPECT_NEAR(ab.c_pair_at_zero, ba.c_pair_at_zero, 1e-12 * ab.c_pair_at_zero);
      EXPECT_GE(ab.c_pair, 1.0);
    }
  }
}

TEST(PairConductor, TDependence) {
  const auto d = catalog_spec("delta");
  const auto r = rs_conductor(RankinSelbergPair(d, d), 10.0);
  const double expected = std::hypot(10.0, 11.0) + 1.0;
  EXPECT_NEAR(r.c_pair, expected * std::pow(std::hypot(10.0, 12.0) + 1.0, 2) * (std::hypot(10.0, 13.0) + 1.0),
              1e-9 * r.c_pair);
  EXPECT_EQ(r.c_pair_at_zero, 28392.0);
}

TEST(PairConductor, UnresolvedQ) {
  const RepresentationSpec odd("odd", 1, 1, 3, {Complex(0.0, 0.0)}, TableLocalData{});
  EXPECT_THROW(rs_conductor(RankinSelbergPair(odd, catalog_spec("chi5"))), SpecError);
}
