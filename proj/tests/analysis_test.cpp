#include "gkpw/analysis.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace gkpw;

TEST(Sweep, GridGeometry) {
  const SweepSpec sp{};
  EXPECT_EQ(sp.theta(0), 0.0);
  EXPECT_EQ(sp.theta(90), kPi);
  EXPECT_NEAR(sp.theta(45), kPi / 2, 1e-15);
  EXPECT_NEAR(sp.phi(179), kTwoPi - kTwoPi / 180, 1e-15);
  EXPECT_THROW(sweep(SweepSpec{1, 180}), std::invalid_argument);
  EXPECT_THROW(sweep(SweepSpec{91, 3}), std::invalid_argument);
}

TEST(Sweep, ReferenceValues) {
  const auto s = sweep(SweepSpec{91, 180});
  EXPECT_NEAR(s.at(0, 0), 2.0, 1e-12);
  EXPECT_NEAR(s.at(45, 0), 2.0, 1e-12);
  EXPECT_NEAR(s.at(45, 45), 2.0, 1e-12);  // phi = pi/2
  EXPECT_NEAR(s.min(), 2.0, 1e-12);
  EXPECT_LE(s.max(), 1.0 + std::sqrt(3.0) + 1e-12);
}

TEST(Sweep, QuarterTurnSymmetry) {
  const auto s = sweep(SweepSpec{61, 360});
  for (std::size_t i = 0; i < 61; ++i)
    for (std::size_t j = 0; j < 360; ++j) EXPECT_NEAR(s.at(i, j), s.at(i, (j + 90) % 360), 1e-12);
}

TEST(Sweep, WlnSurfaceIsLogOfAbsSurface) {
  const auto a = sweep(SweepSpec{46, 90, SweepMeasure::kSqrtPiAbsCell});
  const auto w = sweep(SweepSpec{46, 90, SweepMeasure::kWlnCell});
  for (std::size_t k = 0; k < a.values.size(); ++k)
    EXPECT_NEAR(w.values[k], std::log2(a.values[k] / kSqrtPi), 1e-12);
}

TEST(Sweep, Deterministic) {
  const auto a = sweep(SweepSpec{91, 180});
  const auto b = sweep(SweepSpec{91, 180});
  EXPECT_EQ(a.values, b.values);
}

TEST(Extrema, CountsOnDefaultGrid) {
  const auto rep = find_extrema(sweep(SweepSpec{91, 180}));
  EXPECT_NEAR(rep.global_min, 2.0, 1e-12);
  EXPECT_EQ(rep.minima.size(), 6u);
  EXPECT_EQ(rep.maxima.size(), 8u);
  EXPECT_EQ(rep.equatorial_maxima.size(), 4u);
  EXPECT_NEAR(rep.equatorial_max, 1.0 + std::sqrt(2.0), 1e-3);
}

TEST(Extrema, CountsOnFineGrid) {
  const auto rep = find_extrema(sweep(SweepSpec{181, 360}));
  EXPECT_EQ(rep.minima.size(), 6u);
  EXPECT_EQ(rep.maxima.size(), 8u);
  ASSERT_EQ(rep.equatorial_maxima.size(), 4u);
  EXPECT_NEAR(rep.equatorial_max, 1.0 + std::sqrt(2.0), 1e-12);
  for (const auto& c : rep.equatorial_maxima) {
    EXPECT_NEAR(std::fmod(c.representative.phi, kPi / 2), kPi / 4, 1e-12);
  }
  const double tt = std::acos(1.0 / std::sqrt(3.0));
  for (const auto& c : rep.maxima) {
    const double th = c.representative.theta;
    EXPECT_LT(std::min(std::abs(th - tt), std::abs(th - (kPi - tt))), kPi / 180);
  }
}

TEST(Extrema, PolesFormSingleClusters) {
  const auto rep = find_extrema(sweep(SweepSpec{91, 180}));
  std::size_t pole_clusters = 0;
  for (const auto& c : rep.minima) {
    if (c.representative.theta == 0.0 || c.representative.theta == kPi) {
      ++pole_clusters;
      EXPECT_EQ(c.members.size(), 180u);
    }
  }
  EXPECT_EQ(pole_clusters, 2u);
}

TEST(Extrema, NoEquatorRowForEvenThetaCount) {
  const auto rep = find_extrema(sweep(SweepSpec{90, 180}));
  EXPECT_TRUE(rep.equatorial_maxima.empty());
}

TEST(Table1, Rows) {
  const auto rows = table1_report();
  ASSERT_EQ(rows.size(), 5u);
  const double expected[] = {2.0, 2.0, 2.0, 1.0 + std::sqrt(2.0), 1.0 + std::sqrt(3.0)};
  const char* displays[] = {"|0>", "|+>", "|i>", "|H>", "|T>"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_NEAR(rows[i].sqrtpi_abs_integral, expected[i], 1e-12);
    EXPECT_EQ(rows[i].display, displays[i]);
  }
  EXPECT_EQ(rows[3].symbolic, "1+sqrt(2)");
  EXPECT_EQ(rows[4].symbolic, "1+sqrt(3)");
}

TEST(Convergence, MonotoneAndClose) {
  for (auto l : {StateLabel::kZero, StateLabel::kHMagic, StateLabel::kTMagic}) {
    const auto s = named_state(l).angles;
    const auto rows = convergence_study(s, {0.3, 0.2, 0.1});
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_GT(rows[0].error, rows[1].error) << label_name(l);
    EXPECT_GT(rows[1].error, rows[2].error) << label_name(l);
    EXPECT_LT(rows[2].error / ideal_negativity_ratio(s), 0.05) << label_name(l);
  }
}

TEST(Convergence, IdealRatio) {
  EXPECT_NEAR(ideal_negativity_ratio(named_state(StateLabel::kZero).angles), 2.0, 1e-12);
  EXPECT_NEAR(ideal_negativity_ratio(named_state(StateLabel::kTMagic).angles), 1.0 + std::sqrt(3.0), 1e-12);
}

TEST(Convergence, RejectsBadSigmaLists) {
  const auto s = named_state(StateLabel::kZero).angles;
  EXPECT_THROW(convergence_study(s, {}), std::invalid_argument);
  EXPECT_THROW(convergence_study(s, {0.1, 0.2}), std::invalid_argument);
  EXPECT_THROW(convergence_study(s, {0.2, 0.2}), std::invalid_argument);
}
