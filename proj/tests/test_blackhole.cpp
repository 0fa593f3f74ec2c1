// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "phicx/blackhole.hpp"

namespace phicx::blackhole {
namespace {

const Quantity kSolar = constants().solar_mass;

TEST(BlackHole, SolarMassValues) {
  const auto r = characterize(kSolar);
  EXPECT_LE(oracle::rel_err(r.radius.value(), 2954.0077364910992), 1e-13);
  EXPECT_LE(oracle::rel_err(r.entropy_nats, 1.0494297066288977e77), 1e-13);
  EXPECT_LE(oracle::rel_err(r.entropy_bits, 1.5140070335150705e77), 1e-13);
  EXPECT_LE(oracle::rel_err(r.temperature.value(), 6.168677824358302e-8), 1e-13);
  EXPECT_LE(oracle::rel_err(r.lifetime.value(), 6.617961757605734e74), 1e-13);
  EXPECT_LE(oracle::rel_err(r.lifetime_years, 2.0971055332489586e67), 1e-13);
  EXPECT_LE(oracle::rel_err(r.ops_per_second.value(), 1.0791024608687542e81), 1e-13);
  EXPECT_LE(oracle::rel_err(r.total_ops, 7.141458818567653e155), 1e-13);
  EXPECT_LE(oracle::rel_err(r.page_time_entropy.value(), 0.6464466094067262 * 6.617961757605734e74), 1e-13);
  EXPECT_EQ(r.page_time_paper.value(), 0.5 * r.lifetime.value());
}

TEST(BlackHole, LifetimeWithinFivePercentOfQuotedFigure) {
  EXPECT_LE(std::abs(characterize(kSolar).lifetime_years / 2.140e67 - 1.0), 0.05);
}

TEST(BlackHole, ThermodynamicIdentities) {
  const auto& k = constants();
  for (double m : {1e-3, 1.0, 1e6, 1e12, k.solar_mass.value(), 1e40}) {
    const auto r = characterize(kilograms(m));
    const double mc2 = m * k.c.value() * k.c.value();
    EXPECT_NEAR(r.free_energy.value() / mc2, 0.5, 1e-12);
    EXPECT_LE(oracle::rel_err(r.bit_flip_time.value(),
                              std::numbers::pi * std::numbers::pi * r.radius.value() / k.c.value()),
              1e-12);
    // Time to flip every one of the S degrees of freedom once, serially.
    EXPECT_LE(oracle::rel_err(r.bit_flip_time.value(), r.entropy_nats / r.ops_per_second.value()), 1e-12);
    EXPECT_LE(oracle::rel_err(r.temperature.value() * k.kB() * r.entropy_nats, 0.5 * mc2), 1e-12);
  }
}

TEST(BlackHole, ScalingUnderMassDoubling) {
  for (double m : {1.0, 1e6, constants().solar_mass.value()}) {
    const auto a = characterize(kilograms(m));
    const auto b = characterize(kilograms(2 * m));
    EXPECT_NEAR(b.lifetime.value() / a.lifetime.value(), 8.0, 8e-12);
    EXPECT_NEAR(b.total_ops / a.total_ops, 16.0, 16e-12);
    EXPECT_NEAR(b.radius.value() / a.radius.value(), 2.0, 2e-12);
    EXPECT_NEAR(b.entropy_nats / a.entropy_nats, 4.0, 4e-12);
    EXPECT_NEAR(a.temperature.value() / b.temperature.value(), 2.0, 2e-12);
  }
}

TEST(BlackHole, RejectsNonPositiveMass) {
  EXPECT_THROW(characterize(kilograms(0)), Error);
  try {
    schwarzschild_radius(kilograms(-1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonPositiveMass);
  }
  EXPECT_THROW(schwarzschild_radius(joules(1)), Error);
}

TEST(MaxErrorRate, SyntheticCaseMatchesNewtonOracle) {
  const double eps = max_error_rate_for(1e6, 1e3);
  EXPECT_LE(oracle::rel_err(eps, oracle::newton_binary_entropy_inverse(1e-3)), 1e-12);
  EXPECT_LE(oracle::rel_err(eps, 6.515314290334493e-5), 1e-12);
  EXPECT_EQ(max_error_rate_for(10, 20), 0.5);
}

TEST(MaxErrorRate, DecreasingInMassAndSaturatesCapacity) {
  double prev = 0.5;
  for (int e = 1; e <= 40; ++e) {
    const Quantity m = kilograms(std::pow(10.0, e));
    const double eps = max_error_rate(m);
    EXPECT_LT(eps, prev) << "M = 1e" << e;
    prev = eps;
    const double lhs = measures::binary_entropy_bits(eps) * total_ops(m);
    EXPECT_LE(oracle::rel_err(lhs, entropy_bits(m)), 1e-9);
  }
  EXPECT_EQ(max_error_rate(kilograms(1e-9)), 0.5);
}

TEST(Evaporation, ClosedFormMatchesIntegration) {
  const auto& k = constants();
  const double m0 = 1e6;
  const double t_m = lifetime(kilograms(m0)).value();
  const double rate = k.hbar.value() * std::pow(k.c.value(), 4) /
                      (15360.0 * std::numbers::pi * k.G.value() * k.G.value());
  for (double f : {0.1, 0.5, 0.9}) {
    const double closed = mass_at_time(kilograms(m0), seconds(f * t_m)).value();
    EXPECT_LE(oracle::rel_err(closed, oracle::integrate_mass_loss(m0, rate, f * t_m, 20000)), 1e-9);
  }
  EXPECT_EQ(mass_at_time(kilograms(m0), seconds(0)).value(), m0);
  EXPECT_EQ(mass_at_time(kilograms(m0), seconds(t_m)).value(), 0.0);
  EXPECT_THROW(mass_at_time(kilograms(m0), seconds(1.01 * t_m)), Error);
}

TEST(PageCurve, EndpointsAndPeak) {
  const auto s = page_curve(kSolar, 10001);
  ASSERT_EQ(s.size(), 10001u);
  EXPECT_EQ(s.front().radiation_entropy_bits, 0.0);
  EXPECT_EQ(s.back().radiation_entropy_bits, 0.0);
  EXPECT_EQ(s.back().mass_kg, 0.0);
  std::size_t peak = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i].radiation_entropy_bits > s[peak].radiation_entropy_bits) peak = i;
  const double t_m = s.back().t_seconds;
  EXPECT_LE(std::abs(s[peak].t_seconds / t_m - kPageCrossoverFraction), 1e-4);
  EXPECT_NEAR(kPageCrossoverFraction, 0.6464466094067262, 1e-15);
  EXPECT_NEAR(mass_at_time(kSolar, seconds(kPageCrossoverFraction * t_m)).value() / kSolar.value(),
              0.70710678118654757, 1e-12);
}

TEST(PageCurve, CsvLayout) {
  std::ostringstream os;
  write_timeline_csv(os, page_curve(kilograms(1e6), 3));
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t_seconds,mass_kg,hole_entropy_bits,radiation_entropy_bits");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 3);
  }
  EXPECT_EQ(rows, 3);
}

}  // namespace
}  // namespace phicx::blackhole
