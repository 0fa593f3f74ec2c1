// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "phicx/units.hpp"

namespace phicx {
namespace {

TEST(Quantity, MultiplyDivideAdd) {
  const Quantity force = kilograms(2) * Quantity(3, dim::acceleration);
  EXPECT_EQ(force.dim(), dim::force);
  EXPECT_DOUBLE_EQ(force.in(unit::newton), 6.0);

  const Quantity power = joules(6) / seconds(2);
  EXPECT_EQ(power.dim(), dim::power);
  EXPECT_DOUBLE_EQ(power.in(unit::watt), 3.0);

  EXPECT_DOUBLE_EQ(quantity_add(joules(1), joules(2)).value(), 3.0);
}

TEST(Quantity, AddingMismatchedDimensionsThrows) {
  try {
    quantity_add(joules(1), metres(1));
    FAIL() << "expected DimensionMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
  EXPECT_THROW((void)(joules(1) - seconds(1)), Error);
  EXPECT_THROW((void)joules(1).in(unit::watt), Error);
}

TEST(Quantity, RejectsNonFiniteMagnitudes) {
  EXPECT_THROW(Quantity(std::nan(""), dim::mass), Error);
  EXPECT_THROW(Quantity(INFINITY, dim::mass), Error);
}

TEST(Quantity, MulThenDivRestoresDimension) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const Dimension a(e(rng), e(rng), e(rng), e(rng), e(rng), e(rng));
    const Dimension b(e(rng), e(rng), e(rng), e(rng), e(rng), e(rng));
    const Quantity qa(1.5, a), qb(2.5, b);
    EXPECT_EQ(((qa * qb) / qb).dim(), a);
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(EntropyConvert, NatsBitsAndThermodynamic) {
  EXPECT_NEAR(entropy_convert(nats(1), EntropyUnit::Bits), 1.4426950408889634, 1e-15);
  // k_B ln 2 from an arbitrary-precision evaluation with the pinned k_B.
  EXPECT_NEAR(entropy_convert(bits(1), EntropyUnit::JoulesPerKelvin), 9.569929616929079e-24, 1e-37);
  EXPECT_EQ(entropy_convert(bits(0), EntropyUnit::Nats), 0.0);
  const Quantity thermal(constants().kB(), dim::thermal_entropy);
  EXPECT_NEAR(entropy_convert(thermal, EntropyUnit::Nats), 1.0, 1e-15);
  EXPECT_THROW(entropy_convert(joules(1), EntropyUnit::Bits), Error);
}

TEST(EntropyConvert, BitsNatsRoundTrip) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-30, 30);
  for (int i = 0; i < 500; ++i) {
    const double b = std::pow(10.0, u(rng));
    const double n = entropy_convert(bits(b), EntropyUnit::Nats);
    const double back = entropy_convert(nats(n), EntropyUnit::Bits);
    EXPECT_LE(oracle::rel_err(back, b), 1e-12);
  }
}

TEST(Constants, PinnedValues) {
  const auto& k = constants();
  EXPECT_EQ(k.c.value(), 299792458.0);
  EXPECT_EQ(k.hbar.value(), 1.054571817e-34);
  EXPECT_EQ(k.G.value(), 6.67430e-11);
  EXPECT_EQ(k.kB(), 1.380649e-23);
  EXPECT_EQ(k.solar_mass.value(), 1.98892e30);
  EXPECT_EQ(k.seconds_per_year.value(), 3.15576e7);
  // sqrt(hbar c / G) at 40 digits: 2.176434342051126668...e-8
  EXPECT_LE(oracle::rel_err(k.planck_mass.value(), 2.176434342051126669e-8), 1e-15);
  EXPECT_LE(oracle::rel_err(k.planck_length.value(), 1.616255023928550051e-35), 1e-15);
  EXPECT_NEAR(k.planck_mass.value() * k.planck_mass.value() * k.G.value() / (k.hbar.value() * k.c.value()),
              1.0, 1e-10);
  EXPECT_LE(constants_self_check(), 1e-10);
}

TEST(Constants, OverrideFileFallsBackToPinned) {
  std::istringstream in("# comment\nsolar_mass = 2e30\n\n  G = 6.674e-11  # trailing\n");
  const Constants k = parse_constants_override(in);
  EXPECT_EQ(k.solar_mass.value(), 2e30);
  EXPECT_EQ(k.G.value(), 6.674e-11);
  EXPECT_EQ(k.hbar.value(), constants().hbar.value());
  EXPECT_LE(oracle::rel_err(k.planck_mass.value(), std::sqrt(k.hbar.value() * k.c.value() / 6.674e-11)), 1e-15);
}

TEST(Constants, OverrideFileErrorsArePositioned) {
  std::istringstream bad_key("c = 3e8\nfoo = 1\n");
  try {
    parse_constants_override(bad_key, "over.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ConfigError);
    EXPECT_NE(std::string(e.what()).find("over.txt:2"), std::string::npos);
  }
  std::istringstream derived("planck_mass = 1\n");
  EXPECT_THROW(parse_constants_override(derived), Error);
  std::istringstream junk("hbar = abc\n");
  EXPECT_THROW(parse_constants_override(junk), Error);
}

}  // namespace
}  // namespace phicx
