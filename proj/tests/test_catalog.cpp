// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "phicx/catalog.hpp"

namespace phicx::catalog {
namespace {

const std::vector<ReferenceSystem>& systems() {
  static const auto s = builtin_systems();
  return s;
}

TEST(Catalog, EveryEntryHasProvenanceAndPositiveEnergy) {
  ASSERT_GE(systems().size(), 6u);
  for (const auto& s : systems()) {
    EXPECT_FALSE(s.provenance.empty()) << s.name;
    EXPECT_GT(s.energy_per_op.value(), 0.0) << s.name;
    EXPECT_EQ(s.energy_per_op.dim(), dim::energy) << s.name;
  }
}

TEST(Catalog, BondEnergiesDescendByDecades) {
  const double cov = find_system(systems(), "covalent-bio-op").energy_per_op.value();
  EXPECT_EQ(cov, 1.6e-19);
  EXPECT_NEAR(find_system(systems(), "hydrogen-bond").energy_per_op.value() / cov, 0.1, 1e-15);
  EXPECT_NEAR(find_system(systems(), "van-der-waals").energy_per_op.value() / cov, 0.01, 1e-15);
}

TEST(Catalog, StatedClaimsHold) {
  for (const auto& s : systems()) {
    for (const auto& c : s.claims) {
      double v = 0;
      if (c.quantity == "ops_per_second") v = implied_op_rate(s)->value();
      else if (c.quantity == "inefficiency_factor_300K") v = inefficiency_factor(s, kelvin(300));
      else FAIL() << "unknown claim " << c.quantity;
      EXPECT_TRUE(c.contains(v) || oracle::rel_err(v, c.lo) < 1e-12) << s.name << " " << c.quantity << " " << v;
    }
  }
}

TEST(Catalog, HumanBioOpRate) {
  const auto rate = implied_op_rate(find_system(systems(), "human-metabolism"));
  ASSERT_TRUE(rate.has_value());
  EXPECT_LE(oracle::rel_err(rate->value(), 6.25e20), 1e-15);
  EXPECT_FALSE(implied_op_rate(find_system(systems(), "hydrogen-bond")).has_value());
}

TEST(Catalog, TransistorInefficiency) {
  const double f = inefficiency_factor(find_system(systems(), "5nm-transistor"), kelvin(300));
  EXPECT_LE(oracle::rel_err(f, 34831.325482652564), 1e-13);
  EXPECT_NEAR(inefficiency_factor(find_system(systems(), "landauer-300K"), kelvin(300)), 1.0, 1e-15);
  EXPECT_THROW(inefficiency_factor(find_system(systems(), "5nm-transistor"), kelvin(0)), Error);
}

TEST(Catalog, SwitchEnergyAndOpRate) {
  EXPECT_LE(oracle::rel_err(switch_energy(Quantity(0.1e-15, unit::farad), Quantity(1, unit::volt)).value(), 5e-17),
            1e-15);
  EXPECT_THROW(switch_energy(Quantity(0, unit::farad), Quantity(1, unit::volt)), Error);
  EXPECT_THROW(switch_energy(joules(1), Quantity(1, unit::volt)), Error);
  EXPECT_DOUBLE_EQ(op_rate(watts(100), joules(1.6e-19)).value(), 6.25e20);
  EXPECT_THROW(op_rate(watts(1), joules(0)), Error);
}

TEST(Catalog, UnknownNameIsAnError) { EXPECT_THROW(find_system(systems(), "abacus"), Error); }

}  // namespace
}  // namespace phicx::catalog
