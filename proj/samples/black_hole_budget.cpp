// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Prints the computational budget of black holes from 1 kg to one solar mass.
#include <cstdio>

#include "phicx/blackhole.hpp"

int main() {
  using namespace phicx;
  const Constants& k = constants();
  std::printf("%-14s %-14s %-14s %-14s %-14s\n", "mass_kg", "lifetime_yr", "total_ops", "entropy_bits",
              "max_error_rate");
  for (double m : {1.0, 1e3, 1e6, 1e9, 1e12, k.solar_mass.value()}) {
    const auto b = blackhole::characterize(kilograms(m));
    std::printf("%-14.4e %-14.4e %-14.4e %-14.4e %-14.4e\n", m, b.lifetime_years, b.total_ops,
                b.entropy_bits, b.max_error_rate);
  }
}
