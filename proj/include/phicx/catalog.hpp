// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "phicx/error.hpp"
#include "phicx/units.hpp"

namespace phicx::catalog {

/// An order-of-magnitude statement, kept as the interval it asserts.
struct Claim {
  std::string quantity;  // e.g. "ops_per_second"
  double lo;
  double hi;
  bool contains(double v) const { return lo <= v && v <= hi; }
};

struct ReferenceSystem {
  std::string name;
  Quantity energy_per_op;                 // J
  std::optional<Quantity> power = {};           // W
  std::optional<Quantity> ops_per_second = {};  // 1/s, when stated directly
  std::optional<Quantity> operating_temperature = {};
  std::optional<Quantity> capacitance = {};
  std::string notes = {};
  std::string provenance = {};
  std::vector<Claim> claims = {};
};

inline constexpr double kRoomTemperature = 300.0;

/// energy_per_op / (k_B T ln 2)
inline double inefficiency_factor(const ReferenceSystem& sys, const Quantity& T,
                                  const Constants& k = constants()) {
  const double t = T.expect(dim::temperature, "temperature");
  require(t > 0.0, Errc::NonPositiveTemperature, "temperature must be positive");
  const double e = sys.energy_per_op.expect(dim::energy, "energy per op");
  return e / (k.kB() * t * std::numbers::ln2);
}

/// power / energy_per_op
inline Quantity op_rate(const Quantity& power, const Quantity& energy_per_op) {
  const double p = power.expect(dim::power, "power");
  const double e = energy_per_op.expect(dim::energy, "energy per op");
  require(p >= 0.0, Errc::NegativeInput, "power must be >= 0");
  require(e > 0.0, Errc::NonPositiveEnergy, "energy per op must be positive");
  return power / energy_per_op;
}

/// C V^2 / 2
inline Quantity switch_energy(const Quantity& C, const Quantity& V) {
  const double c = C.expect(dim::capacitance, "capacitance");
  V.expect(dim::voltage, "voltage");
  require(c > 0.0, Errc::NonPositiveCapacitance, "capacitance must be positive");
  return 0.5 * C * V * V;
}

inline std::vector<ReferenceSystem> builtin_systems(const Constants& k = constants()) {
  const double covalent = 1.6e-19;
  std::vector<ReferenceSystem> out;

  ReferenceSystem transistor{"5nm-transistor", joules(1e-16)};
  transistor.capacitance = Quantity(0.1e-15, unit::farad);
  transistor.operating_temperature = kelvin(kRoomTemperature);
  transistor.notes = "dissipation per irreversible logical operation; capacitance ~0.1 fF";
  transistor.provenance = "published estimate: ~1e-16 J per op at the 5nm node";
  transistor.claims = {{"inefficiency_factor_300K", 1e4, 1e6}};
  out.push_back(transistor);

  ReferenceSystem bond{"covalent-bio-op", joules(covalent)};
  bond.notes = "forming or breaking a covalent bond, on the order of 1 eV = 1.6e-19 J";
  bond.provenance = "covalent bond energy, ~1 eV";
  out.push_back(bond);

  ReferenceSystem hbond{"hydrogen-bond", joules(covalent / 10)};
  hbond.notes = "an order of magnitude below covalent, fixed at exactly one decade";
  hbond.provenance = "order-of-magnitude bond-energy ladder";
  out.push_back(hbond);

  ReferenceSystem vdw{"van-der-waals", joules(covalent / 100)};
  vdw.notes = "stated only as lower still than hydrogen bonds; fixed at two decades below covalent";
  vdw.provenance = "order-of-magnitude bond-energy ladder";
  out.push_back(vdw);

  ReferenceSystem human{"human-metabolism", joules(covalent)};
  human.power = watts(100.0);
  human.notes = "~100 W spent on metabolism and reproduction, at one covalent bio-op per 1.6e-19 J";
  human.provenance = "published estimate: 1e20-1e22 bio-ops per second";
  human.claims = {{"ops_per_second", 1e20, 1e22}};
  out.push_back(human);

  ReferenceSystem world{"world-compute", joules(1e-16)};
  world.ops_per_second = Quantity(1e21, dim::frequency);
  world.notes =
      "all electronic computers, 'one zetaflop' stored as logical ops/s; energy per op assumes "
      "the 5nm transistor figure";
  world.provenance = "published estimate: ~1e21 ops/s, comparable to one human";
  world.claims = {{"ops_per_second", 1e20, 1e22}};
  out.push_back(world);

  ReferenceSystem landauer{"landauer-300K",
                           joules(k.kB() * kRoomTemperature * std::numbers::ln2)};
  landauer.operating_temperature = kelvin(kRoomTemperature);
  landauer.notes = "minimum dissipation to erase one bit at room temperature";
  landauer.provenance = "Landauer limit k_B T ln 2";
  landauer.claims = {{"inefficiency_factor_300K", 1.0, 1.0}};
  out.push_back(landauer);
  return out;
}

inline const ReferenceSystem& find_system(const std::vector<ReferenceSystem>& systems,
                                          const std::string& name) {
  for (const auto& s : systems)
    if (s.name == name) return s;
  fail(Errc::ParseError, "unknown reference system '" + name + "'");
}

/// Operations per second implied by the entry: stated directly, or power / energy_per_op.
inline std::optional<Quantity> implied_op_rate(const ReferenceSystem& sys) {
  if (sys.ops_per_second) return sys.ops_per_second;
  if (sys.power) return op_rate(*sys.power, sys.energy_per_op);
  return std::nullopt;
}

}  // namespace phicx::catalog
