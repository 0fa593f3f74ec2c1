// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <string>

#include "phicx/error.hpp"
#include "phicx/units.hpp"

namespace phicx::measures {

/// 2Et/(pi hbar): the Margolus-Levitin bound on the number of orthogonal
/// state changes achievable with energy E above the ground state in time t.
inline double phi_time(const Quantity& E, const Quantity& t, const Constants& k = constants()) {
  const double e = E.expect(dim::energy, "energy");
  const double time = t.expect(dim::time, "time");
  require(e >= 0.0 && time >= 0.0, Errc::NegativeInput, "energy and time must be >= 0");
  return 2.0 * e * time / (std::numbers::pi * k.hbar.value());
}

/// pi hbar / (2E)
inline Quantity ml_min_time(const Quantity& E, const Constants& k = constants()) {
  const double e = E.expect(dim::energy, "energy");
  require(e > 0.0, Errc::NonPositiveEnergy, "energy must be positive");
  return seconds(std::numbers::pi * k.hbar.value() / (2.0 * e));
}

/// Negentropy S_max - S.
inline Quantity phi_space(const Quantity& s_max, const Quantity& s) {
  const double hi = s_max.expect(dim::information, "maximum entropy");
  const double lo = s.expect(dim::information, "entropy");
  require(0.0 <= lo && lo <= hi, Errc::EntropyOutOfRange, "need 0 <= S <= S_max");
  return nats(hi - lo);
}

/// n k_B T ln 2
inline Quantity landauer_cost(const Quantity& T, double n_bits, const Constants& k = constants()) {
  const double t = T.expect(dim::temperature, "temperature");
  require(t > 0.0, Errc::NonPositiveTemperature, "temperature must be positive");
  require(n_bits >= 0.0, Errc::NegativeInput, "bit count must be >= 0");
  return bits(n_bits) * k.k_B * T;
}

/// h(eps) in bits, with 0 log 0 = 0.
inline Quantity binary_entropy(double eps) {
  require(eps >= 0.0 && eps <= 1.0, Errc::ProbabilityOutOfRange, "need 0 <= eps <= 1");
  if (eps == 0.0 || eps == 1.0) return bits(0.0);
  // log1p keeps the (1-eps) term accurate for tiny eps.
  const double h_nats = -eps * std::log(eps) - (1.0 - eps) * std::log1p(-eps);
  return nats(h_nats);
}

/// h(eps) as a plain number of bits.
inline double binary_entropy_bits(double eps) { return binary_entropy(eps).in(unit::bit); }

enum class EcMode { Exact, Asymptotic };

/// Fresh-ancilla negentropy needed to correct errors over t_ops operations.
inline Quantity error_correction_space(double t_ops, double eps, EcMode mode) {
  require(t_ops >= 0.0, Errc::NegativeInput, "operation count must be >= 0");
  require(eps >= 0.0 && eps <= 0.5, Errc::ProbabilityOutOfRange, "need 0 <= eps <= 1/2");
  if (eps == 0.0) return bits(0.0);
  if (mode == EcMode::Exact) return t_ops * binary_entropy(eps);
  return bits(t_ops * eps * std::log2(1.0 / eps));
}

/// Free energy consumed by a computation.
inline Quantity free_phi(const Quantity& delta_f) {
  const double f = delta_f.expect(dim::energy, "free energy");
  require(f >= 0.0, Errc::NegativeInput, "free energy consumed must be >= 0");
  return delta_f;
}

/// 2 F t / (pi hbar): operations that free energy F could drive in time t.
inline double free_phi_op_equivalent(const Quantity& delta_f, const Quantity& t,
                                     const Constants& k = constants()) {
  return phi_time(free_phi(delta_f), t, k);
}

/// k_B T (S_eq - S): temperature times thermodynamic depth, in joules.
inline Quantity free_phi_thermo(const Quantity& T, const Quantity& s_eq, const Quantity& s,
                                const Constants& k = constants()) {
  const double t = T.expect(dim::temperature, "temperature");
  const double eq = s_eq.expect(dim::information, "equilibrium entropy");
  const double cur = s.expect(dim::information, "entropy");
  require(t > 0.0, Errc::NonPositiveTemperature, "temperature must be positive");
  require(0.0 <= cur && cur <= eq, Errc::EntropyOutOfRange, "need 0 <= S <= S_eq");
  return (s_eq - s) * k.k_B * T;
}

/// The three measures for one described process.
struct ComplexityReport {
  double phi_time_ops = 0.0;
  Quantity phi_space_bits{0.0, dim::information};
  Quantity free_phi{0.0, dim::energy};
  Quantity landauer_cost{0.0, dim::energy};
  std::map<std::string, std::string> metadata;
};

struct ProcessDescription {
  std::string label;
  Quantity energy{0.0, dim::energy};         // above ground state
  Quantity duration{0.0, dim::time};
  Quantity max_entropy{0.0, dim::information};
  Quantity entropy{0.0, dim::information};
  Quantity free_energy_used{0.0, dim::energy};
  Quantity temperature{300.0, dim::temperature};
  double bits_erased = 0.0;
};

inline ComplexityReport assess(const ProcessDescription& p, const Constants& k = constants()) {
  ComplexityReport r;
  r.phi_time_ops = phi_time(p.energy, p.duration, k);
  r.phi_space_bits = phi_space(p.max_entropy, p.entropy);
  r.free_phi = free_phi(p.free_energy_used);
  r.landauer_cost = landauer_cost(p.temperature, p.bits_erased, k);
  r.metadata["label"] = p.label;
  r.metadata["energy_J"] = std::to_string(p.energy.value());
  r.metadata["duration_s"] = std::to_string(p.duration.value());
  return r;
}

}  // namespace phicx::measures
