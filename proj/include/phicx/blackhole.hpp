// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <vector>

#include "phicx/error.hpp"
#include "phicx/measures.hpp"
#include "phicx/units.hpp"

namespace phicx::blackhole {

using std::numbers::pi;

struct BlackHoleReport {
  Quantity mass;
  Quantity radius;
  Quantity temperature;  // K
  double entropy_nats;
  double entropy_bits;
  Quantity lifetime;
  double lifetime_years;
  Quantity ops_per_second;
  double total_ops;
  Quantity bit_flip_time;
  Quantity free_energy;
  Quantity page_time_paper;
  Quantity page_time_entropy;
  double max_error_rate;
};

struct TimelineSample {
  double t_seconds;
  double mass_kg;
  double hole_entropy_bits;
  double radiation_entropy_bits;
};

/// Fraction of the lifetime at which the entropy-crossover Page curve peaks.
inline const double kPageCrossoverFraction = 1.0 - std::pow(2.0, -1.5);

namespace detail {
inline double checked_mass(const Quantity& M) {
  const double m = M.expect(dim::mass, "black hole mass");
  require(m > 0.0, Errc::NonPositiveMass, "black hole mass must be positive");
  return m;
}
}  // namespace detail

/// R = 2GM/c^2
inline Quantity schwarzschild_radius(const Quantity& M, const Constants& k = constants()) {
  detail::checked_mass(M);
  return 2.0 * k.G * M / (k.c * k.c);
}

/// S = 4 pi M^2 / m_P^2 in nats (k_B = 1).
inline double entropy_nats(const Quantity& M, const Constants& k = constants()) {
  const double ratio = detail::checked_mass(M) / k.planck_mass.value();
  return 4.0 * pi * ratio * ratio;
}

inline double entropy_bits(const Quantity& M, const Constants& k = constants()) {
  return entropy_nats(M, k) / std::numbers::ln2;
}

/// T = m_P^2 c^2 / (8 pi M) as an energy (k_B = 1).
inline Quantity temperature_energy(const Quantity& M, const Constants& k = constants()) {
  detail::checked_mass(M);
  return (k.planck_mass * k.planck_mass * k.c * k.c) / (8.0 * pi * M);
}

/// t_M = 5120 pi G^2 M^3 / (hbar c^4)
inline Quantity lifetime(const Quantity& M, const Constants& k = constants()) {
  detail::checked_mass(M);
  const Quantity c2 = k.c * k.c;
  return 5120.0 * pi * (k.G * k.G) * (M * M * M) / (k.hbar * c2 * c2);
}

/// 2 M c^2 / (pi hbar)
inline Quantity ops_per_second(const Quantity& M, const Constants& k = constants()) {
  detail::checked_mass(M);
  return 2.0 * M * k.c * k.c / (pi * k.hbar);
}

/// 2 M c^2 t_M / (pi hbar)
inline double total_ops(const Quantity& M, const Constants& k = constants()) {
  return (ops_per_second(M, k) * lifetime(M, k)).expect(dim::none, "total ops");
}

/// Largest per-operation error rate eps in (0, 1/2) for which the entropy
/// produced over `ops` operations, ops * h(eps), fits in `capacity_bits`.
/// Returns 1/2 when even eps = 1/2 fits.
inline double max_error_rate_for(double ops, double capacity_bits) {
  require(ops > 0.0 && capacity_bits > 0.0, Errc::NegativeInput,
          "operation count and capacity must be positive");
  const double target = capacity_bits / ops;
  if (target >= 1.0) return 0.5;
  // h is strictly increasing on (0, 1/2); bisect to full double resolution.
  double lo = 0.0;
  double hi = 0.5;
  for (int i = 0; i < 4000; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (measures::binary_entropy_bits(mid) < target) lo = mid;
    else hi = mid;
  }
  const double r_lo = std::abs(measures::binary_entropy_bits(lo) - target);
  const double r_hi = std::abs(measures::binary_entropy_bits(hi) - target);
  return (lo > 0.0 && r_lo <= r_hi) ? lo : hi;
}

/// Error rate bound for a hole of mass M: total_ops(M) h(eps) = S_bits(M).
/// Sub-Planckian holes get the vacuous bound 1/2.
inline double max_error_rate(const Quantity& M, const Constants& k = constants()) {
  const double m = detail::checked_mass(M);
  if (m <= k.planck_mass.value()) return 0.5;
  return max_error_rate_for(total_ops(M, k), entropy_bits(M, k));
}

inline BlackHoleReport characterize(const Quantity& M, const Constants& k = constants()) {
  detail::checked_mass(M);
  BlackHoleReport r{};
  r.mass = M;
  r.radius = schwarzschild_radius(M, k);
  const Quantity t_energy = temperature_energy(M, k);
  r.temperature = kelvin(t_energy.value() / k.kB());
  r.entropy_nats = entropy_nats(M, k);
  r.entropy_bits = r.entropy_nats / std::numbers::ln2;
  r.lifetime = lifetime(M, k);
  r.lifetime_years = r.lifetime.value() / k.seconds_per_year.value();
  r.ops_per_second = ops_per_second(M, k);
  r.total_ops = (r.ops_per_second * r.lifetime).expect(dim::none, "total ops");
  r.bit_flip_time = pi * pi * r.radius / k.c;
  r.free_energy = M * k.c * k.c - r.entropy_nats * t_energy;
  r.page_time_paper = 0.5 * r.lifetime;
  r.page_time_entropy = kPageCrossoverFraction * r.lifetime;
  r.max_error_rate = max_error_rate(M, k);
  return r;
}

namespace detail {
inline double mass_at_fraction(double m0, double fraction) {
  return m0 * std::cbrt(std::max(0.0, 1.0 - fraction));
}
}  // namespace detail

/// M(t) = M0 (1 - t/t_M)^(1/3), the solution of dM/dt = -hbar c^4/(15360 pi G^2 M^2).
inline Quantity mass_at_time(const Quantity& M0, const Quantity& t, const Constants& k = constants()) {
  const double m0 = detail::checked_mass(M0);
  const double time = t.expect(dim::time, "time");
  const double t_m = lifetime(M0, k).value();
  require(time >= 0.0 && time <= t_m, Errc::TimeOutOfRange, "need 0 <= t <= t_M");
  return kilograms(detail::mass_at_fraction(m0, time / t_m));
}

/// Evaporation timeline on a uniform grid over [0, t_M], with the radiation
/// entropy min(S(M0) - S(M), S(M)).
inline std::vector<TimelineSample> page_curve(const Quantity& M0, std::size_t n_samples,
                                              const Constants& k = constants()) {
  const double m0 = detail::checked_mass(M0);
  require(n_samples >= 2, Errc::NegativeInput, "need at least 2 samples");
  const double t_m = lifetime(M0, k).value();
  const double s0 = entropy_bits(M0, k);
  std::vector<TimelineSample> out;
  out.reserve(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(n_samples - 1);
    const double m = detail::mass_at_fraction(m0, f);
    const double s = m > 0.0 ? entropy_bits(kilograms(m), k) : 0.0;
    out.push_back({f * t_m, m, s, std::min(s0 - s, s)});
  }
  return out;
}

inline void write_timeline_csv(std::ostream& os, const std::vector<TimelineSample>& samples) {
  os << "t_seconds,mass_kg,hole_entropy_bits,radiation_entropy_bits\n";
  char buf[128];
  for (const auto& s : samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s.t_seconds, s.mass_kg,
                  s.hole_entropy_bits, s.radiation_entropy_bits);
    os << buf;
  }
}

}  // namespace phicx::blackhole
