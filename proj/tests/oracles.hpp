// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles. Nothing here calls into the code paths it is used to check.
#pragma once

#include <algorithm>
#include <bitset>
#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "phicx/linalg.hpp"

namespace phicx::oracle {

/// Breadth-first search over every set of built pieces. Joins are any two
/// available items whose concatenation occurs in the target. No bounds, no
/// ordering tricks: the first depth at which the target appears is minimal.
inline int brute_force_assembly_index(const std::string& target) {
  if (target.size() <= 1) return 0;
  std::vector<std::string> subs;
  {
    std::set<std::string> s;
    for (std::size_t i = 0; i < target.size(); ++i)
      for (std::size_t len = 2; i + len <= target.size(); ++len) s.insert(target.substr(i, len));
    subs.assign(s.begin(), s.end());
  }
  using Set = std::bitset<256>;
  auto id_of = [&](const std::string& s) {
    if (s.size() == 1) return -1;
    return static_cast<int>(std::lower_bound(subs.begin(), subs.end(), s) - subs.begin());
  };
  const int target_id = id_of(target);
  std::vector<std::vector<std::pair<int, int>>> splits(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t cut = 1; cut < subs[i].size(); ++cut)
      splits[i].emplace_back(id_of(subs[i].substr(0, cut)), id_of(subs[i].substr(cut)));
  auto avail = [](int id, const Set& built) { return id < 0 || built.test(static_cast<std::size_t>(id)); };
  std::vector<Set> frontier{Set{}};
  std::unordered_set<Set> seen{Set{}};
  for (int depth = 1;; ++depth) {
    std::vector<Set> next;
    for (const auto& built : frontier) {
      for (std::size_t i = 0; i < subs.size(); ++i) {
        if (built.test(i)) continue;
        bool ok = false;
        for (const auto& [l, r] : splits[i])
          if ((ok = avail(l, built) && avail(r, built))) break;
        if (!ok) continue;
        Set n = built;
        n.set(i);
        if (static_cast<int>(i) == target_id) return depth;
        if (seen.insert(n).second) next.push_back(n);
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) return -1;
  }
}

/// Solves h(eps) = target_bits on (0, 1/2) by Newton's method in log(eps),
/// from a guess of target/log2(1/target).
inline double newton_binary_entropy_inverse(double target_bits) {
  auto h = [](double e) { return (-e * std::log(e) - (1 - e) * std::log(1 - e)) / std::log(2.0); };
  auto dh = [](double e) { return std::log((1 - e) / e) / std::log(2.0); };
  double e = target_bits / std::log2(1.0 / target_bits);
  for (int i = 0; i < 200; ++i) {
    const double step = (h(e) - target_bits) / dh(e);
    double next = e - step;
    if (next <= 0) next = e / 2;
    if (next >= 0.5) next = (e + 0.5) / 2;
    if (std::abs(next - e) <= 1e-17 * e) return next;
    e = next;
  }
  return e;
}

/// RK4 integration of dM/dt = -rate / M^2 from M0 over [0, t].
inline double integrate_mass_loss(double m0, double rate, double t, int steps) {
  const double h = t / steps;
  double m = m0;
  auto f = [&](double mm) { return -rate / (mm * mm); };
  for (int i = 0; i < steps; ++i) {
    const double k1 = f(m);
    const double k2 = f(m + 0.5 * h * k1);
    const double k3 = f(m + 0.5 * h * k2);
    const double k4 = f(m + h * k3);
    m += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return m;
}

/// Hermitian matrix with independent Gaussian entries.
inline linalg::Matrix random_hermitian(std::mt19937_64& rng, std::size_t d, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  linalg::Matrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = n(rng);
    for (std::size_t j = i + 1; j < d; ++j) {
      m(i, j) = {n(rng), n(rng)};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

/// Full-rank random state G G^dagger / tr(G G^dagger), G complex Ginibre.
inline linalg::Matrix random_density(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> n(0.0, 1.0);
  linalg::Matrix g(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = {n(rng), n(rng)};
  linalg::Matrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  return (1.0 / tr) * rho;
}

inline std::vector<std::complex<double>> random_unit_vector(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<std::complex<double>> v(d);
  double s = 0;
  for (auto& x : v) {
    x = {n(rng), n(rng)};
    s += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(s);
  return v;
}

inline double rel_err(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

}  // namespace phicx::oracle
