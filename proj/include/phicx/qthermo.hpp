// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "phicx/error.hpp"
#include "phicx/linalg.hpp"
#include "phicx/units.hpp"

namespace phicx::qthermo {

using linalg::cplx;
using linalg::Matrix;
using linalg::Spectrum;

inline constexpr double kHermitianTolerance = 1e-9;
inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kPsdTolerance = 1e-9;
inline constexpr double kNormTolerance = 1e-9;

namespace detail {
inline Matrix checked_hermitian(const Matrix& m, const char* what) {
  require(m.dim() >= 1, Errc::InvalidState, std::string(what) + ": dimension must be >= 1");
  require(m.all_finite(), Errc::InvalidState, std::string(what) + ": entries must be finite");
  const double scale = m.max_abs();
  const double defect = linalg::hermiticity_defect(m);
  require(defect <= kHermitianTolerance * scale, Errc::InvalidState,
          std::string(what) + ": not Hermitian (max|A - A^dagger| = " + std::to_string(defect) +
              ")");
  return linalg::hermitian_part(m);
}
}  // namespace detail

/// Hermitian observable; for Hamiltonians the entries are in joules.
class HermitianOperator {
 public:
  explicit HermitianOperator(const Matrix& m)
      : m_(detail::checked_hermitian(m, "HermitianOperator")), spectrum_(linalg::eigh(m_)) {}

  std::size_t dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }
  const Spectrum& spectrum() const { return spectrum_; }
  double min_eigenvalue() const { return spectrum_.values.front(); }
  double max_eigenvalue() const { return spectrum_.values.back(); }

 private:
  Matrix m_;
  Spectrum spectrum_;
};

/// Hermitian, unit-trace, positive semidefinite matrix. Eigenvalues in
/// [-1e-9, 0) are clamped to zero and the spectrum renormalized.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix& m) : m_(detail::checked_hermitian(m, "DensityMatrix")) {
    const cplx tr = m_.trace();
    require(std::abs(tr - 1.0) <= kTraceTolerance, Errc::InvalidState,
            "DensityMatrix: trace is " + std::to_string(tr.real()) + ", expected 1");
    spectrum_ = linalg::eigh(m_);
    bool clamped = false;
    for (double& p : spectrum_.values) {
      require(p >= -kPsdTolerance, Errc::InvalidState,
              "DensityMatrix: negative eigenvalue " + std::to_string(p));
      if (p < 0.0) {
        p = 0.0;
        clamped = true;
      }
    }
    double sum = 0.0;
    for (double p : spectrum_.values) sum += p;
    for (double& p : spectrum_.values) p /= sum;
    if (clamped) m_ = spectrum_.apply([](double p) { return p; });
  }

  /// Trusted construction from an orthonormal eigenbasis and a probability vector.
  static DensityMatrix from_spectrum(Spectrum s) {
    DensityMatrix rho;
    rho.m_ = s.apply([](double p) { return p; });
    rho.spectrum_ = std::move(s);
    return rho;
  }

  static DensityMatrix maximally_mixed(std::size_t d) {
    return DensityMatrix((1.0 / static_cast<double>(d)) * Matrix::identity(d));
  }

  std::size_t dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }
  /// Eigenvalues (probabilities, ascending) and eigenvectors.
  const Spectrum& spectrum() const { return spectrum_; }

 private:
  DensityMatrix() = default;
  Matrix m_;
  Spectrum spectrum_;
};

class StateVector {
 public:
  explicit StateVector(std::vector<cplx> amplitudes) : a_(std::move(amplitudes)) {
    require(!a_.empty(), Errc::InvalidState, "StateVector: dimension must be >= 1");
    double n2 = 0.0;
    for (const auto& v : a_) {
      require(std::isfinite(v.real()) && std::isfinite(v.imag()), Errc::InvalidState,
              "StateVector: amplitudes must be finite");
      n2 += std::norm(v);
    }
    require(std::abs(std::sqrt(n2) - 1.0) <= kNormTolerance, Errc::InvalidState,
            "StateVector: norm is " + std::to_string(std::sqrt(n2)) + ", expected 1");
  }

  static StateVector basis(std::size_t d, std::size_t k) {
    require(k < d, Errc::InvalidState, "StateVector: basis index out of range");
    std::vector<cplx> a(d);
    a[k] = 1.0;
    return StateVector(std::move(a));
  }

  std::size_t dim() const { return a_.size(); }
  const std::vector<cplx>& amplitudes() const { return a_; }
  const cplx& operator[](std::size_t i) const { return a_[i]; }
  double norm() const {
    double n2 = 0.0;
    for (const auto& v : a_) n2 += std::norm(v);
    return std::sqrt(n2);
  }
  /// |<k|psi>|^2
  double probability(std::size_t k) const { return std::norm(a_.at(k)); }

  DensityMatrix projector() const {
    Matrix m(dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) m(i, j) = a_[i] * std::conj(a_[j]);
    return DensityMatrix(m);
  }

 private:
  std::vector<cplx> a_;
};

inline cplx inner_product(const StateVector& a, const StateVector& b) {
  cplx s{};
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

struct GibbsState {
  DensityMatrix rho;
  Quantity temperature;  // K, signed, never zero
  Quantity beta;         // 1/J
  double partition_function;
  double log_partition_function;
  Quantity f_eq;  // J
};

namespace detail {

inline void check_same_dim(std::size_t a, std::size_t b) {
  require(a == b, Errc::DimensionMismatch,
          "operator dimensions differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

/// Signed 1/(k_B T) in 1/J.
inline double inverse_thermal_energy(const Quantity& T, const Constants& k) {
  const double t = T.expect(dim::temperature, "temperature");
  require(t != 0.0, Errc::ZeroTemperature, "temperature must be non-zero");
  return 1.0 / (k.kB() * t);
}

struct ThermalWeights {
  std::vector<double> log_p;
  double log_z;
};

// Exponents are shifted by the spectral extreme that makes them all <= 0.
inline ThermalWeights thermal_weights(const std::vector<double>& levels, double beta) {
  const double shift = beta > 0 ? levels.front() : levels.back();
  double sum = 0.0;
  std::vector<double> x(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    x[i] = -beta * (levels[i] - shift);
    sum += std::exp(x[i]);
  }
  const double log_sum = std::log(sum);
  ThermalWeights w{std::vector<double>(levels.size()), -beta * shift + log_sum};
  for (std::size_t i = 0; i < levels.size(); ++i) w.log_p[i] = x[i] - log_sum;
  return w;
}

inline double thermal_energy_at(const std::vector<double>& levels, double beta) {
  const auto w = thermal_weights(levels, beta);
  const double base = levels.front();
  double e = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) e += (levels[i] - base) * std::exp(w.log_p[i]);
  return base + e;
}

inline GibbsState gibbs_from_beta(const HermitianOperator& H, double beta, const Constants& k) {
  const auto w = thermal_weights(H.spectrum().values, beta);
  require(std::isfinite(w.log_z), Errc::NumericalOverflow, "log partition function overflowed");
  const double z = std::exp(w.log_z);
  require(std::isfinite(z) && z > 0.0, Errc::NumericalOverflow,
          "partition function not representable (ln Z = " + std::to_string(w.log_z) + ")");
  Spectrum s{std::vector<double>(w.log_p.size()), H.spectrum().vectors};
  for (std::size_t i = 0; i < s.values.size(); ++i) s.values[i] = std::exp(w.log_p[i]);
  const double t = 1.0 / (k.kB() * beta);
  return GibbsState{DensityMatrix::from_spectrum(std::move(s)),
                    kelvin(t),
                    Quantity(beta, dim::none / dim::energy),
                    z,
                    w.log_z,
                    joules(-w.log_z / beta)};
}

}  // namespace detail

/// -sum p ln p over the spectrum of rho, in the requested unit.
inline Quantity von_neumann_entropy(const DensityMatrix& rho, EntropyUnit unit = EntropyUnit::Bits) {
  double s = 0.0;
  for (double p : rho.spectrum().values)
    if (p > 0.0) s -= p * std::log(p);
  s = std::max(s, 0.0);
  switch (unit) {
    case EntropyUnit::Bits:
    case EntropyUnit::Nats: return nats(s);
    case EntropyUnit::JoulesPerKelvin: return Quantity(s * constants().kB(), dim::thermal_entropy);
  }
  return nats(s);
}

/// rho = exp(-H/(k_B T))/Z; T may be negative.
inline GibbsState gibbs_state(const HermitianOperator& H, const Quantity& T,
                              const Constants& k = constants()) {
  return detail::gibbs_from_beta(H, detail::inverse_thermal_energy(T, k), k);
}

/// Finds the Gibbs state whose mean energy is `energy`, searching beta over
/// the whole real line by bisection.
inline GibbsState solve_inverse_temperature(const HermitianOperator& H, const Quantity& energy,
                                            const Constants& k = constants()) {
  const double target = energy.expect(dim::energy, "target energy");
  const auto& levels = H.spectrum().values;
  const double e_min = levels.front();
  const double e_max = levels.back();
  require(e_min < target && target < e_max, Errc::EnergyOutOfRange,
          "target energy must lie strictly inside the spectral interval");
  const double range = e_max - e_min;
  double mean = 0.0;
  for (double l : levels) mean += l;
  mean /= static_cast<double>(levels.size());
  require(std::abs(target - mean) > 1e-12 * range, Errc::InfiniteTemperature,
          "target energy equals the infinite-temperature mean energy");

  auto energy_at = [&](double beta) { return detail::thermal_energy_at(levels, beta); };
  double lo = 0.0;
  double hi = 0.0;
  const double step = 1.0 / range;
  if (target < mean) {
    hi = step;
    for (int i = 0; energy_at(hi) > target; ++i) {
      require(i < 2000 && std::isfinite(hi * 2), Errc::NonConvergence,
              "cannot bracket inverse temperature");
      lo = hi;
      hi *= 2;
    }
  } else {
    lo = -step;
    for (int i = 0; energy_at(lo) < target; ++i) {
      require(i < 2000 && std::isfinite(lo * 2), Errc::NonConvergence,
              "cannot bracket inverse temperature");
      hi = lo;
      lo *= 2;
    }
  }
  // energy_at is decreasing: energy_at(lo) >= target >= energy_at(hi).
  for (int i = 0; i < 5000; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (energy_at(mid) > target) lo = mid;
    else hi = mid;
  }
  const double r_lo = std::abs(energy_at(lo) - target);
  const double r_hi = std::abs(energy_at(hi) - target);
  double beta = r_lo < r_hi ? lo : hi;
  if (beta == 0.0) beta = r_lo < r_hi ? hi : lo;
  require(std::min(r_lo, r_hi) <= 1e-10 * range, Errc::NonConvergence,
          "bisection residual exceeds tolerance");
  require(beta != 0.0, Errc::InfiniteTemperature, "solution is beta = 0");
  return detail::gibbs_from_beta(H, beta, k);
}

/// tr(rho H) in joules.
inline double mean_energy(const DensityMatrix& rho, const HermitianOperator& H) {
  detail::check_same_dim(rho.dim(), H.dim());
  return linalg::trace_product(rho.matrix(), H.matrix()).real();
}

/// F(rho) = tr(rho H) - k_B T S(rho).
inline Quantity nonequilibrium_free_energy(const DensityMatrix& rho, const HermitianOperator& H,
                                           const Quantity& T, const Constants& k = constants()) {
  detail::check_same_dim(rho.dim(), H.dim());
  const double t = T.expect(dim::temperature, "temperature");
  require(t != 0.0, Errc::ZeroTemperature, "temperature must be non-zero");
  const double s = von_neumann_entropy(rho, EntropyUnit::Nats).value();
  return joules(mean_energy(rho, H) - k.kB() * t * s);
}

/// W = k_B T D(rho || rho_th), with ln rho_th built from the spectrum of H.
inline Quantity extractable_work(const DensityMatrix& rho, const HermitianOperator& H,
                                 const Quantity& T, const Constants& k = constants()) {
  detail::check_same_dim(rho.dim(), H.dim());
  const double t = T.expect(dim::temperature, "temperature");
  require(t != 0.0, Errc::ZeroTemperature, "temperature must be non-zero");
  require(t > 0.0, Errc::NonPositiveTemperature, "extractable work needs T > 0");
  const double beta = 1.0 / (k.kB() * t);
  const auto w = detail::thermal_weights(H.spectrum().values, beta);
  std::size_t i = 0;
  const Matrix log_thermal = H.spectrum().apply([&](double) { return w.log_p[i++]; });
  double rho_log_rho = 0.0;
  for (double p : rho.spectrum().values)
    if (p > 0.0) rho_log_rho += p * std::log(p);
  const double cross = linalg::trace_product(rho.matrix(), log_thermal).real();
  return joules(k.kB() * t * (rho_log_rho - cross));
}

/// -E sigma_x
inline HermitianOperator bitflip_hamiltonian(const Quantity& E) {
  const double e = E.expect(dim::energy, "bit-flip energy");
  require(e > 0.0, Errc::NonPositiveEnergy, "bit-flip energy must be positive");
  Matrix m(2);
  m(0, 1) = -e;
  m(1, 0) = -e;
  return HermitianOperator(m);
}

/// exp(-i H t / hbar) |psi>
inline StateVector evolve(const HermitianOperator& H, const Quantity& t, const StateVector& psi,
                          const Constants& k = constants()) {
  detail::check_same_dim(H.dim(), psi.dim());
  const double time = t.expect(dim::time, "evolution time");
  require(time >= 0.0, Errc::InvalidState, "evolution time must be >= 0");
  const auto& s = H.spectrum();
  const std::size_t n = H.dim();
  std::vector<cplx> coeff(n);
  for (std::size_t j = 0; j < n; ++j) {
    cplx c{};
    for (std::size_t i = 0; i < n; ++i) c += std::conj(s.vectors(i, j)) * psi[i];
    coeff[j] = c * std::polar(1.0, -s.values[j] * time / k.hbar.value());
  }
  std::vector<cplx> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += s.vectors(i, j) * coeff[j];
  return StateVector(std::move(out));
}

/// sqrt(tr(rho H^2) - tr(rho H)^2)
inline Quantity energy_spread(const DensityMatrix& rho, const HermitianOperator& H) {
  const double e = mean_energy(rho, H);
  const Matrix centred = H.matrix() - e * Matrix::identity(H.dim());
  const double var = linalg::trace_product(rho.matrix(), centred * centred).real();
  return joules(std::sqrt(std::max(var, 0.0)));
}

/// n (S_max - S): asymptotic number of pure bits separable from n copies.
inline Quantity extractable_pure_bits(double n, const Quantity& s_per_dof,
                                      const Quantity& s_max_per_dof) {
  const double s = s_per_dof.expect(dim::information, "entropy per degree of freedom");
  const double smax = s_max_per_dof.expect(dim::information, "maximum entropy per degree of freedom");
  require(n >= 0.0, Errc::NegativeInput, "degree-of-freedom count must be >= 0");
  require(0.0 <= s && s <= smax, Errc::EntropyOutOfRange, "need 0 <= S <= S_max");
  return nats(n * (smax - s));
}

}  // namespace phicx::qthermo
