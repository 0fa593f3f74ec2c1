// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>

#include "phicx/error.hpp"

namespace phicx {

// Base dimensions. Information is its own dimension with the nat as its
// coherent unit; the bit is ln 2 nats.
enum class Base : int { Mass = 0, Length, Time, Temperature, Current, Information };
inline constexpr int kBaseCount = 6;

class Dimension {
 public:
  constexpr Dimension() = default;
  constexpr Dimension(int mass, int length, int time, int temperature = 0, int current = 0,
                      int information = 0)
      : exp_{mass, length, time, temperature, current, information} {}

  constexpr int operator[](Base b) const { return exp_[static_cast<std::size_t>(b)]; }

  constexpr bool dimensionless() const {
    for (int e : exp_)
      if (e != 0) return false;
    return true;
  }

  friend constexpr Dimension operator*(const Dimension& a, const Dimension& b) {
    Dimension r;
    for (std::size_t i = 0; i < kBaseCount; ++i) r.exp_[i] = a.exp_[i] + b.exp_[i];
    return r;
  }
  friend constexpr Dimension operator/(const Dimension& a, const Dimension& b) {
    Dimension r;
    for (std::size_t i = 0; i < kBaseCount; ++i) r.exp_[i] = a.exp_[i] - b.exp_[i];
    return r;
  }
  constexpr Dimension pow(int n) const {
    Dimension r;
    for (std::size_t i = 0; i < kBaseCount; ++i) r.exp_[i] = exp_[i] * n;
    return r;
  }
  friend constexpr bool operator==(const Dimension&, const Dimension&) = default;

  std::string to_string() const {
    static constexpr std::array<const char*, kBaseCount> symbols{"kg", "m", "s", "K", "A", "nat"};
    std::string out;
    for (std::size_t i = 0; i < kBaseCount; ++i) {
      if (exp_[i] == 0) continue;
      if (!out.empty()) out += ' ';
      out += symbols[i];
      if (exp_[i] != 1) out += '^' + std::to_string(exp_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  std::array<int, kBaseCount> exp_{};
};

namespace dim {
inline constexpr Dimension none{};
inline constexpr Dimension mass{1, 0, 0};
inline constexpr Dimension length{0, 1, 0};
inline constexpr Dimension time{0, 0, 1};
inline constexpr Dimension temperature{0, 0, 0, 1};
inline constexpr Dimension current{0, 0, 0, 0, 1};
inline constexpr Dimension information{0, 0, 0, 0, 0, 1};
inline constexpr Dimension velocity = length / time;
inline constexpr Dimension acceleration = velocity / time;
inline constexpr Dimension force = mass * acceleration;
inline constexpr Dimension energy = force * length;
inline constexpr Dimension power = energy / time;
inline constexpr Dimension action = energy * time;
inline constexpr Dimension frequency = none / time;
inline constexpr Dimension thermal_entropy = energy / temperature;
inline constexpr Dimension charge = current * time;
inline constexpr Dimension voltage = energy / charge;
inline constexpr Dimension capacitance = charge / voltage;
inline constexpr Dimension gravitational = length.pow(3) / (mass * time.pow(2));
}  // namespace dim

/// A named scale of some dimension: one `symbol` equals `scale` coherent units.
struct Unit {
  std::string_view symbol;
  double scale;
  Dimension dim;
};

namespace unit {
inline constexpr Unit kilogram{"kg", 1.0, dim::mass};
inline constexpr Unit metre{"m", 1.0, dim::length};
inline constexpr Unit second{"s", 1.0, dim::time};
inline constexpr Unit kelvin{"K", 1.0, dim::temperature};
inline constexpr Unit joule{"J", 1.0, dim::energy};
inline constexpr Unit watt{"W", 1.0, dim::power};
inline constexpr Unit newton{"N", 1.0, dim::force};
inline constexpr Unit hertz{"1/s", 1.0, dim::frequency};
inline constexpr Unit farad{"F", 1.0, dim::capacitance};
inline constexpr Unit volt{"V", 1.0, dim::voltage};
inline constexpr Unit nat{"nat", 1.0, dim::information};
inline constexpr Unit bit{"bit", std::numbers::ln2, dim::information};
inline constexpr Unit joule_per_kelvin{"J/K", 1.0, dim::thermal_entropy};
inline constexpr Unit one{"1", 1.0, dim::none};
}  // namespace unit

class Quantity {
 public:
  Quantity() = default;
  Quantity(double magnitude, Dimension d) : magnitude_(magnitude), dim_(d) {
    require(std::isfinite(magnitude), Errc::NonFiniteValue,
            "quantity magnitude must be finite (" + dim_.to_string() + ")");
  }
  Quantity(double value, const Unit& u) : Quantity(value * u.scale, u.dim) {}

  /// Magnitude in coherent units (kg, m, s, K, A, nat).
  double value() const { return magnitude_; }
  const Dimension& dim() const { return dim_; }

  /// Magnitude expressed in `u`; throws DimensionMismatch if incompatible.
  double in(const Unit& u) const {
    require(u.dim == dim_, Errc::DimensionMismatch,
            "cannot express [" + dim_.to_string() + "] in " + std::string(u.symbol));
    return magnitude_ / u.scale;
  }

  /// Magnitude after asserting the dimension; the usual entry check for APIs.
  double expect(const Dimension& d, std::string_view what) const {
    require(d == dim_, Errc::DimensionMismatch,
            std::string(what) + " must have dimension [" + d.to_string() + "], got [" +
                dim_.to_string() + "]");
    return magnitude_;
  }

  friend Quantity operator*(const Quantity& a, const Quantity& b) {
    return {a.magnitude_ * b.magnitude_, a.dim_ * b.dim_};
  }
  friend Quantity operator/(const Quantity& a, const Quantity& b) {
    return {a.magnitude_ / b.magnitude_, a.dim_ / b.dim_};
  }
  friend Quantity operator*(double s, const Quantity& q) { return {s * q.magnitude_, q.dim_}; }
  friend Quantity operator*(const Quantity& q, double s) { return {s * q.magnitude_, q.dim_}; }
  friend Quantity operator/(const Quantity& q, double s) { return {q.magnitude_ / s, q.dim_}; }
  friend Quantity operator+(const Quantity& a, const Quantity& b) {
    check_same(a, b, "+");
    return {a.magnitude_ + b.magnitude_, a.dim_};
  }
  friend Quantity operator-(const Quantity& a, const Quantity& b) {
    check_same(a, b, "-");
    return {a.magnitude_ - b.magnitude_, a.dim_};
  }
  Quantity operator-() const { return {-magnitude_, dim_}; }

  friend bool operator<(const Quantity& a, const Quantity& b) {
    check_same(a, b, "<");
    return a.magnitude_ < b.magnitude_;
  }
  friend bool operator==(const Quantity& a, const Quantity& b) {
    return a.dim_ == b.dim_ && a.magnitude_ == b.magnitude_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << magnitude_ << " [" << dim_.to_string() << "]";
    return os.str();
  }

 private:
  static void check_same(const Quantity& a, const Quantity& b, const char* op) {
    require(a.dim_ == b.dim_, Errc::DimensionMismatch,
            "operands of '" + std::string(op) + "' differ: [" + a.dim_.to_string() + "] vs [" +
                b.dim_.to_string() + "]");
  }

  double magnitude_ = 0.0;
  Dimension dim_{};
};

inline Quantity quantity_mul(const Quantity& a, const Quantity& b) { return a * b; }
inline Quantity quantity_div(const Quantity& a, const Quantity& b) { return a / b; }
inline Quantity quantity_add(const Quantity& a, const Quantity& b) { return a + b; }

inline Quantity kilograms(double v) { return {v, unit::kilogram}; }
inline Quantity metres(double v) { return {v, unit::metre}; }
inline Quantity seconds(double v) { return {v, unit::second}; }
inline Quantity kelvin(double v) { return {v, unit::kelvin}; }
inline Quantity joules(double v) { return {v, unit::joule}; }
inline Quantity watts(double v) { return {v, unit::watt}; }
inline Quantity bits(double v) { return {v, unit::bit}; }
inline Quantity nats(double v) { return {v, unit::nat}; }
inline Quantity dimensionless(double v) { return {v, dim::none}; }

/// Pinned physical constants (CODATA 2018, SI). planck_mass and planck_length
/// are derived from hbar, c and G and are never set independently.
struct Constants {
  Quantity hbar{1.054571817e-34, dim::action};
  Quantity c{299792458.0, dim::velocity};
  Quantity G{6.67430e-11, dim::gravitational};
  Quantity k_B{1.380649e-23, dim::thermal_entropy / dim::information};
  Quantity solar_mass{1.98892e30, dim::mass};
  Quantity electron_volt{1.602176634e-19, dim::energy};
  Quantity seconds_per_year{3.15576e7, dim::time};
  Quantity planck_mass{};
  Quantity planck_length{};

  Constants() { derive(); }

  /// Recomputes the Planck scales from hbar, c and G.
  void derive() {
    planck_mass = Quantity(std::sqrt(hbar.value() * c.value() / G.value()), dim::mass);
    planck_length =
        Quantity(std::sqrt(hbar.value() * G.value() / std::pow(c.value(), 3)), dim::length);
  }

  /// k_B as a plain J/K number, for formulas that already work in nats.
  double kB() const { return k_B.value(); }
};

inline const Constants& constants() {
  static const Constants pinned{};
  return pinned;
}

/// Verifies the Planck-scale identities; returns the worst relative error.
inline double constants_self_check(const Constants& k = constants()) {
  const double mp2 = k.planck_mass.value() * k.planck_mass.value();
  const double lp2 = k.planck_length.value() * k.planck_length.value();
  const double e1 = std::abs(mp2 * k.G.value() / (k.hbar.value() * k.c.value()) - 1.0);
  const double e2 =
      std::abs(lp2 * std::pow(k.c.value(), 3) / (k.hbar.value() * k.G.value()) - 1.0);
  const double worst = std::max(e1, e2);
  require(worst <= 1e-10, Errc::ConfigError, "Planck-scale identities violated");
  return worst;
}

/// Parses `key = number` lines ('#' starts a comment). Keys not present keep
/// their pinned values; unknown keys and the derived Planck scales are errors.
inline Constants parse_constants_override(std::istream& in, std::string_view source = "<input>") {
  Constants k;
  std::string line;
  int lineno = 0;
  auto where = [&] { return std::string(source) + ":" + std::to_string(lineno) + ": "; };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string{};
      const auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    require(eq != std::string::npos, Errc::ConfigError, where() + "expected 'key = number'");
    const std::string key = trim(line.substr(0, eq));
    const std::string text = trim(line.substr(eq + 1));
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    require(!text.empty() && end == text.c_str() + text.size() && std::isfinite(v) && v > 0,
            Errc::ConfigError, where() + "value for '" + key + "' is not a positive number");
    if (key == "hbar") k.hbar = Quantity(v, k.hbar.dim());
    else if (key == "c") k.c = Quantity(v, k.c.dim());
    else if (key == "G") k.G = Quantity(v, k.G.dim());
    else if (key == "k_B") k.k_B = Quantity(v, k.k_B.dim());
    else if (key == "solar_mass") k.solar_mass = Quantity(v, k.solar_mass.dim());
    else if (key == "electron_volt") k.electron_volt = Quantity(v, k.electron_volt.dim());
    else if (key == "seconds_per_year") k.seconds_per_year = Quantity(v, k.seconds_per_year.dim());
    else if (key == "planck_mass" || key == "planck_length")
      fail(Errc::ConfigError, where() + "'" + key + "' is derived from hbar, c and G");
    else
      fail(Errc::ConfigError, where() + "unknown constant '" + key + "'");
  }
  k.derive();
  constants_self_check(k);
  return k;
}

inline Constants load_constants_override(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::ConfigError, "cannot open constants file '" + path + "'");
  return parse_constants_override(in, path);
}

enum class EntropyUnit { Bits, Nats, JoulesPerKelvin };

/// Converts between information entropy (bits/nats) and thermodynamic
/// entropy (J/K); returns the value expressed in `target`.
inline double entropy_convert(const Quantity& s, EntropyUnit target,
                              const Constants& k = constants()) {
  double in_nats = 0.0;
  if (s.dim() == dim::information) {
    in_nats = s.value();
  } else if (s.dim() == dim::thermal_entropy) {
    in_nats = s.value() / k.kB();
  } else {
    fail(Errc::DimensionMismatch, "entropy must be information or J/K, got [" +
                                      s.dim().to_string() + "]");
  }
  switch (target) {
    case EntropyUnit::Bits: return in_nats / std::numbers::ln2;
    case EntropyUnit::Nats: return in_nats;
    case EntropyUnit::JoulesPerKelvin: return in_nats * k.kB();
  }
  return in_nats;
}

}  // namespace phicx
