// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phicx {

enum class Errc {
  DimensionMismatch,
  NonFiniteValue,
  InvalidState,
  ZeroTemperature,
  NonPositiveTemperature,
  NumericalOverflow,
  NonConvergence,
  EnergyOutOfRange,
  InfiniteTemperature,
  NonPositiveEnergy,
  EntropyOutOfRange,
  NegativeInput,
  ProbabilityOutOfRange,
  NonPositiveMass,
  TimeOutOfRange,
  NonPositiveCapacitance,
  SymbolNotInBasis,
  TargetTooLarge,
  MissingAnnotation,
  InvalidPathway,
  ParseError,
  ConfigError,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NonFiniteValue: return "NonFiniteValue";
    case Errc::InvalidState: return "InvalidState";
    case Errc::ZeroTemperature: return "ZeroTemperature";
    case Errc::NonPositiveTemperature: return "NonPositiveTemperature";
    case Errc::NumericalOverflow: return "NumericalOverflow";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::EnergyOutOfRange: return "EnergyOutOfRange";
    case Errc::InfiniteTemperature: return "InfiniteTemperature";
    case Errc::NonPositiveEnergy: return "NonPositiveEnergy";
    case Errc::EntropyOutOfRange: return "EntropyOutOfRange";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case Errc::NonPositiveMass: return "NonPositiveMass";
    case Errc::TimeOutOfRange: return "TimeOutOfRange";
    case Errc::NonPositiveCapacitance: return "NonPositiveCapacitance";
    case Errc::SymbolNotInBasis: return "SymbolNotInBasis";
    case Errc::TargetTooLarge: return "TargetTooLarge";
    case Errc::MissingAnnotation: return "MissingAnnotation";
    case Errc::InvalidPathway: return "InvalidPathway";
    case Errc::ParseError: return "ParseError";
    case Errc::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

/// True for failures of the numerics themselves (as opposed to bad input).
inline bool is_numerical_failure(Errc code) {
  return code == Errc::NonConvergence || code == Errc::NumericalOverflow;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace phicx
