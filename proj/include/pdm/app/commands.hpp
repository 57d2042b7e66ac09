#pragma once

#include <exception>

#include "pdm/app/config.hpp"
#include "pdm/app/reports.hpp"

namespace pdm::app {

enum ExitCode : int {
  exit_pass = 0,
  exit_verification_failed = 1,
  exit_invalid_parameters = 2,
  exit_domain_error = 3,
};

/// Pass thresholds shared by spectrum and verify.
inline constexpr double kEnergyTolerance = 1e-6;
inline constexpr double kResidualTolerance = 1e-8;
inline constexpr double kChainTolerance = 1e-8;
inline constexpr double kBoundaryTolerance = 1e-10;
inline constexpr double kGoldenTolerance = 1e-12;

ModelParameters parameters_of(const RunConfig& cfg);

/// Closed-form and finite-difference energies for every requested level.
SpectrumReport run_spectrum(const RunConfig& cfg);
/// Normalized samples of the closed-form eigenfunction of level cfg.n.
WavefunctionReport run_wavefunction(const RunConfig& cfg);
/// Residual, oracle, node, chain, limit and golden checks for every requested level.
/// A `fault_injection` block perturbs only the closed-form side.
VerifyReport run_verify(const RunConfig& cfg);

/// Maps library exceptions to exit codes (InvalidParameter -> 2, DomainError -> 3, other -> 1).
int exit_code_for(const std::exception& e);

}  // namespace pdm::app
