#pragma once

// Analytic shifted harmonic oscillator: Hermite polynomials, normalization
// constants, the eigenfunctions ψ_n and their images under η = e^{2αx} and
// ρ = e^{αx}, and the exact energies ω(n+1/2).

#include <functional>

#include "etaspec/types.hpp"
#include "etaspec/discretize.hpp"

namespace etaspec::models {

struct OscillatorModel {
  double alpha = 0.0;
  double omega = 1.0;
};

struct AnalyticEigenstate {
  int n;
  double energy;
  std::function<double(double)> evaluator;  // ψ_n(x), real-valued
};

/// Physicists' Hermite polynomial H_n(y) by three-term recurrence.
double hermite(int n, double y);

/// N_n = (ω/π)^{1/4} / sqrt(2^n n!), evaluated in log space.
double normalization(int n, const OscillatorModel& model);

/// ψ_n(x) = N_n H_n(√ω x) e^{−ωx²/2 − αx}.
AnalyticEigenstate psi(int n, const OscillatorModel& model);

/// (ηψ_n)(x) = e^{2αx} ψ_n(x).
std::function<double(double)> eta_psi(int n, const OscillatorModel& model);

/// (ρψ_n)(x) = e^{αx} ψ_n(x) = N_n H_n(√ω x) e^{−ωx²/2}: the standard,
/// α-independent Hermite function.
std::function<double(double)> rho_psi(int n, const OscillatorModel& model);

/// ω(n + 1/2); α plays no role.
double analytic_energy(int n, const OscillatorModel& model);

ComplexVector sample_on_grid(const std::function<double(double)>& f,
                             const Grid& grid);

}  // namespace etaspec::models
