#pragma once

// Time evolution in both representations and the unitary-equivalence check.
// Propagation is exact spectral (eigenbasis phases), never time-stepping.

#include <vector>

#include "etaspec/construction.hpp"
#include "etaspec/types.hpp"

namespace etaspec {

struct TrajectoryRecord {
  RealVector times;
  RealVector eta_norms;
  RealVector ref_norms;
  std::vector<ComplexVector> states;  // optional snapshots
  double projection_residual = 0.0;
};

/// ψ(t) = Σ e^{−iE_n t} ⟨⟨ψ_n, ψ₀⟩⟩ ψ_n. The initial state must lie in the
/// span of the basis: the η-projection residual is checked, never silently
/// projected away. Throws NotInSpanError.
TrajectoryRecord propagate_pseudo(const PhysicalBasis& basis,
                                  const ComplexVector& psi0,
                                  const RealVector& times,
                                  double projection_tol = 1e-8,
                                  bool store_states = true);

/// φ(t) = e^{−iht}φ₀ via the spectral propagator of (h + h†)/2 after the
/// Hermiticity gate. Throws NotHermitianError.
TrajectoryRecord propagate_hermitian(const ComplexMatrix& h,
                                     const ComplexVector& phi0,
                                     const RealVector& times,
                                     double hermiticity_tol = 1e-10,
                                     bool store_states = true);

/// max over times of ‖ρψ(t) − e^{−iht}ρψ₀‖ / ‖ρψ₀‖.
double equivalence_check(const PhysicalBasis& basis, const MetricOperator& m,
                         const ComplexMatrix& h, const ComplexVector& psi0,
                         const RealVector& times,
                         double hermiticity_tol = 1e-10,
                         double projection_tol = 1e-8);

/// Per-time deviations, the elementwise version of equivalence_check.
RealVector equivalence_deviations(const PhysicalBasis& basis,
                                  const MetricOperator& m,
                                  const ComplexMatrix& h,
                                  const ComplexVector& psi0,
                                  const RealVector& times,
                                  double hermiticity_tol = 1e-10,
                                  double projection_tol = 1e-8);

}  // namespace etaspec
