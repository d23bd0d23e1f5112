#pragma once

// Finite-dimensional representations of x, p, V, H and the metric e^{2αx}
// on a uniform interior grid with Dirichlet walls, plus the algebraic mode
// that manufactures exactly pseudo-Hermitian (H, η) pairs.

#include <functional>
#include <utility>

#include "etaspec/types.hpp"

namespace etaspec {

struct Grid {
  double xmin;
  double xmax;
  int n;  // interior point count

  Grid(double xmin_, double xmax_, int n_);

  double spacing() const { return (xmax - xmin) / (n + 1); }
  double point(int j) const { return xmin + (j + 1) * spacing(); }
  RealVector points() const;
};

// Stencil order for the difference operators. `fourth` is the pipeline
// default: at the default grid it keeps the first ~10 oscillator levels
// within 1e-4 of ω(n+1/2), which second-order stencils cannot reach.
enum class FdOrder { second, fourth };

struct ModelParams {
  double alpha = 0.0;
  double omega = 1.0;
  // Empty => harmonic ω²x²/2. Must be real-valued.
  std::function<double(double)> potential;

  double potential_at(double x) const {
    return potential ? potential(x) : 0.5 * omega * omega * x * x;
  }
};

/// diag(x_j).
ComplexMatrix build_position(const Grid& grid);

/// p = −i·D with D the central-difference matrix (antisymmetric, so p is
/// Hermitian exactly). Second order: D_{j,j±1} = ±1/(2Δ).
ComplexMatrix build_momentum(const Grid& grid, FdOrder order = FdOrder::second);

/// The discrete −d²/dx² (matrix representation of p²).
ComplexMatrix build_momentum_squared(const Grid& grid,
                                     FdOrder order = FdOrder::second);

/// H = ½p² − iαp − ½α²I + diag(V(x_j)), the expanded ½(p−iα)² + V.
ComplexMatrix build_hamiltonian(const Grid& grid, const ModelParams& params,
                                FdOrder order = FdOrder::fourth);

/// diag(e^{2αx_j}). Throws ConditionCapExceededError when the diagonal's
/// condition number exceeds cond_cap: the concrete finite-dimensional face
/// of the metric's unboundedness, surfaced rather than regularized.
ComplexMatrix build_metric(const Grid& grid, double alpha,
                           double cond_cap = 1e12);

/// Rectangle-rule weights, w_j = Δ for every interior point.
RealVector quadrature_weights(const Grid& grid);

/// Manufactures (H, η) = (ρ⁻¹·h_ref·ρ, ρ²) for diagonal positive ρ, making
/// H†η = ηH hold to rounding with no discretization error.
/// Throws NotHermitianError, NotPositiveError.
std::pair<ComplexMatrix, ComplexMatrix> algebraic_model(
    const ComplexMatrix& h_ref, const RealVector& rho_diag);

}  // namespace etaspec
