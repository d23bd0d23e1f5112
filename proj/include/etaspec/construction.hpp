#pragma once

// The core pipeline: diagonalize a pseudo-Hermitian H, gate on spectral
// realness, build the η-orthonormal physical basis with degeneracy groups,
// projectors and the spectral action, the equivalence map ρ̂, and the
// equivalent Hermitian Hamiltonian h = ρHρ⁻¹.

#include <vector>

#include "etaspec/metric.hpp"
#include "etaspec/numcore.hpp"
#include "etaspec/types.hpp"

namespace etaspec {

struct Tolerances {
  double admissibility = 1e-6;  // pseudo-Hermiticity residual gate
  double real_tol = 1e-8;       // |Im λ| ≤ real_tol · max|λ|
  double cluster_tol = 1e-8;    // degeneracy gap, relative to spectral diameter
  double gram_tol = 1e-8;       // η-Gram deviation from identity
  double residual_tol = 1e-8;   // eigenpair residual, relative to ‖H‖_F
  double dep_tol = 1e-10;       // Gram–Schmidt dependence threshold
};

// Immutable product of diagonalize_pseudo. At finite truncation the domain
// of the spectral extension coincides with the span of the states, so the
// self-adjoint-extension content survives only as the exactness of the
// spectral action (apply_hat_hamiltonian).
struct PhysicalBasis {
  RealVector energies;               // ascending
  std::vector<ComplexVector> states; // η-orthonormal, phase-fixed
  std::vector<std::vector<int>> groups;  // degenerate clusters of indices
  MetricOperator metric;

  // Diagnostics recorded at construction.
  double admissibility_residual = 0.0;
  double gram_residual = 0.0;          // max |⟨⟨ψ_m,ψ_n⟩⟩ − δ_mn|
  double max_eigen_residual = 0.0;     // max ‖Hψ_n − E_nψ_n‖ / ‖H‖_F
  double max_imag_part = 0.0;          // before discarding

  Eigen::Index size() const { return energies.size(); }
  Eigen::Index ambient_dim() const { return metric.dim(); }
};

/// Diagonalize H, verify realness, cluster degeneracies (single linkage on
/// sorted eigenvalues), η-orthonormalize, validate the Gram invariant.
/// n_keep < 0 keeps the whole spectrum; otherwise the lowest n_keep states.
/// Throws NotAdmissibleError, ComplexSpectrumError, DefectiveMatrixError.
PhysicalBasis diagonalize_pseudo(const ComplexMatrix& H,
                                 const MetricOperator& m,
                                 const Tolerances& tols = {}, int n_keep = -1);

/// Λᵢχ = ⟨⟨ψᵢ, χ⟩⟩ψᵢ.
ComplexVector apply_projector(const PhysicalBasis& basis, int i,
                              const ComplexVector& chi);

/// Coefficients a_n = ⟨⟨ψ_n, χ⟩⟩ of χ in the physical basis.
ComplexVector coefficients(const PhysicalBasis& basis,
                           const ComplexVector& chi);

/// Σ a_n ψ_n.
ComplexVector synthesize(const PhysicalBasis& basis, const ComplexVector& a);

/// Spectral action (a_n) ↦ (E_n a_n): the finite-dimensional face of the
/// self-adjoint extension.
ComplexVector apply_hat_hamiltonian(const PhysicalBasis& basis,
                                    const ComplexVector& a);

struct EquivalenceMap {
  ComplexMatrix matrix;  // columns are ρψ_n
  Eigen::Index range_dim = 0;
  double column_orthonormality_residual = 0.0;  // max |(M†M − I)_{mn}|
  double isometry_residual = 0.0;  // worst over deterministic random probes
};

EquivalenceMap build_equivalence_map(const PhysicalBasis& basis,
                                     const MetricOperator& m);

struct EquivalentHermitian {
  ComplexMatrix h;  // ρHρ⁻¹
  double hermiticity_residual = 0.0;  // ‖h − h†‖_F / ‖h‖_F
};

EquivalentHermitian equivalent_hermitian(const ComplexMatrix& H,
                                         const MetricOperator& m);

}  // namespace etaspec
