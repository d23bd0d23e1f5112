#pragma once

// Dense complex linear algebra: eigendecompositions, positive square roots,
// spectral propagators, norms. Decompositions are delegated to LAPACK;
// everything here is a pure function of its inputs.

#include "etaspec/types.hpp"

namespace etaspec {

struct HermitianEigen {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // orthonormal columns, phase-fixed
};

struct GeneralEigen {
  ComplexVector values;   // ascending by (Re, Im)
  ComplexMatrix vectors;  // unit-norm right eigenvectors, phase-fixed
};

/// Largest-|entry| of v made real and positive (in place). No-op on zero v.
void fix_phase(ComplexVector& v);

/// Full eigendecomposition of a Hermitian matrix.
/// Throws NonSquareError, NotHermitianError (‖A−A†‖_F > tol·‖A‖_F),
/// ConvergenceFailureError.
HermitianEigen hermitian_eigen(const ComplexMatrix& A,
                               double hermiticity_tol = 1e-10);

/// Right eigenpairs of a general square matrix, sorted ascending by real
/// part (ties by imaginary part). Throws DefectiveMatrixError when the
/// eigenvector matrix is numerically rank-deficient or an eigenpair residual
/// exceeds residual_tol·‖A‖_F.
GeneralEigen general_eigen(const ComplexMatrix& A, double residual_tol = 1e-8,
                           double defect_tol = 1e-13);

/// Unique positive square root of a Hermitian positive-definite matrix.
/// Throws NotPositiveDefiniteError when the smallest eigenvalue is <= floor.
ComplexMatrix positive_sqrt(const ComplexMatrix& A, double floor);

/// V·diag(e^{−iE_n t})·V† for an orthonormal eigensystem. Identity at t = 0.
ComplexMatrix spectral_propagator(const HermitianEigen& eig, double t);

/// General-basis variant: V·diag(e^{−iE_n t})·V_inv.
ComplexMatrix spectral_propagator(const RealVector& values,
                                  const ComplexMatrix& V,
                                  const ComplexMatrix& V_inv, double t);

/// Phases e^{−iE_n t}, the coefficient-space form of the propagator.
ComplexVector propagator_phases(const RealVector& values, double t);

double frobenius_norm(const ComplexMatrix& A);

/// max(d)/min(d) for a strictly positive sequence. Throws NotPositiveError.
double condition_number_diag(const RealVector& d);

}  // namespace etaspec
