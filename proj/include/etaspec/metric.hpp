#pragma once

// η-geometry: the metric operator with its certified positive square root,
// pseudo-Hermiticity residuals, the physical inner product, η-adjoints, and
// Gram–Schmidt in the η-inner product.

#include <memory>
#include <vector>

#include "etaspec/types.hpp"

namespace etaspec {

// Immutable after construction; cheap to copy (shared storage).
class MetricOperator {
 public:
  /// Certifies η Hermitian positive-definite via full eigendecomposition and
  /// caches ρ = √η and ρ⁻¹. Eigenvalue floor: 1e-13 · max eigenvalue; at or
  /// below the floor the construction fails loudly (NotPositiveDefiniteError).
  static MetricOperator make(const ComplexMatrix& eta,
                             double hermiticity_tol = 1e-10);

  static MetricOperator identity(Eigen::Index n);

  const ComplexMatrix& eta() const { return impl_->eta; }
  const ComplexMatrix& rho() const { return impl_->rho; }
  const ComplexMatrix& rho_inv() const { return impl_->rho_inv; }
  double min_eigenvalue() const { return impl_->min_eigenvalue; }
  double condition() const { return impl_->condition; }
  Eigen::Index dim() const { return impl_->eta.rows(); }

 private:
  struct Impl {
    ComplexMatrix eta, rho, rho_inv;
    double min_eigenvalue = 0.0;
    double condition = 0.0;
  };
  explicit MetricOperator(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// ‖H†η − ηH‖_F / (‖H‖_F·‖η‖_F). Zero iff H is exactly η-pseudo-Hermitian.
double pseudo_hermiticity_residual(const ComplexMatrix& H,
                                   const MetricOperator& m);

/// ⟨⟨φ,ψ⟩⟩ = ⟨φ|ηψ⟩, conjugate-linear in the first argument. Optional
/// quadrature weights fold the measure in: Σ_j w_j conj(φ_j)(ηψ)_j.
Complex eta_inner(const ComplexVector& phi, const ComplexVector& psi,
                  const MetricOperator& m,
                  const RealVector* weights = nullptr);

/// The same inner product computed as ⟨ρφ|ρψ⟩. Kept separate so tests can
/// compare the two routes.
Complex eta_inner_rho_path(const ComplexVector& phi, const ComplexVector& psi,
                           const MetricOperator& m,
                           const RealVector* weights = nullptr);

double eta_norm(const ComplexVector& psi, const MetricOperator& m,
                const RealVector* weights = nullptr);

/// A^♯ = η⁻¹A†η, with η⁻¹ = ρ⁻¹ρ⁻¹ from the cached square root.
ComplexMatrix eta_adjoint(const ComplexMatrix& A, const MetricOperator& m);

struct SelfAdjointCheck {
  bool ok;
  double residual;  // ‖A^♯ − A‖_F / ‖A‖_F
};

SelfAdjointCheck is_eta_self_adjoint(const ComplexMatrix& A,
                                     const MetricOperator& m, double tol);

/// Classical Gram–Schmidt in the η-inner product, fixed input order, one
/// re-orthogonalization pass. Throws LinearlyDependentError with the index
/// of the first vector whose post-projection η-norm falls below
/// dep_tol · its original η-norm.
std::vector<ComplexVector> eta_gram_schmidt(
    const std::vector<ComplexVector>& vectors, const MetricOperator& m,
    double dep_tol = 1e-10);

}  // namespace etaspec
