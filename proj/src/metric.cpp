#include "etaspec/metric.hpp"

#include <cmath>
#include <sstream>

#include "etaspec/numcore.hpp"

namespace etaspec {

MetricOperator MetricOperator::make(const ComplexMatrix& eta,
                                    double hermiticity_tol) {
  if (eta.rows() != eta.cols())
    throw NonSquareError("MetricOperator: eta must be square");
  HermitianEigen eig = hermitian_eigen(eta, hermiticity_tol);
  const double hi = eig.values[eig.values.size() - 1];
  const double lo = eig.values[0];
  const double floor = 1e-13 * hi;
  if (!(lo > floor) || !(lo > 0.0)) {
    std::ostringstream os;
    os << "MetricOperator: eta is not positive definite; smallest eigenvalue "
       << lo << " (floor " << floor << ")";
    throw NotPositiveDefiniteError(os.str(), lo);
  }
  auto impl = std::make_shared<Impl>();
  impl->eta = 0.5 * (eta + eta.adjoint());
  impl->rho =
      eig.vectors * eig.values.cwiseSqrt().asDiagonal() * eig.vectors.adjoint();
  impl->rho_inv = eig.vectors * eig.values.cwiseSqrt().cwiseInverse().asDiagonal() *
                  eig.vectors.adjoint();
  impl->min_eigenvalue = lo;
  impl->condition = hi / lo;
  return MetricOperator(std::move(impl));
}

MetricOperator MetricOperator::identity(Eigen::Index n) {
  auto impl = std::make_shared<Impl>();
  impl->eta = ComplexMatrix::Identity(n, n);
  impl->rho = impl->eta;
  impl->rho_inv = impl->eta;
  impl->min_eigenvalue = 1.0;
  impl->condition = 1.0;
  return MetricOperator(std::move(impl));
}

double pseudo_hermiticity_residual(const ComplexMatrix& H,
                                   const MetricOperator& m) {
  if (H.rows() != m.dim() || H.cols() != m.dim())
    throw ShapeMismatchError(
        "pseudo_hermiticity_residual: H and eta dimensions differ");
  const double num = (H.adjoint() * m.eta() - m.eta() * H).norm();
  const double den = H.norm() * m.eta().norm();
  return den > 0.0 ? num / den : 0.0;
}

namespace {
Complex weighted_dot(const ComplexVector& a, const ComplexVector& b,
                     const RealVector* w) {
  if (!w) return a.dot(b);
  if (w->size() != a.size())
    throw ShapeMismatchError("eta_inner: weights size mismatch");
  Complex s(0.0, 0.0);
  for (Eigen::Index j = 0; j < a.size(); ++j)
    s += (*w)[j] * std::conj(a[j]) * b[j];
  return s;
}
}  // namespace

Complex eta_inner(const ComplexVector& phi, const ComplexVector& psi,
                  const MetricOperator& m, const RealVector* weights) {
  if (phi.size() != m.dim() || psi.size() != m.dim())
    throw ShapeMismatchError("eta_inner: vector/metric dimensions differ");
  ComplexVector eta_psi = m.eta() * psi;
  return weighted_dot(phi, eta_psi, weights);
}

Complex eta_inner_rho_path(const ComplexVector& phi, const ComplexVector& psi,
                           const MetricOperator& m, const RealVector* weights) {
  if (phi.size() != m.dim() || psi.size() != m.dim())
    throw ShapeMismatchError("eta_inner: vector/metric dimensions differ");
  ComplexVector rp = m.rho() * phi;
  ComplexVector rq = m.rho() * psi;
  return weighted_dot(rp, rq, weights);
}

double eta_norm(const ComplexVector& psi, const MetricOperator& m,
                const RealVector* weights) {
  double v = eta_inner(psi, psi, m, weights).real();
  return std::sqrt(std::max(v, 0.0));
}

ComplexMatrix eta_adjoint(const ComplexMatrix& A, const MetricOperator& m) {
  if (A.rows() != m.dim() || A.cols() != m.dim())
    throw ShapeMismatchError("eta_adjoint: shape mismatch");
  return m.rho_inv() * m.rho_inv() * A.adjoint() * m.eta();
}

SelfAdjointCheck is_eta_self_adjoint(const ComplexMatrix& A,
                                     const MetricOperator& m, double tol) {
  const double num = (eta_adjoint(A, m) - A).norm();
  const double den = std::max(A.norm(), 1e-300);
  SelfAdjointCheck c{num <= tol * den, num / den};
  return c;
}

std::vector<ComplexVector> eta_gram_schmidt(
    const std::vector<ComplexVector>& vectors, const MetricOperator& m,
    double dep_tol) {
  std::vector<ComplexVector> out;
  out.reserve(vectors.size());
  for (size_t i = 0; i < vectors.size(); ++i) {
    ComplexVector v = vectors[i];
    const double original = eta_norm(v, m);
    for (int pass = 0; pass < 2; ++pass)
      for (size_t j = 0; j < i; ++j) v -= eta_inner(out[j], v, m) * out[j];
    const double nrm = eta_norm(v, m);
    if (!(nrm > dep_tol * original) || original == 0.0) {
      std::ostringstream os;
      os << "eta_gram_schmidt: vector " << i
         << " is eta-linearly dependent on its predecessors (remaining "
            "eta-norm "
         << nrm << " of " << original << ")";
      throw LinearlyDependentError(os.str(), static_cast<int>(i));
    }
    out.push_back(v / nrm);
  }
  return out;
}

}  // namespace etaspec
