#include "etaspec/evolve.hpp"

#include <cmath>
#include <sstream>

namespace etaspec {

TrajectoryRecord propagate_pseudo(const PhysicalBasis& basis,
                                  const ComplexVector& psi0,
                                  const RealVector& times,
                                  double projection_tol, bool store_states) {
  ComplexVector a = coefficients(basis, psi0);
  const double psi0_eta = eta_norm(psi0, basis.metric);
  const double res =
      eta_norm(psi0 - synthesize(basis, a), basis.metric) /
      std::max(psi0_eta, 1e-300);
  if (res > projection_tol) {
    std::ostringstream os;
    os << "propagate_pseudo: initial state is not in the span of the basis "
          "(eta-projection residual "
       << res << ", tolerance " << projection_tol << ")";
    throw NotInSpanError(os.str(), res);
  }

  TrajectoryRecord rec;
  rec.times = times;
  rec.eta_norms.resize(times.size());
  rec.ref_norms.resize(times.size());
  rec.projection_residual = res;
  if (store_states) rec.states.reserve(static_cast<size_t>(times.size()));
  for (Eigen::Index k = 0; k < times.size(); ++k) {
    ComplexVector at = propagator_phases(basis.energies, times[k]).cwiseProduct(a);
    ComplexVector psit = synthesize(basis, at);
    rec.eta_norms[k] = eta_norm(psit, basis.metric);
    rec.ref_norms[k] = psit.norm();
    if (store_states) rec.states.push_back(std::move(psit));
  }
  return rec;
}

TrajectoryRecord propagate_hermitian(const ComplexMatrix& h,
                                     const ComplexVector& phi0,
                                     const RealVector& times,
                                     double hermiticity_tol,
                                     bool store_states) {
  if (h.rows() != phi0.size())
    throw ShapeMismatchError("propagate_hermitian: dimension mismatch");
  HermitianEigen eig = hermitian_eigen(h, hermiticity_tol);
  ComplexVector c = eig.vectors.adjoint() * phi0;

  TrajectoryRecord rec;
  rec.times = times;
  rec.eta_norms.resize(times.size());
  rec.ref_norms.resize(times.size());
  if (store_states) rec.states.reserve(static_cast<size_t>(times.size()));
  for (Eigen::Index k = 0; k < times.size(); ++k) {
    ComplexVector ct = propagator_phases(eig.values, times[k]).cwiseProduct(c);
    ComplexVector phit = eig.vectors * ct;
    rec.ref_norms[k] = phit.norm();
    rec.eta_norms[k] = rec.ref_norms[k];  // reference geometry: same norm
    if (store_states) rec.states.push_back(std::move(phit));
  }
  return rec;
}

RealVector equivalence_deviations(const PhysicalBasis& basis,
                                  const MetricOperator& m,
                                  const ComplexMatrix& h,
                                  const ComplexVector& psi0,
                                  const RealVector& times,
                                  double hermiticity_tol,
                                  double projection_tol) {
  TrajectoryRecord pseudo =
      propagate_pseudo(basis, psi0, times, projection_tol, true);
  ComplexVector rho_psi0 = m.rho() * psi0;
  TrajectoryRecord herm =
      propagate_hermitian(h, rho_psi0, times, hermiticity_tol, true);
  const double denom = std::max(rho_psi0.norm(), 1e-300);
  RealVector dev(times.size());
  for (Eigen::Index k = 0; k < times.size(); ++k)
    dev[k] = (m.rho() * pseudo.states[static_cast<size_t>(k)] -
              herm.states[static_cast<size_t>(k)])
                 .norm() /
             denom;
  return dev;
}

double equivalence_check(const PhysicalBasis& basis, const MetricOperator& m,
                         const ComplexMatrix& h, const ComplexVector& psi0,
                         const RealVector& times, double hermiticity_tol,
                         double projection_tol) {
  RealVector dev = equivalence_deviations(basis, m, h, psi0, times,
                                          hermiticity_tol, projection_tol);
  return dev.size() ? dev.maxCoeff() : 0.0;
}

}  // namespace etaspec
