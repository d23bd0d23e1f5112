#include "etaspec/numcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include <lapacke.h>

namespace etaspec {

namespace {

lapack_complex_double* lp(ComplexMatrix& A) {
  return reinterpret_cast<lapack_complex_double*>(A.data());
}

void require_square(const ComplexMatrix& A, const char* who) {
  if (A.rows() != A.cols()) {
    std::ostringstream os;
    os << who << ": matrix is " << A.rows() << "x" << A.cols()
       << ", expected square";
    throw NonSquareError(os.str());
  }
}

}  // namespace

void fix_phase(ComplexVector& v) {
  Eigen::Index imax = 0;
  double best = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    double a = std::abs(v[i]);
    if (a > best) {
      best = a;
      imax = i;
    }
  }
  if (best == 0.0) return;
  v *= std::conj(v[imax]) / best;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& A, double hermiticity_tol) {
  require_square(A, "hermitian_eigen");
  const double scale = A.norm();
  const double herm = (A - A.adjoint()).norm();
  if (herm > hermiticity_tol * std::max(scale, 1e-300)) {
    std::ostringstream os;
    os << "hermitian_eigen: Hermiticity residual " << herm / scale
       << " exceeds tolerance " << hermiticity_tol;
    throw NotHermitianError(os.str());
  }
  const lapack_int n = static_cast<lapack_int>(A.rows());
  HermitianEigen out;
  out.vectors = 0.5 * (A + A.adjoint());
  out.values.resize(n);
  lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                   lp(out.vectors), std::max<lapack_int>(n, 1),
                                   out.values.data());
  if (info != 0) {
    std::ostringstream os;
    os << "hermitian_eigen: LAPACK zheevd failed, info=" << info;
    throw ConvergenceFailureError(os.str());
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    ComplexVector col = out.vectors.col(j);
    fix_phase(col);
    out.vectors.col(j) = col;
  }
  return out;
}

GeneralEigen general_eigen(const ComplexMatrix& A, double residual_tol,
                           double defect_tol) {
  require_square(A, "general_eigen");
  const lapack_int n = static_cast<lapack_int>(A.rows());
  ComplexMatrix work = A;
  ComplexVector values(n);
  ComplexMatrix vectors(n, n);
  lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', 'V', n, lp(work), std::max<lapack_int>(n, 1),
      reinterpret_cast<lapack_complex_double*>(values.data()), nullptr, 1,
      lp(vectors), std::max<lapack_int>(n, 1));
  if (info != 0) {
    std::ostringstream os;
    os << "general_eigen: LAPACK zgeev failed, info=" << info;
    throw ConvergenceFailureError(os.str());
  }

  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (values[a].real() != values[b].real())
      return values[a].real() < values[b].real();
    return values[a].imag() < values[b].imag();
  });

  GeneralEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.values[j] = values[order[static_cast<size_t>(j)]];
    ComplexVector col = vectors.col(order[static_cast<size_t>(j)]);
    col.normalize();
    fix_phase(col);
    out.vectors.col(j) = col;
  }

  const double a_norm = A.norm();
  double worst = 0.0;
  Eigen::Index worst_j = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    double r = (A * out.vectors.col(j) - out.values[j] * out.vectors.col(j))
                   .norm();
    if (r > worst) {
      worst = r;
      worst_j = j;
    }
  }
  if (worst > residual_tol * std::max(a_norm, 1e-300)) {
    std::ostringstream os;
    os << "general_eigen: eigenpair " << worst_j << " residual " << worst
       << " exceeds " << residual_tol << "*||A||; matrix is defective or "
       << "ill-conditioned";
    throw DefectiveMatrixError(os.str());
  }
  // Coalesced eigenvectors do not show up in per-pair residuals; a
  // rank-deficient eigenvector matrix does.
  Eigen::PartialPivLU<ComplexMatrix> lu(out.vectors);
  double rcond = lu.rcond();
  if (!(rcond > defect_tol)) {
    std::ostringstream os;
    os << "general_eigen: eigenvector matrix numerically singular "
       << "(rcond=" << rcond << "); matrix is defective";
    throw DefectiveMatrixError(os.str());
  }
  return out;
}

ComplexMatrix positive_sqrt(const ComplexMatrix& A, double floor) {
  HermitianEigen eig = hermitian_eigen(A);
  const double lo = eig.values.size() ? eig.values[0] : 0.0;
  if (!(lo > floor)) {
    std::ostringstream os;
    os << "positive_sqrt: smallest eigenvalue " << lo
       << " is not above the floor " << floor;
    throw NotPositiveDefiniteError(os.str(), lo);
  }
  return eig.vectors * eig.values.cwiseSqrt().asDiagonal() *
         eig.vectors.adjoint();
}

ComplexVector propagator_phases(const RealVector& values, double t) {
  ComplexVector ph(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i)
    ph[i] = std::polar(1.0, -values[i] * t);
  return ph;
}

ComplexMatrix spectral_propagator(const HermitianEigen& eig, double t) {
  if (t == 0.0)
    return ComplexMatrix::Identity(eig.vectors.rows(), eig.vectors.cols());
  return eig.vectors * propagator_phases(eig.values, t).asDiagonal() *
         eig.vectors.adjoint();
}

ComplexMatrix spectral_propagator(const RealVector& values,
                                  const ComplexMatrix& V,
                                  const ComplexMatrix& V_inv, double t) {
  if (V.cols() != values.size() || V_inv.rows() != values.size())
    throw ShapeMismatchError("spectral_propagator: basis/value size mismatch");
  if (t == 0.0) return ComplexMatrix::Identity(V.rows(), V_inv.cols());
  return V * propagator_phases(values, t).asDiagonal() * V_inv;
}

double frobenius_norm(const ComplexMatrix& A) { return A.norm(); }

double condition_number_diag(const RealVector& d) {
  if (d.size() == 0) throw NotPositiveError("condition_number_diag: empty");
  double lo = d[0], hi = d[0];
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (!(d[i] > 0.0)) {
      std::ostringstream os;
      os << "condition_number_diag: entry " << i << " = " << d[i]
         << " is not strictly positive";
      throw NotPositiveError(os.str());
    }
    lo = std::min(lo, d[i]);
    hi = std::max(hi, d[i]);
  }
  return hi / lo;
}

}  // namespace etaspec
