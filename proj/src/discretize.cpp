#include "etaspec/discretize.hpp"

#include <cmath>
#include <sstream>

#include "etaspec/numcore.hpp"

namespace etaspec {

Grid::Grid(double xmin_, double xmax_, int n_) : xmin(xmin_), xmax(xmax_), n(n_) {
  if (!(xmax > xmin)) {
    std::ostringstream os;
    os << "Grid: xmax (" << xmax << ") must exceed xmin (" << xmin << ")";
    throw ConfigError(os.str());
  }
  if (n < 8) {
    std::ostringstream os;
    os << "Grid: n = " << n << " is below the minimum of 8";
    throw ConfigError(os.str());
  }
}

RealVector Grid::points() const {
  RealVector x(n);
  for (int j = 0; j < n; ++j) x[j] = point(j);
  return x;
}

ComplexMatrix build_position(const Grid& grid) {
  ComplexMatrix X = ComplexMatrix::Zero(grid.n, grid.n);
  for (int j = 0; j < grid.n; ++j) X(j, j) = grid.point(j);
  return X;
}

ComplexMatrix build_momentum(const Grid& grid, FdOrder order) {
  const int n = grid.n;
  const double d = grid.spacing();
  ComplexMatrix P = ComplexMatrix::Zero(n, n);
  const Complex mi(0.0, -1.0);
  if (order == FdOrder::second) {
    const double c1 = 1.0 / (2.0 * d);
    for (int j = 0; j + 1 < n; ++j) {
      P(j, j + 1) = mi * c1;
      P(j + 1, j) = -mi * c1;
    }
  } else {
    const double c1 = 8.0 / (12.0 * d);
    const double c2 = -1.0 / (12.0 * d);
    for (int j = 0; j < n; ++j) {
      if (j + 1 < n) {
        P(j, j + 1) = mi * c1;
        P(j + 1, j) = -mi * c1;
      }
      if (j + 2 < n) {
        P(j, j + 2) = mi * c2;
        P(j + 2, j) = -mi * c2;
      }
    }
  }
  return P;
}

ComplexMatrix build_momentum_squared(const Grid& grid, FdOrder order) {
  const int n = grid.n;
  const double d2 = grid.spacing() * grid.spacing();
  ComplexMatrix P2 = ComplexMatrix::Zero(n, n);
  if (order == FdOrder::second) {
    for (int j = 0; j < n; ++j) {
      P2(j, j) = 2.0 / d2;
      if (j + 1 < n) {
        P2(j, j + 1) = -1.0 / d2;
        P2(j + 1, j) = -1.0 / d2;
      }
    }
  } else {
    const double c0 = 30.0 / (12.0 * d2);
    const double c1 = -16.0 / (12.0 * d2);
    const double c2 = 1.0 / (12.0 * d2);
    for (int j = 0; j < n; ++j) {
      P2(j, j) = c0;
      if (j + 1 < n) {
        P2(j, j + 1) = c1;
        P2(j + 1, j) = c1;
      }
      if (j + 2 < n) {
        P2(j, j + 2) = c2;
        P2(j + 2, j) = c2;
      }
    }
  }
  return P2;
}

ComplexMatrix build_hamiltonian(const Grid& grid, const ModelParams& params,
                                FdOrder order) {
  if (params.omega <= 0.0 && !params.potential)
    throw ConfigError("build_hamiltonian: omega must be positive");
  const int n = grid.n;
  const double a = params.alpha;
  ComplexMatrix H = 0.5 * build_momentum_squared(grid, order);
  H.noalias() -= Complex(0.0, a) * build_momentum(grid, order);
  for (int j = 0; j < n; ++j)
    H(j, j) += params.potential_at(grid.point(j)) - 0.5 * a * a;
  return H;
}

ComplexMatrix build_metric(const Grid& grid, double alpha, double cond_cap) {
  RealVector d(grid.n);
  for (int j = 0; j < grid.n; ++j) d[j] = std::exp(2.0 * alpha * grid.point(j));
  const double cond = condition_number_diag(d);
  if (cond > cond_cap) {
    std::ostringstream os;
    os << "build_metric: condition number of e^{2*alpha*x} is " << cond
       << " (closed form over the box: e^{2|alpha|(xmax-xmin)} = "
       << std::exp(2.0 * std::abs(alpha) * (grid.xmax - grid.xmin))
       << "), exceeding the cap " << cond_cap
       << "; the continuum metric is unbounded and this truncation cannot "
          "represent it";
    throw ConditionCapExceededError(os.str());
  }
  ComplexMatrix eta = ComplexMatrix::Zero(grid.n, grid.n);
  for (int j = 0; j < grid.n; ++j) eta(j, j) = d[j];
  return eta;
}

RealVector quadrature_weights(const Grid& grid) {
  return RealVector::Constant(grid.n, grid.spacing());
}

std::pair<ComplexMatrix, ComplexMatrix> algebraic_model(
    const ComplexMatrix& h_ref, const RealVector& rho_diag) {
  if (h_ref.rows() != h_ref.cols())
    throw NonSquareError("algebraic_model: h_ref must be square");
  if (rho_diag.size() != h_ref.rows())
    throw ShapeMismatchError("algebraic_model: rho_diag size mismatch");
  const double herm = (h_ref - h_ref.adjoint()).norm();
  if (herm > 1e-10 * std::max(h_ref.norm(), 1e-300))
    throw NotHermitianError("algebraic_model: h_ref is not Hermitian");
  for (Eigen::Index i = 0; i < rho_diag.size(); ++i) {
    if (!(rho_diag[i] > 0.0)) {
      std::ostringstream os;
      os << "algebraic_model: rho_diag[" << i << "] = " << rho_diag[i]
         << " is not strictly positive";
      throw NotPositiveError(os.str());
    }
  }
  const Eigen::Index n = h_ref.rows();
  ComplexMatrix H(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      H(i, j) = h_ref(i, j) * (rho_diag[j] / rho_diag[i]);
  ComplexMatrix eta = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) eta(i, i) = rho_diag[i] * rho_diag[i];
  return {std::move(H), std::move(eta)};
}

}  // namespace etaspec
