#include "etaspec/construction.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace etaspec {

PhysicalBasis diagonalize_pseudo(const ComplexMatrix& H,
                                 const MetricOperator& m,
                                 const Tolerances& tols, int n_keep) {
  if (H.rows() != H.cols()) throw NonSquareError("diagonalize_pseudo: H not square");
  if (H.rows() != m.dim())
    throw ShapeMismatchError("diagonalize_pseudo: H and metric dimensions differ");

  const double admissibility = pseudo_hermiticity_residual(H, m);
  if (admissibility > tols.admissibility) {
    std::ostringstream os;
    os << "diagonalize_pseudo: pseudo-Hermiticity residual " << admissibility
       << " exceeds admissibility tolerance " << tols.admissibility;
    throw NotAdmissibleError(os.str());
  }

  GeneralEigen ge = general_eigen(H, tols.residual_tol);

  double max_abs = 0.0, max_imag = 0.0;
  for (Eigen::Index i = 0; i < ge.values.size(); ++i) {
    max_abs = std::max(max_abs, std::abs(ge.values[i]));
    max_imag = std::max(max_imag, std::abs(ge.values[i].imag()));
  }
  const double scale = std::max(max_abs, 1e-300);
  if (max_imag > tols.real_tol * scale) {
    std::ostringstream os;
    os << "diagonalize_pseudo: spectrum is not real; offending eigenvalues:";
    int listed = 0;
    for (Eigen::Index i = 0; i < ge.values.size() && listed < 8; ++i) {
      if (std::abs(ge.values[i].imag()) > tols.real_tol * scale) {
        os << " (" << ge.values[i].real() << (ge.values[i].imag() >= 0 ? "+" : "")
           << ge.values[i].imag() << "i)";
        ++listed;
      }
    }
    throw ComplexSpectrumError(os.str());
  }

  const Eigen::Index total = ge.values.size();
  const Eigen::Index keep =
      (n_keep < 0) ? total : std::min<Eigen::Index>(n_keep, total);

  PhysicalBasis basis{RealVector(keep), {}, {}, m};
  basis.admissibility_residual = admissibility;
  basis.max_imag_part = max_imag;
  for (Eigen::Index i = 0; i < keep; ++i) basis.energies[i] = ge.values[i].real();

  // Single-linkage clustering on the (sorted) kept eigenvalues.
  const double diam =
      keep > 0 ? std::max(basis.energies[keep - 1] - basis.energies[0],
                          std::abs(basis.energies[keep - 1]))
               : 0.0;
  const double gap = tols.cluster_tol * std::max(diam, 1e-300);
  for (Eigen::Index i = 0; i < keep; ++i) {
    if (i == 0 || basis.energies[i] - basis.energies[i - 1] > gap)
      basis.groups.emplace_back();
    basis.groups.back().push_back(static_cast<int>(i));
  }

  // Full-order η-Gram–Schmidt: covers within-group orthonormalization and
  // removes the O(Δ²) cross-group defect of discretized inputs.
  std::vector<ComplexVector> raw;
  raw.reserve(static_cast<size_t>(keep));
  for (Eigen::Index i = 0; i < keep; ++i) raw.push_back(ge.vectors.col(i));
  basis.states = eta_gram_schmidt(raw, m, tols.dep_tol);
  for (auto& s : basis.states) fix_phase(s);

  // Validate Eq.-(4)-style identities on the result.
  const double h_norm = std::max(H.norm(), 1e-300);
  for (Eigen::Index i = 0; i < keep; ++i) {
    double r = (H * basis.states[static_cast<size_t>(i)] -
                basis.energies[i] * basis.states[static_cast<size_t>(i)])
                   .norm();
    basis.max_eigen_residual = std::max(basis.max_eigen_residual, r / h_norm);
  }
  for (Eigen::Index i = 0; i < keep; ++i) {
    for (Eigen::Index j = i; j < keep; ++j) {
      Complex g = eta_inner(basis.states[static_cast<size_t>(i)],
                            basis.states[static_cast<size_t>(j)], m);
      double dev = std::abs(g - (i == j ? Complex(1.0) : Complex(0.0)));
      basis.gram_residual = std::max(basis.gram_residual, dev);
    }
  }
  if (basis.gram_residual > tols.gram_tol) {
    std::ostringstream os;
    os << "diagonalize_pseudo: eta-Gram residual " << basis.gram_residual
       << " exceeds " << tols.gram_tol << " after orthonormalization";
    throw ConvergenceFailureError(os.str());
  }
  return basis;
}

ComplexVector apply_projector(const PhysicalBasis& basis, int i,
                              const ComplexVector& chi) {
  if (i < 0 || i >= basis.size()) {
    std::ostringstream os;
    os << "apply_projector: index " << i << " out of range [0, " << basis.size()
       << ")";
    throw IndexOutOfRangeError(os.str());
  }
  const ComplexVector& s = basis.states[static_cast<size_t>(i)];
  return eta_inner(s, chi, basis.metric) * s;
}

ComplexVector coefficients(const PhysicalBasis& basis,
                           const ComplexVector& chi) {
  if (chi.size() != basis.ambient_dim())
    throw ShapeMismatchError("coefficients: vector dimension mismatch");
  ComplexVector a(basis.size());
  for (Eigen::Index i = 0; i < basis.size(); ++i)
    a[i] = eta_inner(basis.states[static_cast<size_t>(i)], chi, basis.metric);
  return a;
}

ComplexVector synthesize(const PhysicalBasis& basis, const ComplexVector& a) {
  if (a.size() != basis.size())
    throw ShapeMismatchError("synthesize: coefficient length mismatch");
  ComplexVector out = ComplexVector::Zero(basis.ambient_dim());
  for (Eigen::Index i = 0; i < basis.size(); ++i)
    out += a[i] * basis.states[static_cast<size_t>(i)];
  return out;
}

ComplexVector apply_hat_hamiltonian(const PhysicalBasis& basis,
                                    const ComplexVector& a) {
  if (a.size() != basis.size())
    throw ShapeMismatchError("apply_hat_hamiltonian: coefficient length mismatch");
  ComplexVector out(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out[i] = basis.energies[i] * a[i];
  return out;
}

EquivalenceMap build_equivalence_map(const PhysicalBasis& basis,
                                     const MetricOperator& m) {
  if (m.dim() != basis.ambient_dim())
    throw ShapeMismatchError("build_equivalence_map: metric dimension mismatch");
  EquivalenceMap map;
  map.matrix.resize(basis.ambient_dim(), basis.size());
  for (Eigen::Index i = 0; i < basis.size(); ++i)
    map.matrix.col(i) = m.rho() * basis.states[static_cast<size_t>(i)];
  map.range_dim = basis.size();

  ComplexMatrix gram = map.matrix.adjoint() * map.matrix;
  map.column_orthonormality_residual =
      (gram - ComplexMatrix::Identity(gram.rows(), gram.cols()))
          .cwiseAbs()
          .maxCoeff();

  // Isometry probe: ‖M a‖₂ against ‖Σ a_n ψ_n‖_η for fixed-seed random a.
  std::mt19937_64 rng(0x5eed0001ULL);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int probe = 0; probe < 8; ++probe) {
    ComplexVector a(basis.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) a[i] = Complex(u(rng), u(rng));
    const double lhs = (map.matrix * a).norm();
    const double rhs = eta_norm(synthesize(basis, a), m);
    const double dev = std::abs(lhs - rhs) / std::max(rhs, 1e-300);
    map.isometry_residual = std::max(map.isometry_residual, dev);
  }
  return map;
}

EquivalentHermitian equivalent_hermitian(const ComplexMatrix& H,
                                         const MetricOperator& m) {
  if (H.rows() != m.dim() || H.cols() != m.dim())
    throw ShapeMismatchError("equivalent_hermitian: shape mismatch");
  EquivalentHermitian out;
  out.h = m.rho() * H * m.rho_inv();
  out.hermiticity_residual =
      (out.h - out.h.adjoint()).norm() / std::max(out.h.norm(), 1e-300);
  return out;
}

}  // namespace etaspec
