#include <doctest.h>

#include <cmath>
#include <random>

#include "etaspec/construction.hpp"
#include "etaspec/discretize.hpp"
#include "etaspec/evolve.hpp"

using namespace etaspec;

namespace {

ComplexMatrix random_hermitian(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = Complex(u(rng), u(rng));
  return 0.5 * (A + A.adjoint());
}

RealVector random_rho(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RealVector d(n);
  for (int i = 0; i < n; ++i) d[i] = std::pow(10.0, u(rng));
  return d;
}

RealVector linspace(double a, double b, int k) {
  RealVector t(k);
  for (int i = 0; i < k; ++i) t[i] = a + (b - a) * i / (k - 1);
  return t;
}

struct Fixture {
  ComplexMatrix H;
  MetricOperator m;
  PhysicalBasis basis;
  ComplexMatrix h;
};

Fixture make_fixture(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  ComplexMatrix href = random_hermitian(rng, n);
  auto [H, eta] = algebraic_model(href, random_rho(rng, n));
  auto m = MetricOperator::make(eta);
  return {H, m, diagonalize_pseudo(H, m), equivalent_hermitian(H, m).h};
}

}  // namespace

TEST_CASE("two-level hand oracle: relative phase and revival") {
  // Diagonal H with E = (0, 1), identity metric, psi0 = (1,1)/sqrt2.
  // psi(t) = (1, e^{-it})/sqrt2; at t = pi the overlap with psi0 is 0,
  // at t = 2pi the state revives exactly.
  ComplexMatrix H = ComplexMatrix::Zero(2, 2);
  H(1, 1) = 1.0;
  auto m = MetricOperator::identity(2);
  auto basis = diagonalize_pseudo(H, m);
  ComplexVector psi0(2);
  psi0 << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  RealVector times(3);
  times << 0.0, M_PI, 2.0 * M_PI;
  auto traj = propagate_pseudo(basis, psi0, times);
  REQUIRE(traj.states.size() == 3);
  CHECK((traj.states[0] - psi0).norm() < 1e-14);
  CHECK(std::abs(traj.states[1][1] + psi0[1]) < 1e-13);  // e^{-i pi} = -1
  CHECK((traj.states[2] - psi0).norm() < 1e-12);
  for (int i = 0; i < 3; ++i) {
    CHECK(traj.eta_norms[i] == doctest::Approx(1.0));
    CHECK(traj.ref_norms[i] == doctest::Approx(1.0));
  }
  CHECK(traj.projection_residual < 1e-14);
}

TEST_CASE("eta-norm is conserved while the reference norm beats") {
  auto fx = make_fixture(5, 10);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexVector psi0(10);
  for (int i = 0; i < 10; ++i) psi0[i] = Complex(u(rng), u(rng));
  RealVector times = linspace(0.0, 10.0, 41);
  auto traj = propagate_pseudo(fx.basis, psi0, times, 1e-8, false);
  CHECK(traj.states.empty());
  const double n0 = traj.eta_norms[0];
  double ref_min = traj.ref_norms[0], ref_max = traj.ref_norms[0];
  for (int i = 0; i < 41; ++i) {
    CHECK(std::abs(traj.eta_norms[i] - n0) <= 1e-10 * n0);
    ref_min = std::min(ref_min, traj.ref_norms[i]);
    ref_max = std::max(ref_max, traj.ref_norms[i]);
  }
  // with a genuinely non-identity metric the Euclidean norm oscillates
  CHECK((ref_max - ref_min) / ref_max > 1e-3);
}

TEST_CASE("propagate_pseudo rejects a state outside the span") {
  auto fx = make_fixture(5, 10);
  auto truncated = diagonalize_pseudo(fx.H, fx.m, {}, 3);
  ComplexVector outside = ComplexVector::Zero(10);
  outside[9] = 1.0;  // generic vector, far from the 3-dim span
  RealVector times = linspace(0.0, 1.0, 3);
  CHECK_THROWS_AS(propagate_pseudo(truncated, outside, times),
                  NotInSpanError);
  // but a synthesized in-span state passes
  ComplexVector a(3);
  a << 1.0, Complex(0.0, 1.0), -0.5;
  ComplexVector inside = synthesize(truncated, a);
  CHECK_NOTHROW(propagate_pseudo(truncated, inside, times));
}

TEST_CASE("propagate_hermitian conserves the Euclidean norm") {
  std::mt19937_64 rng(12);
  ComplexMatrix h = random_hermitian(rng, 8);
  ComplexVector phi0(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 8; ++i) phi0[i] = Complex(u(rng), u(rng));
  RealVector times = linspace(0.0, 7.0, 15);
  auto traj = propagate_hermitian(h, phi0, times);
  for (int i = 0; i < 15; ++i) {
    CHECK(traj.ref_norms[i] == doctest::Approx(phi0.norm()).epsilon(1e-12));
    CHECK(traj.eta_norms[i] == doctest::Approx(phi0.norm()).epsilon(1e-12));
  }
  CHECK((traj.states[0] - phi0).norm() < 1e-13);

  ComplexMatrix nh(2, 2);
  nh << 0.0, 1.0, 0.0, 0.0;
  ComplexVector v2 = ComplexVector::Ones(2);
  CHECK_THROWS_AS(propagate_hermitian(nh, v2, times), NotHermitianError);
}

TEST_CASE("hermitian propagation matches the matrix exponential oracle") {
  // h = [[0, pi/2], [pi/2, 0]]: e^{-iht}(1,0) = (cos(pi t/2), -i sin(pi t/2)).
  ComplexMatrix h(2, 2);
  h << 0.0, M_PI / 2.0, M_PI / 2.0, 0.0;
  ComplexVector phi0(2);
  phi0 << 1.0, 0.0;
  RealVector times(3);
  times << 0.0, 1.0, 2.0;
  auto traj = propagate_hermitian(h, phi0, times);
  CHECK(std::abs(traj.states[1][0]) < 1e-13);                     // cos(pi/2)
  CHECK(std::abs(traj.states[1][1] - Complex(0.0, -1.0)) < 1e-13);
  CHECK(std::abs(traj.states[2][0] - Complex(-1.0)) < 1e-13);     // cos(pi)
  CHECK(std::abs(traj.states[2][1]) < 1e-13);
}

TEST_CASE("the two representations evolve unitarily equivalently") {
  auto fx = make_fixture(44, 12);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexVector psi0(12);
  for (int i = 0; i < 12; ++i) psi0[i] = Complex(u(rng), u(rng));
  RealVector times = linspace(0.0, 10.0, 21);
  CHECK(equivalence_check(fx.basis, fx.m, fx.h, psi0, times) < 1e-10);
  RealVector dev = equivalence_deviations(fx.basis, fx.m, fx.h, psi0, times);
  REQUIRE(dev.size() == 21);
  CHECK(dev[0] < 1e-12);
  CHECK(dev.maxCoeff() < 1e-10);
}

TEST_CASE("finite-difference oscillator: conserved eta-norm, equivalent h") {
  const double alpha = 0.3;
  Grid g(-10.0, 10.0, 301);
  ModelParams params;
  params.alpha = alpha;
  ComplexMatrix H = build_hamiltonian(g, params);
  auto m = MetricOperator::make(build_metric(g, alpha));
  Tolerances tols;
  tols.admissibility = 1e-2;
  tols.real_tol = 1e-6;
  auto basis = diagonalize_pseudo(H, m, tols, 8);
  ComplexVector a = ComplexVector::Zero(8);
  a[0] = a[1] = 1.0 / std::sqrt(2.0);
  ComplexVector psi0 = synthesize(basis, a);
  RealVector times = linspace(0.0, 10.0, 21);
  auto traj = propagate_pseudo(basis, psi0, times, 1e-6, false);
  for (int i = 0; i < 21; ++i)
    CHECK(std::abs(traj.eta_norms[i] - traj.eta_norms[0]) <=
          1e-10 * traj.eta_norms[0]);
  ComplexMatrix h = equivalent_hermitian(H, m).h;
  CHECK(equivalence_check(basis, m, h, psi0, times, 1e-5, 1e-6) < 1e-3);
}
