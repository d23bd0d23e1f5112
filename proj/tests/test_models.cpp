#include <doctest.h>

#include <cmath>

#include "etaspec/metric.hpp"
#include "etaspec/models.hpp"

using namespace etaspec;
using namespace etaspec::models;

TEST_CASE("hermite recurrence against hand-expanded polynomials") {
  // H0=1, H1=2y, H2=4y^2-2, H3=8y^3-12y, H4=16y^4-48y^2+12, H5=32y^5-160y^3+120y
  CHECK(hermite(0, 0.7) == doctest::Approx(1.0));
  CHECK(hermite(1, 0.7) == doctest::Approx(1.4));
  CHECK(hermite(2, 1.0) == doctest::Approx(2.0));
  CHECK(hermite(3, 2.0) == doctest::Approx(8 * 8.0 - 24.0));
  CHECK(hermite(4, 0.5) == doctest::Approx(16 * 0.0625 - 48 * 0.25 + 12));
  CHECK(hermite(5, 1.0) == doctest::Approx(-8.0));
  // parity: H_n(-y) = (-1)^n H_n(y)
  for (int n = 0; n < 12; ++n)
    CHECK(hermite(n, -1.3) ==
          doctest::Approx((n % 2 ? -1.0 : 1.0) * hermite(n, 1.3)));
  // recurrence consistency at higher order
  double y = 0.9;
  CHECK(hermite(10, y) ==
        doctest::Approx(2 * y * hermite(9, y) - 18 * hermite(8, y)));
}

TEST_CASE("normalization hand values") {
  OscillatorModel unit;  // omega = 1
  CHECK(normalization(0, unit) == doctest::Approx(std::pow(M_PI, -0.25)));
  CHECK(normalization(1, unit) ==
        doctest::Approx(std::pow(M_PI, -0.25) / std::sqrt(2.0)));
  CHECK(normalization(4, unit) ==
        doctest::Approx(std::pow(M_PI, -0.25) / std::sqrt(16.0 * 24.0)));
  OscillatorModel w4{0.0, 4.0};
  CHECK(normalization(0, w4) ==
        doctest::Approx(std::pow(4.0 / M_PI, 0.25)));
  // log-space evaluation survives factorials that overflow double
  CHECK(std::isfinite(normalization(150, unit)));
  CHECK(normalization(150, unit) > 0.0);
  // N_150 = exp(-0.5*(150 log 2 + lgamma(151)) - 0.25 log pi)
  CHECK(std::log(normalization(150, unit)) ==
        doctest::Approx(-0.5 * (150 * std::log(2.0) + std::lgamma(151.0)) -
                        0.25 * std::log(M_PI)));
}

TEST_CASE("analytic energies are omega(n + 1/2), independent of alpha") {
  OscillatorModel a{0.7, 2.5};
  OscillatorModel b{0.0, 2.5};
  for (int n = 0; n < 6; ++n) {
    CHECK(analytic_energy(n, a) == doctest::Approx(2.5 * (n + 0.5)));
    CHECK(analytic_energy(n, a) == analytic_energy(n, b));
  }
}

TEST_CASE("psi ground state closed form") {
  OscillatorModel model{0.3, 1.0};
  auto state = psi(0, model);
  CHECK(state.n == 0);
  CHECK(state.energy == doctest::Approx(0.5));
  for (double x : {-1.0, 0.0, 0.4, 2.0}) {
    double expected =
        std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x - 0.3 * x);
    CHECK(state.evaluator(x) == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("eta_psi and rho_psi are the expected exponential dressings") {
  OscillatorModel model{0.4, 1.5};
  auto base = psi(2, model);
  auto eps = eta_psi(2, model);
  auto rps = rho_psi(2, model);
  for (double x : {-2.0, 0.1, 1.7}) {
    CHECK(eps(x) ==
          doctest::Approx(std::exp(2 * 0.4 * x) * base.evaluator(x)));
    CHECK(rps(x) == doctest::Approx(std::exp(0.4 * x) * base.evaluator(x)));
  }
  // rho_psi is alpha-independent (the standard Hermite function)
  OscillatorModel noshift{0.0, 1.5};
  auto plain = rho_psi(2, noshift);
  for (double x : {-2.0, 0.1, 1.7})
    CHECK(rps(x) == doctest::Approx(plain(x)));
}

TEST_CASE("rho_psi are L2-orthonormal under the grid quadrature") {
  OscillatorModel model{0.3, 1.0};
  Grid g(-10.0, 10.0, 401);
  RealVector w = quadrature_weights(g);
  std::vector<ComplexVector> states;
  for (int n = 0; n < 6; ++n)
    states.push_back(sample_on_grid(rho_psi(n, model), g));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < g.n; ++k)
        s += w[k] * std::conj(states[i][k]) * states[j][k];
      CHECK(std::abs(s - (i == j ? Complex(1.0) : Complex(0.0))) < 1e-8);
    }
}

TEST_CASE("psi are eta-orthonormal with the weighted inner product") {
  // <<psi_m, psi_n>> with weight e^{2 alpha x} equals delta_mn: the alpha
  // shift cancels exactly against the metric.
  OscillatorModel model{0.25, 1.0};
  Grid g(-10.0, 10.0, 401);
  RealVector w = quadrature_weights(g);
  auto m = MetricOperator::make(build_metric(g, model.alpha));
  std::vector<ComplexVector> states;
  for (int n = 0; n < 5; ++n)
    states.push_back(sample_on_grid(psi(n, model).evaluator, g));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      Complex s = eta_inner(states[i], states[j], m, &w);
      CHECK(std::abs(s - (i == j ? Complex(1.0) : Complex(0.0))) < 1e-8);
    }
}

TEST_CASE("sampled psi nearly solves the discrete eigen-relation") {
  OscillatorModel model{0.3, 1.0};
  Grid g(-10.0, 10.0, 401);
  ModelParams params;
  params.alpha = model.alpha;
  params.omega = model.omega;
  ComplexMatrix H = build_hamiltonian(g, params, FdOrder::fourth);
  for (int n = 0; n < 3; ++n) {
    ComplexVector v = sample_on_grid(psi(n, model).evaluator, g);
    double E = analytic_energy(n, model);
    CHECK((H * v - E * v).norm() / v.norm() < 1e-4);
  }
}

TEST_CASE("sample_on_grid evaluates pointwise") {
  Grid g(0.0, 1.0, 9);
  ComplexVector v = sample_on_grid([](double x) { return 3.0 * x; }, g);
  REQUIRE(v.size() == g.n);
  for (int j = 0; j < g.n; ++j)
    CHECK(v[j].real() == doctest::Approx(3.0 * g.point(j)));
}
