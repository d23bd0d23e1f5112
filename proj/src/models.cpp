#include "etaspec/models.hpp"

#include <cmath>
#include <sstream>

namespace etaspec::models {

namespace {
void require_nonnegative(int n, const char* who) {
  if (n < 0) {
    std::ostringstream os;
    os << who << ": quantum number must be non-negative, got " << n;
    throw IndexOutOfRangeError(os.str());
  }
}
void require_model(const OscillatorModel& model) {
  if (!(model.omega > 0.0))
    throw NotPositiveError("OscillatorModel: omega must be positive");
}
}  // namespace

double hermite(int n, double y) {
  require_nonnegative(n, "hermite");
  if (n == 0) return 1.0;
  double hm = 1.0;       // H_0
  double h = 2.0 * y;    // H_1
  for (int k = 1; k < n; ++k) {
    double next = 2.0 * y * h - 2.0 * k * hm;
    hm = h;
    h = next;
  }
  return h;
}

double normalization(int n, const OscillatorModel& model) {
  require_nonnegative(n, "normalization");
  require_model(model);
  const double log_nn = 0.25 * std::log(model.omega / M_PI) -
                        0.5 * (n * std::log(2.0) + std::lgamma(n + 1.0));
  return std::exp(log_nn);
}

AnalyticEigenstate psi(int n, const OscillatorModel& model) {
  require_nonnegative(n, "psi");
  require_model(model);
  const double nn = normalization(n, model);
  const double w = model.omega;
  const double a = model.alpha;
  return AnalyticEigenstate{
      n, analytic_energy(n, model), [n, nn, w, a](double x) {
        return nn * hermite(n, std::sqrt(w) * x) *
               std::exp(-0.5 * w * x * x - a * x);
      }};
}

std::function<double(double)> eta_psi(int n, const OscillatorModel& model) {
  auto base = psi(n, model).evaluator;
  const double a = model.alpha;
  return [base, a](double x) { return std::exp(2.0 * a * x) * base(x); };
}

std::function<double(double)> rho_psi(int n, const OscillatorModel& model) {
  require_nonnegative(n, "rho_psi");
  require_model(model);
  const double nn = normalization(n, model);
  const double w = model.omega;
  return [n, nn, w](double x) {
    return nn * hermite(n, std::sqrt(w) * x) * std::exp(-0.5 * w * x * x);
  };
}

double analytic_energy(int n, const OscillatorModel& model) {
  require_nonnegative(n, "analytic_energy");
  require_model(model);
  return model.omega * (n + 0.5);
}

ComplexVector sample_on_grid(const std::function<double(double)>& f,
                             const Grid& grid) {
  ComplexVector v(grid.n);
  for (int j = 0; j < grid.n; ++j) v[j] = Complex(f(grid.point(j)), 0.0);
  return v;
}

}  // namespace etaspec::models
