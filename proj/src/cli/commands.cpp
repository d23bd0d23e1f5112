#include "commands.hpp"

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "etaspec/construction.hpp"
#include "etaspec/discretize.hpp"
#include "etaspec/evolve.hpp"
#include "etaspec/metric.hpp"
#include "etaspec/models.hpp"
#include "matrix_io.hpp"

namespace etaspec::cli {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

FdOrder order_of(const RunConfig& cfg) {
  return cfg.fd_order == 2 ? FdOrder::second : FdOrder::fourth;
}

Tolerances tolerances_of(const RunConfig& cfg) {
  Tolerances t;
  t.admissibility = cfg.tol_admissibility;
  t.real_tol = cfg.tol_real;
  t.cluster_tol = cfg.tol_cluster;
  t.gram_tol = cfg.tol_gram;
  t.residual_tol = cfg.tol_residual;
  t.dep_tol = cfg.tol_dep;
  return t;
}

struct Pipeline {
  RunConfig cfg;
  ComplexMatrix H;
  MetricOperator metric;
  std::optional<Grid> grid;  // fd-oscillator only
};

ComplexMatrix random_hermitian(std::mt19937_64& rng, int dim) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix B(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) B(i, j) = Complex(u(rng), u(rng));
  return 0.5 * (B + B.adjoint());
}

RealVector random_log_uniform(std::mt19937_64& rng, int dim, double lo,
                              double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  RealVector d(dim);
  for (int i = 0; i < dim; ++i) d[i] = std::exp(u(rng));
  return d;
}

Pipeline make_pipeline(const RunConfig& cfg) {
  if (cfg.mode == "fd-oscillator") {
    Grid grid(cfg.grid_xmin, cfg.grid_xmax, cfg.grid_n);
    ModelParams params{cfg.alpha, cfg.omega, {}};
    ComplexMatrix H = build_hamiltonian(grid, params, order_of(cfg));
    ComplexMatrix eta = build_metric(grid, cfg.alpha, cfg.cond_cap);
    return Pipeline{cfg, std::move(H), MetricOperator::make(eta), grid};
  }
  if (cfg.mode == "algebraic") {
    std::mt19937_64 rng(cfg.seed);
    ComplexMatrix h_ref = random_hermitian(rng, cfg.algebraic_dim);
    RealVector rho = random_log_uniform(rng, cfg.algebraic_dim, 0.1, 10.0);
    auto [H, eta] = algebraic_model(h_ref, rho);
    return Pipeline{cfg, std::move(H), MetricOperator::make(eta), std::nullopt};
  }
  if (cfg.mode == "matrix-files") {
    ComplexMatrix H = read_matrix(cfg.h_file);
    ComplexMatrix eta = read_matrix(cfg.eta_file);
    if (H.rows() != H.cols() || eta.rows() != H.rows() || eta.cols() != H.cols())
      throw ConfigError("matrix-files: H and eta must be square and congruent");
    return Pipeline{cfg, std::move(H), MetricOperator::make(eta), std::nullopt};
  }
  throw ConfigError("unknown mode '" + cfg.mode + "'");
}

PhysicalBasis make_basis(const Pipeline& p) {
  return diagonalize_pseudo(p.H, p.metric, tolerances_of(p.cfg),
                            p.cfg.n_states);
}

RealVector make_times(const RunConfig& cfg) {
  if (cfg.time_steps == 1) return RealVector::Zero(1);
  RealVector t(cfg.time_steps);
  for (int k = 0; k < cfg.time_steps; ++k)
    t[k] = cfg.t_max * k / (cfg.time_steps - 1);
  return t;
}

ComplexVector superposition01(const PhysicalBasis& basis) {
  ComplexVector a = ComplexVector::Zero(basis.size());
  if (basis.size() >= 2) {
    a[0] = Complex(1.0 / std::sqrt(2.0), 0.0);
    a[1] = Complex(1.0 / std::sqrt(2.0), 0.0);
  } else {
    a[0] = Complex(1.0, 0.0);
  }
  return synthesize(basis, a);
}

std::filesystem::path out_path(const RunConfig& cfg, const std::string& name) {
  std::filesystem::path dir(cfg.output_dir);
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_spectrum_csv(const RunConfig& cfg, const PhysicalBasis& basis,
                        const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open '" + path.string() + "'");
  out << "n,E_numeric,E_analytic,abs_error\n";
  const bool analytic = cfg.mode == "fd-oscillator";
  for (Eigen::Index i = 0; i < basis.size(); ++i) {
    out << i << "," << fmt(basis.energies[i]);
    if (analytic) {
      const double ea = cfg.omega * (static_cast<double>(i) + 0.5);
      out << "," << fmt(ea) << "," << fmt(std::abs(basis.energies[i] - ea));
    } else {
      out << ",,";
    }
    out << "\n";
  }
}

json spectrum_json(const RunConfig& cfg, const PhysicalBasis& basis) {
  json rows = json::array();
  const bool analytic = cfg.mode == "fd-oscillator";
  for (Eigen::Index i = 0; i < basis.size(); ++i) {
    json row;
    row["n"] = static_cast<int>(i);
    row["E_numeric"] = basis.energies[i];
    if (analytic) {
      const double ea = cfg.omega * (static_cast<double>(i) + 0.5);
      row["E_analytic"] = ea;
      row["abs_error"] = std::abs(basis.energies[i] - ea);
    }
    rows.push_back(row);
  }
  return rows;
}

// Observed convergence order of the pseudo-Hermiticity residual over exact
// grid doublings; the FD defect annotation the report is required to carry.
json convergence_annotation(const RunConfig& cfg) {
  json out;
  json levels = json::array();
  int n = cfg.grid_n;
  std::vector<double> residuals;
  for (int level = 0; level < 3 && n >= 8; ++level) {
    Grid grid(cfg.grid_xmin, cfg.grid_xmax, n);
    ModelParams params{cfg.alpha, cfg.omega, {}};
    ComplexMatrix H = build_hamiltonian(grid, params, order_of(cfg));
    MetricOperator m =
        MetricOperator::make(build_metric(grid, cfg.alpha, cfg.cond_cap));
    double r = pseudo_hermiticity_residual(H, m);
    json lvl;
    lvl["n"] = n;
    lvl["residual"] = r;
    levels.push_back(lvl);
    residuals.push_back(r);
    n = (n - 1) / 2;  // exact spacing doubling for odd n
  }
  out["levels"] = levels;
  if (residuals.size() >= 2 && residuals.back() > 0.0) {
    double sum = 0.0;
    for (size_t i = 0; i + 1 < residuals.size(); ++i)
      sum += std::log2(residuals[i + 1] / residuals[i]);
    out["observed_order"] = sum / static_cast<double>(residuals.size() - 1);
  }
  return out;
}

json metadata_json(const Pipeline& p) {
  json meta;
  meta["config"] = p.cfg.echo();
  meta["version"] = kVersion;
  meta["eta_condition"] = p.metric.condition();
  if (p.cfg.report_timestamp) meta["timestamp"] = std::time(nullptr);
  return meta;
}

}  // namespace

int cmd_spectrum(const RunConfig& cfg) {
  Pipeline p = make_pipeline(cfg);
  PhysicalBasis basis = make_basis(p);
  write_spectrum_csv(cfg, basis, out_path(cfg, "spectrum.csv"));
  std::cout << "wrote " << out_path(cfg, "spectrum.csv").string() << " ("
            << basis.size() << " states)\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  Pipeline p = make_pipeline(cfg);
  PhysicalBasis basis = make_basis(p);
  EquivalentHermitian eh = equivalent_hermitian(p.H, p.metric);
  EquivalenceMap map = build_equivalence_map(basis, p.metric);

  RealVector times = make_times(cfg);
  ComplexVector psi0 = superposition01(basis);
  TrajectoryRecord traj =
      propagate_pseudo(basis, psi0, times, cfg.tol_projection, false);
  double drift = 0.0;
  for (Eigen::Index k = 0; k < times.size(); ++k)
    drift = std::max(drift, std::abs(traj.eta_norms[k] - traj.eta_norms[0]) /
                                traj.eta_norms[0]);
  double equivalence = equivalence_check(basis, p.metric, eh.h, psi0, times,
                                         cfg.tol_hermiticity,
                                         cfg.tol_projection);

  json report;
  report["metadata"] = metadata_json(p);
  report["metadata"]["range_dim"] = static_cast<int>(map.range_dim);
  json res;
  res["pseudo_hermiticity"] = basis.admissibility_residual;
  res["gram"] = basis.gram_residual;
  res["hermiticity_of_h"] = eh.hermiticity_residual;
  res["isometry"] = map.isometry_residual;
  res["unitarity"] = map.column_orthonormality_residual;
  res["equivalence"] = equivalence;
  res["norm_drift"] = drift;
  report["residuals"] = res;
  json th;
  th["pseudo_hermiticity"] = cfg.th_pseudo_hermiticity;
  th["gram"] = cfg.th_gram;
  th["hermiticity_of_h"] = cfg.th_hermiticity_h;
  th["isometry"] = cfg.th_isometry;
  th["unitarity"] = cfg.th_unitarity;
  th["equivalence"] = cfg.th_equivalence;
  th["norm_drift"] = cfg.th_norm_drift;
  report["thresholds"] = th;
  report["spectrum"] = spectrum_json(cfg, basis);
  if (cfg.mode == "fd-oscillator")
    report["convergence"] = convergence_annotation(cfg);

  bool pass = true;
  for (auto it = res.begin(); it != res.end(); ++it) {
    double v = it.value().get<double>();
    double bound = th[it.key()].get<double>();
    bool ok = std::isfinite(v) && v >= 0.0 && v <= bound;
    std::cout << (ok ? "ok   " : "FAIL ") << it.key() << " = " << fmt(v)
              << " (threshold " << fmt(bound) << ")\n";
    pass = pass && ok;
  }
  report["pass"] = pass;

  auto path = out_path(cfg, "report.json");
  std::ofstream out(path);
  out << report.dump(2) << "\n";
  std::cout << "wrote " << path.string() << "\n";
  return pass ? kExitOk : kExitNumerical;
}

int cmd_evolve(const RunConfig& cfg) {
  Pipeline p = make_pipeline(cfg);
  PhysicalBasis basis = make_basis(p);
  EquivalentHermitian eh = equivalent_hermitian(p.H, p.metric);
  RealVector times = make_times(cfg);
  ComplexVector psi0 = superposition01(basis);
  TrajectoryRecord traj =
      propagate_pseudo(basis, psi0, times, cfg.tol_projection, false);
  RealVector dev =
      equivalence_deviations(basis, p.metric, eh.h, psi0, times,
                             cfg.tol_hermiticity, cfg.tol_projection);

  auto path = out_path(cfg, "trajectory.csv");
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open '" + path.string() + "'");
  out << "t,eta_norm,ref_norm,equiv_dev\n";
  for (Eigen::Index k = 0; k < times.size(); ++k)
    out << fmt(times[k]) << "," << fmt(traj.eta_norms[k]) << ","
        << fmt(traj.ref_norms[k]) << "," << fmt(dev[k]) << "\n";

  double eta_drift = 0.0, ref_var = 0.0;
  for (Eigen::Index k = 0; k < times.size(); ++k) {
    eta_drift = std::max(eta_drift,
                         std::abs(traj.eta_norms[k] - traj.eta_norms[0]) /
                             traj.eta_norms[0]);
    ref_var = std::max(ref_var, std::abs(traj.ref_norms[k] - traj.ref_norms[0]) /
                                    traj.ref_norms[0]);
  }
  json summary;
  summary["max_eta_norm_drift"] = eta_drift;
  summary["max_ref_norm_variation"] = ref_var;
  summary["max_equivalence_deviation"] = dev.size() ? dev.maxCoeff() : 0.0;
  std::ofstream sout(out_path(cfg, "evolve_summary.json"));
  sout << summary.dump(2) << "\n";
  std::cout << "max drifts: eta_norm " << fmt(eta_drift) << ", ref_norm "
            << fmt(ref_var) << ", equivalence "
            << fmt(dev.size() ? dev.maxCoeff() : 0.0) << "\n";
  return kExitOk;
}

int cmd_equivalent(const RunConfig& cfg) {
  Pipeline p = make_pipeline(cfg);
  EquivalentHermitian eh = equivalent_hermitian(p.H, p.metric);
  auto path = out_path(cfg, "h.mat");
  write_matrix(path.string(), eh.h);
  std::cout << "wrote " << path.string() << "\nhermiticity_residual = "
            << fmt(eh.hermiticity_residual) << "\n";
  return kExitOk;
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"pseudo-Hermitian spectral toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  std::vector<std::string> overrides;
  int (*handler)(const RunConfig&) = nullptr;

  auto add_verb = [&](const std::string& name, const std::string& desc,
                      int (*fn)(const RunConfig&)) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--config", config_path, "config file (key = value)");
    sub->add_option("--out", out_dir, "output directory (overrides config)");
    sub->add_option("--override", overrides, "key=value override (repeatable)");
    sub->callback([&, fn]() { handler = fn; });
  };
  add_verb("spectrum", "eigenvalue table (CSV)", &cmd_spectrum);
  add_verb("verify", "all structural residuals (JSON report)", &cmd_verify);
  add_verb("evolve", "trajectory norms and equivalence deviation (CSV)",
           &cmd_evolve);
  add_verb("equivalent", "equivalent Hermitian Hamiltonian (matrix dump)",
           &cmd_equivalent);

  std::vector<const char*> argv;
  argv.push_back("etaspec");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    RunConfig cfg = config_path.empty()
                        ? default_config(overrides)
                        : load_config(config_path, overrides);
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    return handler(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ComplexSpectrumError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComplexSpectrum;
  } catch (const ConditionCapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConditionCap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace etaspec::cli
