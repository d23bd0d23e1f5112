#pragma once

// Flat key = value config with dotted sections. Unknown keys are hard
// errors so a misspelled tolerance can never silently fall back to a
// default. Mode-dependent defaults are applied before keys are consumed.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace etaspec::cli {

inline constexpr const char* kVersion = "0.1.0";

struct RunConfig {
  std::string mode = "fd-oscillator";  // fd-oscillator | algebraic | matrix-files
  double alpha = 0.3;
  double omega = 1.0;
  double grid_xmin = -10.0;
  double grid_xmax = 10.0;
  int grid_n = 801;
  int n_states = 10;
  int fd_order = 4;  // 2 | 4
  std::uint64_t seed = 1;
  int algebraic_dim = 20;
  std::string output_dir = ".";
  double t_max = 10.0;
  int time_steps = 101;
  std::string h_file;
  std::string eta_file;
  bool report_timestamp = false;

  // pipeline tolerances
  double tol_admissibility = 1e-2;
  double tol_real = 1e-6;
  double tol_cluster = 1e-8;
  double tol_gram = 1e-8;
  double tol_residual = 1e-8;
  double tol_dep = 1e-10;
  double tol_hermiticity = 1e-5;  // gate for propagating h
  double tol_projection = 1e-8;
  double cond_cap = 1e12;

  // verify thresholds (exit 0 iff every residual is under its threshold)
  double th_pseudo_hermiticity = 1e-2;
  double th_gram = 1e-8;
  double th_hermiticity_h = 1e-5;
  double th_isometry = 1e-6;
  double th_unitarity = 1e-6;
  double th_equivalence = 1e-3;
  double th_norm_drift = 1e-10;

  /// Echo of every effective key, for the report.
  std::map<std::string, std::string> echo() const;
};

/// Parse `path` (key = value lines, '#' comments) and apply overrides of the
/// form "key=value", in order. Throws ConfigError on unknown keys, bad
/// values, or violated invariants.
RunConfig load_config(const std::string& path,
                      const std::vector<std::string>& overrides);

/// Overrides applied to built-in defaults only (no file).
RunConfig default_config(const std::vector<std::string>& overrides);

}  // namespace etaspec::cli
