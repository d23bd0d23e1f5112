#include "config.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "etaspec/types.hpp"

namespace etaspec::cli {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' has non-numeric value '" + v +
                      "'");
  }
}

long long parse_int(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    long long i = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return i;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' has non-integer value '" + v +
                      "'");
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError("config: key '" + key + "' has non-boolean value '" + v +
                    "'");
}

void apply_mode_defaults(RunConfig& cfg) {
  if (cfg.mode == "fd-oscillator") return;  // struct defaults are FD defaults
  if (cfg.mode == "algebraic" || cfg.mode == "matrix-files") {
    cfg.alpha = 0.0;
    cfg.n_states = -1;  // keep the whole spectrum
    cfg.tol_admissibility = 1e-6;
    cfg.tol_real = 1e-8;
    cfg.tol_hermiticity = 1e-10;
    cfg.th_pseudo_hermiticity = 1e-10;
    cfg.th_gram = 1e-10;
    cfg.th_hermiticity_h = 1e-10;
    cfg.th_isometry = 1e-10;
    cfg.th_unitarity = 1e-10;
    cfg.th_equivalence = 1e-10;
    cfg.th_norm_drift = 1e-10;
    return;
  }
  throw ConfigError("config: unknown mode '" + cfg.mode +
                    "' (expected fd-oscillator, algebraic, or matrix-files)");
}

void apply_key(RunConfig& c, const std::string& k, const std::string& v) {
  if (k == "mode") return;  // consumed in the first pass
  if (k == "alpha") c.alpha = parse_double(k, v);
  else if (k == "omega") c.omega = parse_double(k, v);
  else if (k == "grid.xmin") c.grid_xmin = parse_double(k, v);
  else if (k == "grid.xmax") c.grid_xmax = parse_double(k, v);
  else if (k == "grid.n") c.grid_n = static_cast<int>(parse_int(k, v));
  else if (k == "n_states") c.n_states = static_cast<int>(parse_int(k, v));
  else if (k == "fd.order") c.fd_order = static_cast<int>(parse_int(k, v));
  else if (k == "seed") c.seed = static_cast<std::uint64_t>(parse_int(k, v));
  else if (k == "algebraic.dim")
    c.algebraic_dim = static_cast<int>(parse_int(k, v));
  else if (k == "output_dir") c.output_dir = v;
  else if (k == "times.t_max") c.t_max = parse_double(k, v);
  else if (k == "times.steps") c.time_steps = static_cast<int>(parse_int(k, v));
  else if (k == "files.h") c.h_file = v;
  else if (k == "files.eta") c.eta_file = v;
  else if (k == "report.timestamp") c.report_timestamp = parse_bool(k, v);
  else if (k == "tol.admissibility") c.tol_admissibility = parse_double(k, v);
  else if (k == "tol.real") c.tol_real = parse_double(k, v);
  else if (k == "tol.cluster") c.tol_cluster = parse_double(k, v);
  else if (k == "tol.gram") c.tol_gram = parse_double(k, v);
  else if (k == "tol.residual") c.tol_residual = parse_double(k, v);
  else if (k == "tol.dep") c.tol_dep = parse_double(k, v);
  else if (k == "tol.hermiticity") c.tol_hermiticity = parse_double(k, v);
  else if (k == "tol.projection") c.tol_projection = parse_double(k, v);
  else if (k == "tol.cond_cap") c.cond_cap = parse_double(k, v);
  else if (k == "threshold.pseudo_hermiticity")
    c.th_pseudo_hermiticity = parse_double(k, v);
  else if (k == "threshold.gram") c.th_gram = parse_double(k, v);
  else if (k == "threshold.hermiticity_of_h")
    c.th_hermiticity_h = parse_double(k, v);
  else if (k == "threshold.isometry") c.th_isometry = parse_double(k, v);
  else if (k == "threshold.unitarity") c.th_unitarity = parse_double(k, v);
  else if (k == "threshold.equivalence") c.th_equivalence = parse_double(k, v);
  else if (k == "threshold.norm_drift") c.th_norm_drift = parse_double(k, v);
  else throw ConfigError("config: unknown key '" + k + "'");
}

void validate(const RunConfig& c) {
  auto positive = [](const char* name, double v) {
    if (!(v > 0.0))
      throw ConfigError(std::string("config: ") + name + " must be positive");
  };
  positive("omega", c.omega);
  positive("tol.admissibility", c.tol_admissibility);
  positive("tol.real", c.tol_real);
  positive("tol.cluster", c.tol_cluster);
  positive("tol.gram", c.tol_gram);
  positive("tol.residual", c.tol_residual);
  positive("tol.dep", c.tol_dep);
  positive("tol.hermiticity", c.tol_hermiticity);
  positive("tol.projection", c.tol_projection);
  positive("tol.cond_cap", c.cond_cap);
  if (c.t_max < 0.0) throw ConfigError("config: times.t_max must be >= 0");
  if (c.time_steps < 1) throw ConfigError("config: times.steps must be >= 1");
  if (c.fd_order != 2 && c.fd_order != 4)
    throw ConfigError("config: fd.order must be 2 or 4");
  if (c.mode == "fd-oscillator" && c.n_states > c.grid_n)
    throw ConfigError("config: n_states must not exceed grid.n");
  if (c.mode == "matrix-files" && (c.h_file.empty() || c.eta_file.empty()))
    throw ConfigError("config: matrix-files mode requires files.h and files.eta");
}

using KvList = std::vector<std::pair<std::string, std::string>>;

RunConfig build(const KvList& kvs) {
  RunConfig cfg;
  for (const auto& [k, v] : kvs)
    if (k == "mode") cfg.mode = v;
  apply_mode_defaults(cfg);
  for (const auto& [k, v] : kvs) apply_key(cfg, k, v);
  validate(cfg);
  return cfg;
}

void append_override(KvList& kvs, const std::string& spec) {
  size_t eq = spec.find('=');
  if (eq == std::string::npos)
    throw ConfigError("override '" + spec + "' is not of the form key=value");
  kvs.emplace_back(trim(spec.substr(0, eq)), trim(spec.substr(eq + 1)));
}

}  // namespace

RunConfig load_config(const std::string& path,
                      const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  KvList kvs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    size_t eq = s.find('=');
    if (eq == std::string::npos) {
      std::ostringstream os;
      os << "config: " << path << ":" << lineno << ": expected key = value";
      throw ConfigError(os.str());
    }
    kvs.emplace_back(trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
  }
  for (const auto& o : overrides) append_override(kvs, o);
  return build(kvs);
}

RunConfig default_config(const std::vector<std::string>& overrides) {
  KvList kvs;
  for (const auto& o : overrides) append_override(kvs, o);
  return build(kvs);
}

namespace {
std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
}  // namespace

std::map<std::string, std::string> RunConfig::echo() const {
  std::map<std::string, std::string> m;
  m["mode"] = mode;
  m["alpha"] = fmt_double(alpha);
  m["omega"] = fmt_double(omega);
  m["grid.xmin"] = fmt_double(grid_xmin);
  m["grid.xmax"] = fmt_double(grid_xmax);
  m["grid.n"] = std::to_string(grid_n);
  m["n_states"] = std::to_string(n_states);
  m["fd.order"] = std::to_string(fd_order);
  m["seed"] = std::to_string(seed);
  m["algebraic.dim"] = std::to_string(algebraic_dim);
  m["times.t_max"] = fmt_double(t_max);
  m["times.steps"] = std::to_string(time_steps);
  if (!h_file.empty()) m["files.h"] = h_file;
  if (!eta_file.empty()) m["files.eta"] = eta_file;
  m["tol.admissibility"] = fmt_double(tol_admissibility);
  m["tol.real"] = fmt_double(tol_real);
  m["tol.cluster"] = fmt_double(tol_cluster);
  m["tol.gram"] = fmt_double(tol_gram);
  m["tol.residual"] = fmt_double(tol_residual);
  m["tol.dep"] = fmt_double(tol_dep);
  m["tol.hermiticity"] = fmt_double(tol_hermiticity);
  m["tol.projection"] = fmt_double(tol_projection);
  m["tol.cond_cap"] = fmt_double(cond_cap);
  m["threshold.pseudo_hermiticity"] = fmt_double(th_pseudo_hermiticity);
  m["threshold.gram"] = fmt_double(th_gram);
  m["threshold.hermiticity_of_h"] = fmt_double(th_hermiticity_h);
  m["threshold.isometry"] = fmt_double(th_isometry);
  m["threshold.unitarity"] = fmt_double(th_unitarity);
  m["threshold.equivalence"] = fmt_double(th_equivalence);
  m["threshold.norm_drift"] = fmt_double(th_norm_drift);
  return m;
}

}  // namespace etaspec::cli
