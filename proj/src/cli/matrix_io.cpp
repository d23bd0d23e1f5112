#include "matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace etaspec::cli {

void write_matrix(const std::string& path, const ComplexMatrix& M) {
  std::ofstream out(path);
  if (!out) throw ConfigError("write_matrix: cannot open '" + path + "'");
  out << M.rows() << " " << M.cols() << "\n";
  char buf[96];
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g %.17g", M(i, j).real(),
                    M(i, j).imag());
      out << buf << (j + 1 < M.cols() ? " " : "");
    }
    out << "\n";
  }
  if (!out) throw ConfigError("write_matrix: write to '" + path + "' failed");
}

ComplexMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("read_matrix: cannot open '" + path + "'");
  Eigen::Index rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows <= 0 || cols <= 0)
    throw ConfigError("read_matrix: bad header in '" + path + "'");
  ComplexMatrix M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      double re = 0.0, im = 0.0;
      if (!(in >> re >> im)) {
        std::ostringstream os;
        os << "read_matrix: truncated data in '" << path << "' at entry (" << i
           << "," << j << ")";
        throw ConfigError(os.str());
      }
      M(i, j) = Complex(re, im);
    }
  }
  return M;
}

}  // namespace etaspec::cli
