#include <cstdlib>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "../src/cli/commands.hpp"

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("ETASPEC_THREADS")) {
    // Must happen before the first BLAS call.
    setenv("OPENBLAS_NUM_THREADS", threads, 0);
    setenv("OMP_NUM_THREADS", threads, 0);
    Eigen::setNbThreads(std::atoi(threads));
  }
  std::vector<std::string> args(argv + 1, argv + argc);
  return etaspec::cli::run(args);
}
