#pragma once

// Text interchange format for complex matrices: a "rows cols" header, then
// row-major "re im" pairs, whitespace-separated, 17 significant digits.

#include <string>

#include "etaspec/types.hpp"

namespace etaspec::cli {

void write_matrix(const std::string& path, const ComplexMatrix& M);
ComplexMatrix read_matrix(const std::string& path);

}  // namespace etaspec::cli
