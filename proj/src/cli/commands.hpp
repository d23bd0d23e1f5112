#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace etaspec::cli {

// Exit codes shared by all verbs.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitComplexSpectrum = 3;
inline constexpr int kExitConditionCap = 4;
inline constexpr int kExitNumerical = 5;

int cmd_spectrum(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
int cmd_evolve(const RunConfig& cfg);
int cmd_equivalent(const RunConfig& cfg);

/// Full argv entry point (verb dispatch, --config/--out/--override, error →
/// exit-code mapping). Used by main() and by tests.
int run(const std::vector<std::string>& args);

}  // namespace etaspec::cli
