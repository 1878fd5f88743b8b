#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bipop/config.hpp"

namespace bipop {

/// Order range and sampling knobs shared by the suites; a negative bound
/// selects the suite's default.
struct SuiteParams {
  int n_lo = -1;
  int n_hi = -1;
  int samples = 500;
  std::uint64_t seed = 20241014;
};

/// Stable suite names: star-extremal, quadbook, maximality, edgecount,
/// census5, rowsum, cert, g1g2, hcases, rotation, monotone, floor,
/// structure, contribution, pendant.
std::vector<std::string> suite_names();

/// Report {"suite", "params", "pass", "checked", "violations", "details"}.
/// "pass" is false iff a checked inequality or equivalence failed. The
/// report is deterministic for fixed inputs.
nlohmann::json run_suite(std::string_view name, const SuiteParams& params, const Config& cfg = {});

}  // namespace bipop
